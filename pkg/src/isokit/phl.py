"""Partial Horn logic: signatures, Horn sequents, finite partial structures.

Only semantics is implemented. A sequent is decided on a finite structure by
enumerating every assignment of its context; there is no proof search.

Equations are strong (Kleene) equalities: ``t1 = t2`` holds under an
assignment only when both sides are defined and equal, and ``t↓`` is
written as the equation ``t = t``.
"""

import itertools
from dataclasses import dataclass, field

from isokit import terms as T
from isokit.errors import InputError
from isokit.sexpr import TermReader, format_term


@dataclass(frozen=True)
class FunSymbol:
    name: str
    args: tuple
    result: str

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Signature:
    sorts: tuple
    funs: tuple

    def __post_init__(self):
        object.__setattr__(self, "sorts", tuple(self.sorts))
        object.__setattr__(self, "funs", tuple(self.funs))
        if len(set(self.sorts)) != len(self.sorts):
            raise InputError("duplicate sort names")
        names = [f.name for f in self.funs]
        if len(set(names)) != len(names):
            raise InputError("duplicate function symbol names")
        known = set(self.sorts)
        for f in self.funs:
            for s in f.args + (f.result,):
                if s not in known:
                    raise InputError(f"function symbol {f.name} uses unknown sort {s!r}")
        object.__setattr__(self, "_by_name", {f.name: f for f in self.funs})

    def fun(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise InputError(f"unknown function symbol {name!r}") from None

    def has_fun(self, name):
        return name in self._by_name

    def symbol_table(self):
        return {f.name: (f.args, f.result) for f in self.funs}

    def check_term(self, t):
        """Raise InputError unless ``t`` is well-sorted over this signature."""
        for u in T.subterms(t):
            if u.kind == "var":
                if u.sort not in self.sorts:
                    raise InputError(f"variable {u.head} has unknown sort {u.sort!r}")
            elif u.kind == "app":
                f = self.fun(u.head)
                if f.result != u.sort or tuple(a.sort for a in u.args) != f.args:
                    raise InputError(f"ill-sorted application of {u.head}")
            else:
                raise InputError(f"{u.kind} nodes are not terms over a bare signature")

    def reader(self, variables=None):
        return TermReader(self.symbol_table(), variables=variables)


@dataclass(frozen=True)
class HornFormula:
    """Conjunction of equations; the empty conjunction is ⊤."""

    equations: tuple = ()

    def __post_init__(self):
        eqs = tuple((a, b) for a, b in self.equations)
        for a, b in eqs:
            if a.sort != b.sort:
                raise InputError(
                    f"equation sides have different sorts: {format_term(a)} : {a.sort}, "
                    f"{format_term(b)} : {b.sort}")
        object.__setattr__(self, "equations", eqs)

    @classmethod
    def defined(cls, *ts):
        return cls(tuple((t, t) for t in ts))

    def variables(self):
        return {u for a, b in self.equations for side in (a, b)
                for u in T.subterms(side) if u.kind == "var"}

    def __str__(self):
        if not self.equations:
            return "⊤"
        parts = []
        for a, b in self.equations:
            if a is b:
                parts.append(f"{format_term(a)}↓")
            else:
                parts.append(f"{format_term(a)} = {format_term(b)}")
        return " ∧ ".join(parts)


TOP = HornFormula()


@dataclass(frozen=True)
class HornSequent:
    context: tuple
    lhs: HornFormula
    rhs: HornFormula
    name: str = ""

    def __post_init__(self):
        ctx = tuple((n, s) for n, s in self.context)
        object.__setattr__(self, "context", ctx)
        names = [n for n, _ in ctx]
        if len(set(names)) != len(names):
            raise InputError("repeated variable in sequent context")
        declared = set(ctx)
        for v in self.lhs.variables() | self.rhs.variables():
            if (v.head, v.sort) not in declared:
                raise InputError(f"free variable {v.head} : {v.sort} is not in the context")

    def check_over(self, sig):
        for _, s in self.context:
            if s not in sig.sorts:
                raise InputError(f"context sort {s!r} is not in the signature")
        for a, b in self.lhs.equations + self.rhs.equations:
            sig.check_term(a)
            sig.check_term(b)

    def __str__(self):
        ctx = ", ".join(f"{n}:{s}" for n, s in self.context)
        return f"{self.lhs} ⊢[{ctx}] {self.rhs}"


@dataclass(frozen=True)
class QuasiEquationalTheory:
    signature: Signature
    axioms: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "axioms", tuple(self.axioms))
        for ax in self.axioms:
            ax.check_over(self.signature)


@dataclass(frozen=True)
class PartialStructure:
    """Finite carriers per sort and partial operation tables.

    ``funs[name]`` maps argument tuples (of element names) to the result;
    missing keys are undefined.
    """

    signature: Signature
    carriers: dict
    funs: dict = field(default_factory=dict)

    def __post_init__(self):
        sig = self.signature
        carriers = {s: tuple(self.carriers.get(s, ())) for s in sig.sorts}
        extra = set(self.carriers) - set(sig.sorts)
        if extra:
            raise InputError(f"carriers given for unknown sorts {sorted(extra)}")
        for s, elems in carriers.items():
            if len(set(elems)) != len(elems):
                raise InputError(f"carrier of {s} has repeated elements")
        sets = {s: frozenset(e) for s, e in carriers.items()}
        funs = {}
        extra = set(self.funs) - {f.name for f in sig.funs}
        if extra:
            raise InputError(f"tables given for unknown symbols {sorted(extra)}")
        for f in sig.funs:
            table = {tuple(k): v for k, v in self.funs.get(f.name, {}).items()}
            for args, out in table.items():
                if len(args) != len(f.args) or any(a not in sets[s] for a, s in zip(args, f.args)):
                    raise InputError(f"{f.name}: argument tuple {args} is outside the carriers")
                if out not in sets[f.result]:
                    raise InputError(f"{f.name}{args} = {out!r} is outside the carrier of {f.result}")
            funs[f.name] = table
        object.__setattr__(self, "carriers", carriers)
        object.__setattr__(self, "funs", funs)
        object.__setattr__(self, "_sets", sets)

    def contains(self, sort, element):
        return element in self._sets[sort]

    def apply(self, name, args):
        return self.funs[name].get(tuple(args))

    def with_entry(self, name, args, value):
        """Copy with one table entry changed; ``value=None`` makes it undefined."""
        funs = {k: dict(v) for k, v in self.funs.items()}
        if value is None:
            funs[name].pop(tuple(args), None)
        else:
            funs[name][tuple(args)] = value
        return PartialStructure(self.signature, self.carriers, funs)


@dataclass
class SequentResult:
    holds: bool
    witness: dict = None

    def __bool__(self):
        return self.holds


@dataclass
class ModelReport:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    def to_json(self):
        return {
            "ok": self.ok,
            "failures": [
                {"axiom": idx, "name": ax.name, "sequent": str(ax), "witness": w}
                for idx, ax, w in self.failures
            ],
        }


def eval_term(M, t, env):
    """Value of ``t`` under ``env`` in ``M``, or None when undefined.

    A variable missing from ``env`` or bound outside its carrier is an
    input error, not undefinedness.
    """
    if t.kind == "var":
        if t.head not in env:
            raise InputError(f"variable {t.head} is unassigned")
        v = env[t.head]
        if not M.contains(t.sort, v):
            raise InputError(f"{t.head} : {t.sort} is assigned {v!r}, which is not in that carrier")
        return v
    if t.kind != "app":
        raise InputError(f"cannot evaluate a {t.kind} node in a bare structure")
    vals = []
    for a in t.args:
        v = eval_term(M, a, env)
        if v is None:
            return None
        vals.append(v)
    return M.funs[t.head].get(tuple(vals))


def holds(M, phi, env):
    for a, b in phi.equations:
        va = eval_term(M, a, env)
        if va is None:
            return False
        vb = eval_term(M, b, env)
        if vb is None or va != vb:
            return False
    return True


def assignments(M, context):
    names = [n for n, _ in context]
    for combo in itertools.product(*(M.carriers[s] for _, s in context)):
        yield dict(zip(names, combo))


def check_sequent(M, s):
    """Decide ``M ⊨ s`` by enumeration; on failure the witness is one violating assignment."""
    s.check_over(M.signature)
    for env in assignments(M, s.context):
        if holds(M, s.lhs, env) and not holds(M, s.rhs, env):
            return SequentResult(False, env)
    return SequentResult(True)


def check_model(M, theory):
    if M.signature != theory.signature:
        raise InputError("structure and theory have different signatures")
    failures = []
    for idx, ax in enumerate(theory.axioms):
        r = check_sequent(M, ax)
        if not r:
            failures.append((idx, ax, r.witness))
    return ModelReport(not failures, failures)


def parse_sequent(sig, context, lhs, rhs, name=""):
    """Build a sequent from s-expression equation pairs.

    ``lhs``/``rhs`` are lists of ``[t1, t2]`` string pairs, or single strings
    meaning ``t↓``.
    """
    reader = sig.reader(dict(context))

    def formula(items):
        eqs = []
        for item in items:
            if isinstance(item, str):
                t = reader.parse(item)
                eqs.append((t, t))
            else:
                a, b = item
                ta = reader.parse(a)
                eqs.append((ta, reader.parse(b, ta.sort)))
        return HornFormula(tuple(eqs))

    return HornSequent(tuple(context), formula(lhs), formula(rhs), name)


def group_signature():
    return Signature(("X",), (
        FunSymbol("m", ("X", "X"), "X"),
        FunSymbol("e", (), "X"),
        FunSymbol("inv", ("X",), "X"),
    ))


def group_theory():
    """The quasi-equational theory of groups: totality, associativity, unit, inverse."""
    sig = group_signature()
    xs = [("x", "X")]
    xys = [("x", "X"), ("y", "X")]
    xyz = xys + [("z", "X")]
    axioms = [
        parse_sequent(sig, xys, [], ["(m x y)"], "m total"),
        parse_sequent(sig, [], [], ["e"], "e total"),
        parse_sequent(sig, xs, [], ["(inv x)"], "inv total"),
        parse_sequent(sig, xyz, [], [["(m (m x y) z)", "(m x (m y z))"]], "associativity"),
        parse_sequent(sig, xs, [], [["(m x e)", "x"]], "right unit"),
        parse_sequent(sig, xs, [], [["(m e x)", "x"]], "left unit"),
        parse_sequent(sig, xs, [], [["(m x (inv x))", "e"]], "right inverse"),
        parse_sequent(sig, xs, [], [["(m (inv x) x)", "e"]], "left inverse"),
    ]
    return QuasiEquationalTheory(sig, tuple(axioms))
