"""The theory T^J whose models are the functors J → T-mod.

Generated names use '@' as a reserved separator: sort ``A@i``, per-object
operation ``g@i``, transition symbol ``alpha@f@A``. Names in the base
signature and category may therefore not contain '@'.
"""

from dataclasses import dataclass

from isokit import terms as T
from isokit.errors import InputError, ValidationError
from isokit.fingroup import FinGroup, GroupHom
from isokit.phl import (
    TOP, FunSymbol, HornFormula, HornSequent, PartialStructure, QuasiEquationalTheory,
    Signature, check_model, group_signature,
)
from isokit.presheaf import GroupPresheaf, validate_presheaf

SEP = "@"


def _check_name(kind, name):
    if SEP in name:
        raise InputError(f"{kind} name {name!r} contains the reserved separator '{SEP}'")


class SigmaJ:
    """Σ^J for a base signature Σ and a finite category J."""

    def __init__(self, base, J):
        for s in base.sorts:
            _check_name("sort", s)
        for f in base.funs:
            _check_name("function symbol", f.name)
        for o in J.objects:
            _check_name("object", o)
        for m in J.morphisms:
            _check_name("morphism", m.name)
        self.base = base
        self.J = J
        sorts = [self.sort(A, i) for i in J.objects for A in base.sorts]
        alphas = [FunSymbol(self.alpha(m.name, A), (self.sort(A, m.dom),), self.sort(A, m.cod))
                  for m in J.morphisms for A in base.sorts]
        locals_ = [FunSymbol(self.local(g.name, i), tuple(self.sort(a, i) for a in g.args),
                             self.sort(g.result, i))
                   for i in J.objects for g in base.funs]
        self.signature = Signature(sorts, alphas + locals_)
        self._alpha_of = {self.alpha(m.name, A): (m.name, A) for m in J.morphisms for A in base.sorts}
        self._local_of = {self.local(g.name, i): (g.name, i) for i in J.objects for g in base.funs}
        self._sort_of = {self.sort(A, i): (A, i) for i in J.objects for A in base.sorts}

    @staticmethod
    def sort(A, i):
        return f"{A}{SEP}{i}"

    @staticmethod
    def local(g, i):
        return f"{g}{SEP}{i}"

    @staticmethod
    def alpha(f, A):
        return f"alpha{SEP}{f}{SEP}{A}"

    def alpha_of(self, symbol):
        """(morphism, base sort) for a transition symbol, else None."""
        return self._alpha_of.get(symbol)

    def local_of(self, symbol):
        """(base symbol, object) for a per-object operation, else None."""
        return self._local_of.get(symbol)

    def sort_of(self, sort):
        try:
            return self._sort_of[sort]
        except KeyError:
            raise InputError(f"{sort!r} is not a sort of Σ^J") from None

    def n_alpha(self):
        return len(self._alpha_of)

    def n_local(self):
        return len(self._local_of)


def translate(sigj, t, i):
    """ρ^i: rename every sort A to A@i and every symbol g to g@i."""
    if t.kind == "var":
        return T.var(t.head, sigj.sort(t.sort, i))
    if t.kind == "app":
        return T.app(sigj.local(t.head, i), [translate(sigj, a, i) for a in t.args],
                     sigj.sort(t.sort, i))
    raise InputError(f"cannot translate a {t.kind} node")


def translate_formula(sigj, phi, i):
    return HornFormula(tuple((translate(sigj, a, i), translate(sigj, b, i)) for a, b in phi.equations))


@dataclass
class TJ:
    sigj: SigmaJ
    base_theory: QuasiEquationalTheory
    theory: QuasiEquationalTheory
    families: dict

    def counts(self):
        return {
            "sorts": len(self.sigj.signature.sorts),
            "function_symbols": len(self.sigj.signature.funs),
            "axioms": {k: len(v) for k, v in self.families.items()},
        }


def build_tj(theory, J):
    """T^J: totality, identity, composition and homomorphism axioms for the
    transition symbols, plus a ρ^i copy of every axiom of T at every object."""
    sigj = SigmaJ(theory.signature, J)
    base = theory.signature
    fam = {"totality": [], "identity": [], "composition": [], "hom": [], "translated": []}
    axioms = []

    def add(kind, s):
        fam[kind].append(len(axioms))
        axioms.append(s)

    def alpha_app(f, A, arg):
        m = J.morphism(f)
        return T.app(sigj.alpha(f, A), [arg], sigj.sort(A, m.cod))

    for m in J.morphisms:
        for A in base.sorts:
            x = T.var("x", sigj.sort(A, m.dom))
            add("totality", HornSequent((("x", x.sort),), TOP, HornFormula.defined(alpha_app(m.name, A, x)),
                                        f"alpha_{m.name}^{A} total"))
    for i in J.objects:
        for A in base.sorts:
            x = T.var("x", sigj.sort(A, i))
            idm = J.identity(i)
            add("identity", HornSequent((("x", x.sort),), TOP,
                                        HornFormula(((alpha_app(idm, A, x), x),)),
                                        f"alpha_{idm}^{A} = id"))
    for g, f in J.composable_pairs():
        for A in base.sorts:
            x = T.var("x", sigj.sort(A, J.dom(f)))
            lhs = alpha_app(g, A, alpha_app(f, A, x))
            rhs = alpha_app(J.compose(g, f), A, x)
            add("composition", HornSequent((("x", x.sort),), TOP, HornFormula(((lhs, rhs),)),
                                           f"alpha_{g}∘alpha_{f} = alpha_{J.compose(g, f)} at {A}"))
    for m in J.morphisms:
        i, j = m.dom, m.cod
        for g in base.funs:
            xs = [T.var(f"x{k + 1}", sigj.sort(a, i)) for k, a in enumerate(g.args)]
            gi = T.app(sigj.local(g.name, i), xs, sigj.sort(g.result, i))
            gj = T.app(sigj.local(g.name, j), [alpha_app(m.name, a, x) for a, x in zip(g.args, xs)],
                       sigj.sort(g.result, j))
            add("hom", HornSequent(tuple((x.head, x.sort) for x in xs), HornFormula.defined(gi),
                                   HornFormula(((alpha_app(m.name, g.result, gi), gj),)),
                                   f"alpha_{m.name} preserves {g.name}"))
    for i in J.objects:
        for k, ax in enumerate(theory.axioms):
            ctx = tuple((n, sigj.sort(s, i)) for n, s in ax.context)
            add("translated", HornSequent(ctx, translate_formula(sigj, ax.lhs, i),
                                          translate_formula(sigj, ax.rhs, i),
                                          f"{ax.name or k}@{i}"))
    th = QuasiEquationalTheory(sigj.signature, tuple(axioms))
    return TJ(sigj, theory, th, fam)


def expected_counts(theory, J):
    """Closed-form sizes of Σ^J and of each axiom family of T^J."""
    ns, nf, na = len(theory.signature.sorts), len(theory.signature.funs), len(theory.axioms)
    no, nm = len(J.objects), len(J.morphisms)
    npairs = len(J.composable_pairs())
    return {
        "sorts": ns * no,
        "function_symbols": nm * ns + no * nf,
        "axioms": {"totality": nm * ns, "identity": no * ns, "composition": npairs * ns,
                   "hom": nm * nf, "translated": no * na},
    }


@dataclass
class Functor:
    """A functor J → T-mod with finite components.

    ``objects[i]`` is a partial Σ-structure; ``arrows[f][A]`` maps elements
    of sort A at dom(f) to sort A at cod(f).
    """

    J: object
    signature: Signature
    objects: dict
    arrows: dict


def component(tj, M, i):
    """M^i: carriers M_{A@i}, operations (g@i)^M."""
    sigj = tj.sigj
    base = sigj.base
    return PartialStructure(
        base,
        {A: M.carriers[sigj.sort(A, i)] for A in base.sorts},
        {g.name: dict(M.funs[sigj.local(g.name, i)]) for g in base.funs},
    )


def model_to_functor(tj, M):
    """F^M, after checking that M is a T^J-model."""
    report = check_model(M, tj.theory)
    if not report:
        raise ValidationError("structure is not a model of T^J", report.to_json()["failures"])
    sigj = tj.sigj
    J = sigj.J
    objects = {i: component(tj, M, i) for i in J.objects}
    arrows = {}
    for m in J.morphisms:
        arrows[m.name] = {A: {a[0]: v for a, v in M.funs[sigj.alpha(m.name, A)].items()}
                          for A in sigj.base.sorts}
    return Functor(J, sigj.base, objects, arrows)


def functor_to_model(tj, F):
    """M^F: carriers F(i)_A at A@i, transition symbols from F(f), operations from F(i)."""
    sigj = tj.sigj
    J = sigj.J
    carriers = {}
    funs = {}
    for i in J.objects:
        S = F.objects[i]
        for A in sigj.base.sorts:
            carriers[sigj.sort(A, i)] = S.carriers[A]
        for g in sigj.base.funs:
            funs[sigj.local(g.name, i)] = dict(S.funs[g.name])
    for m in J.morphisms:
        for A in sigj.base.sorts:
            funs[sigj.alpha(m.name, A)] = {(a,): v for a, v in F.arrows[m.name][A].items()}
    return PartialStructure(sigj.signature, carriers, funs)


# ------------------------------------------------------------ groups


def group_structure(G):
    """A finite group as a total structure over the group signature."""
    n = G.names
    return PartialStructure(group_signature(), {"X": n}, {
        "m": {(n[a], n[b]): n[G.mul[a][b]] for a in range(G.order) for b in range(G.order)},
        "e": {(): n[G.unit]},
        "inv": {(n[a],): n[G.inv[a]] for a in range(G.order)},
    })


def structure_to_group(S, name=""):
    elems = S.carriers["X"]
    table = [[S.funs["m"].get((a, b)) for b in elems] for a in elems]
    if any(v is None for row in table for v in row):
        raise ValidationError("multiplication is not total", [{"law": "m total"}])
    unit = S.funs["e"].get(())
    return FinGroup.from_table(elems, table, unit=unit, name=name)


def presheaf_to_functor(F):
    objects = {i: group_structure(F.at(i)) for i in F.base.objects}
    arrows = {m.name: {"X": F.arrow(m.name).as_names()} for m in F.base.morphisms}
    return Functor(F.base, group_signature(), objects, arrows)


def functor_to_presheaf(Fn):
    groups = {i: structure_to_group(S, name=str(i)) for i, S in Fn.objects.items()}
    homs = {}
    for m in Fn.J.morphisms:
        homs[m.name] = GroupHom.from_names(groups[m.dom], groups[m.cod], Fn.arrows[m.name]["X"])
    return validate_presheaf(Fn.J, groups, homs)


def presheaf_to_model(tj, F):
    return functor_to_model(tj, presheaf_to_functor(F))


def model_to_presheaf(tj, M):
    return functor_to_presheaf(model_to_functor(tj, M))
