"""Finite groups as Cayley tables.

Elements are the indices ``0..n-1``; ``names[k]`` is the printable name of
element ``k`` and ``items[k]`` an optional payload (an automorphism, a limit
tuple, ...) when the group was built from Python objects.
"""

import itertools
from dataclasses import dataclass

from isokit import kernels
from isokit.errors import InputError, ValidationError


class FinGroup:
    def __init__(self, names, mul, unit, items=None, name=""):
        n = len(names)
        self.names = tuple(names)
        self.mul = tuple(tuple(row) for row in mul)
        self.unit = unit
        self.items = tuple(items) if items is not None else self.names
        self.name = name
        self.flat = [v for row in self.mul for v in row]
        inv = [None] * n
        for a in range(n):
            for b in range(n):
                if self.mul[a][b] == unit:
                    inv[a] = b
                    break
        self.inv = tuple(inv)
        self._index = {nm: k for k, nm in enumerate(self.names)}

    @classmethod
    def from_table(cls, names, table, unit=None, name=""):
        """Validate a Cayley table given by element names and build the group."""
        names = list(names)
        n = len(names)
        if n == 0:
            raise ValidationError("a group needs at least one element",
                                  [{"law": "nonempty", "witness": []}])
        if len(set(names)) != n:
            raise ValidationError("duplicate element names", [{"law": "elements"}])
        index = {nm: k for k, nm in enumerate(names)}
        if len(table) != n or any(len(row) != n for row in table):
            raise ValidationError("multiplication table must be n x n",
                                  [{"law": "shape", "witness": [len(table)]}])
        mul = []
        for row in table:
            r = []
            for v in row:
                if v not in index:
                    raise InputError(f"table entry {v!r} is not an element")
                r.append(index[v])
            mul.append(r)
        if unit is None:
            cands = [u for u in range(n) if all(mul[u][a] == a == mul[a][u] for a in range(n))]
            if not cands:
                raise ValidationError("no unit element", [{"law": "unit"}])
            u = cands[0]
        else:
            if unit not in index:
                raise InputError(f"unit {unit!r} is not an element")
            u = index[unit]
        violations = group_law_violations(mul, u, names)
        if violations:
            raise ValidationError("table is not a group", violations)
        return cls(names, mul, u, name=name)

    @classmethod
    def from_items(cls, items, mul_fn, names=None, name=""):
        """Group on a finite list of hashable items closed under ``mul_fn``.

        The unit is found from the table; closure and the group laws are
        asserted, so this is also a consistency check on the caller.
        """
        items = list(items)
        index = {it: k for k, it in enumerate(items)}
        mul = []
        for a in items:
            row = []
            for b in items:
                c = mul_fn(a, b)
                if c not in index:
                    raise ValidationError("set is not closed under the product",
                                          [{"law": "closure", "witness": [str(a), str(b)]}])
                row.append(index[c])
            mul.append(row)
        n = len(items)
        units = [u for u in range(n) if all(mul[u][a] == a == mul[a][u] for a in range(n))]
        if not units:
            raise ValidationError("no unit element", [{"law": "unit"}])
        names = list(names) if names is not None else [str(it) for it in items]
        violations = group_law_violations(mul, units[0], names)
        if violations:
            raise ValidationError("not a group", violations)
        return cls(names, mul, units[0], items=items, name=name)

    def __len__(self):
        return len(self.names)

    @property
    def order(self):
        return len(self.names)

    def __repr__(self):
        return f"FinGroup({self.name or '?'}, order {self.order})"

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise InputError(f"{name!r} is not an element of {self.name or 'the group'}") from None

    def index_of_item(self, item):
        return self.items.index(item)

    def m(self, a, b):
        return self.mul[a][b]

    def power(self, a, k):
        if k < 0:
            a, k = self.inv[a], -k
        r = self.unit
        for _ in range(k):
            r = self.mul[r][a]
        return r

    def is_abelian(self):
        n = self.order
        return all(self.mul[a][b] == self.mul[b][a] for a in range(n) for b in range(a + 1, n))

    def subgroup(self, indices, name=""):
        """The subgroup on ``indices`` (assumed closed); items are the indices in self."""
        idx = sorted(indices)
        pos = {a: k for k, a in enumerate(idx)}
        mul = [[pos[self.mul[a][b]] for b in idx] for a in idx]
        return FinGroup([self.names[a] for a in idx], mul, pos[self.unit], items=idx, name=name)

    def table_names(self):
        return [[self.names[v] for v in row] for row in self.mul]

    def to_json(self):
        return {"elements": list(self.names), "unit": self.names[self.unit],
                "mul": self.table_names()}


def group_law_violations(mul, unit, names=None):
    n = len(mul)
    nm = names or [str(k) for k in range(n)]
    out = []
    for a in range(n):
        if mul[unit][a] != a or mul[a][unit] != a:
            out.append({"law": "unit", "witness": [nm[a]]})
            break
    for a in range(n):
        if not any(mul[a][b] == unit and mul[b][a] == unit for b in range(n)):
            out.append({"law": "inverse", "witness": [nm[a]]})
            break
    for a, b, c in itertools.product(range(n), repeat=3):
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            out.append({"law": "associativity", "witness": [nm[a], nm[b], nm[c]]})
            break
    return out


@dataclass(frozen=True, eq=False)
class GroupHom:
    """``images[a]`` is the image of element ``a`` of ``source``."""

    source: FinGroup
    target: FinGroup
    images: tuple

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(self.images))

    def __call__(self, a):
        return self.images[a]

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and self.source is other.source
                and self.target is other.target and self.images == other.images)

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"GroupHom({self.as_names()})"

    def violation(self):
        """None if this is a homomorphism, else a witness pair of element names."""
        if len(self.images) != self.source.order:
            return ("length", len(self.images))
        if any(not 0 <= v < self.target.order for v in self.images):
            return ("range", None)
        w = kernels.hom_violation(self.source.flat, self.source.order,
                                  self.target.flat, self.target.order, list(self.images))
        if w is None:
            return None
        return (self.source.names[w[0]], self.source.names[w[1]])

    def is_bijective(self):
        return self.source.order == self.target.order and len(set(self.images)) == len(self.images)

    def then(self, other):
        """``other ∘ self``."""
        return GroupHom(self.source, other.target, tuple(other.images[v] for v in self.images))

    def as_names(self):
        s, t = self.source, self.target
        return {s.names[a]: t.names[v] for a, v in enumerate(self.images)}

    @classmethod
    def from_names(cls, source, target, mapping):
        missing = [nm for nm in source.names if nm not in mapping]
        if missing:
            raise InputError(f"homomorphism table misses {missing}")
        return cls(source, target, tuple(target.index(mapping[nm]) for nm in source.names))


def compose(g, f):
    """``g ∘ f``."""
    return f.then(g)


def identity_hom(G):
    return GroupHom(G, G, tuple(range(G.order)))


def inn(G, s):
    """Conjugation ``g ↦ s g s⁻¹``; ``s`` is an element index or name."""
    if isinstance(s, str):
        s = G.index(s)
    if not 0 <= s < G.order:
        raise InputError(f"{s!r} is not an element of {G.name or 'the group'}")
    si = G.inv[s]
    return GroupHom(G, G, tuple(G.mul[G.mul[s][g]][si] for g in range(G.order)))


def automorphism_group(G):
    """Aut(G); items are GroupHom objects in lexicographic order of their image lists."""
    auts = [GroupHom(G, G, tuple(p)) for p in kernels.automorphisms(G.flat, G.order, G.unit)]
    return FinGroup.from_items(auts, compose, names=[f"aut{k}" for k in range(len(auts))],
                               name=f"Aut({G.name})")


def center(G):
    n = G.order
    zs = [z for z in range(n) if all(G.mul[z][g] == G.mul[g][z] for g in range(n))]
    return G.subgroup(zs, name=f"Z({G.name})")


def inner_automorphisms(G):
    """The distinct inn(s), in order of first conjugator."""
    seen = {}
    for s in range(G.order):
        h = inn(G, s)
        seen.setdefault(h.images, h)
    return list(seen.values())


def limit_of_diagram(J, F):
    """lim F as the subgroup of the product of the F(i) matched by every F(f).

    Items are tuples of element indices in J's object order.
    """
    sizes = [F.at(o).order for o in J.objects]
    edges = []
    for mname in (m.name for m in J.morphisms):
        mm = J.morphism(mname)
        edges.append((J.obj_index[mm.dom], J.obj_index[mm.cod], list(F.arrow(mname).images)))
    tuples = kernels.limit_tuples(sizes, edges)
    groups = [F.at(o) for o in J.objects]

    def mul(a, b):
        return tuple(G.mul[x][y] for G, x, y in zip(groups, a, b))

    names = ["(" + ", ".join(G.names[x] for G, x in zip(groups, t)) + ")" for t in tuples]
    return FinGroup.from_items(tuples, mul, names=names, name="lim F")


def pullback(f, g):
    """Pairs ``(a, b)`` with ``f(a) == g(b)`` for a cospan of homomorphisms."""
    A, B = f.source, g.source

    pairs = [(a, b) for a in range(A.order) for b in range(B.order) if f(a) == g(b)]

    def mul(p, q):
        return (A.mul[p[0]][q[0]], B.mul[p[1]][q[1]])

    names = [f"({A.names[a]}, {B.names[b]})" for a, b in pairs]
    return FinGroup.from_items(pairs, mul, names=names, name="pullback")


def equalizer(f, g):
    A = f.source
    return A.subgroup([a for a in range(A.order) if f(a) == g(a)], name="equalizer")
