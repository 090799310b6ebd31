"""Finite categories given by explicit composition tables."""

import itertools
from dataclasses import dataclass

from isokit.errors import InputError, ValidationError


@dataclass(frozen=True)
class Morphism:
    name: str
    dom: str
    cod: str


class FinCategory:
    """A validated finite category.

    Morphisms are globally named. ``compose(g, f)`` is ``g ∘ f`` and is
    defined exactly when ``cod(f) == dom(g)``.
    """

    def __init__(self, objects, morphisms, identities, composition):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.identities = dict(identities)
        self._comp = dict(composition)
        self._by_name = {m.name: m for m in self.morphisms}
        self.obj_index = {o: k for k, o in enumerate(self.objects)}
        self.mor_index = {m.name: k for k, m in enumerate(self.morphisms)}

    def __repr__(self):
        return f"FinCategory({len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def morphism(self, name):
        try:
            return self._by_name[name]
        except KeyError:
            raise InputError(f"unknown morphism {name!r}") from None

    def dom(self, f):
        return self.morphism(f).dom

    def cod(self, f):
        return self.morphism(f).cod

    def identity(self, obj):
        return self.identities[obj]

    def compose(self, g, f):
        """``g ∘ f``."""
        try:
            return self._comp[(g, f)]
        except KeyError:
            raise InputError(f"{g} ∘ {f} is not composable") from None

    def composable_pairs(self):
        """Pairs ``(g, f)`` with ``g ∘ f`` defined, in table order."""
        return list(self._comp)

    def hom(self, i, j):
        return [m.name for m in self.morphisms if m.dom == i and m.cod == j]

    def endos(self, i):
        return self.hom(i, i)

    def out_of(self, i):
        """Morphisms with domain i."""
        return [m.name for m in self.morphisms if m.dom == i]

    def into(self, i):
        """Morphisms with codomain i."""
        return [m.name for m in self.morphisms if m.cod == i]

    def is_iso(self, f):
        m = self.morphism(f)
        return any(
            self._comp.get((g, f)) == self.identities[m.dom]
            and self._comp.get((f, g)) == self.identities[m.cod]
            for g in self.hom(m.cod, m.dom)
        )

    def inverse(self, f):
        m = self.morphism(f)
        for g in self.hom(m.cod, m.dom):
            if (self._comp.get((g, f)) == self.identities[m.dom]
                    and self._comp.get((f, g)) == self.identities[m.cod]):
                return g
        raise InputError(f"{f} is not an isomorphism")

    def has_only_trivial_endos(self):
        return all(self.endos(i) == [self.identities[i]] for i in self.objects)

    def to_json(self):
        return {
            "objects": list(self.objects),
            "morphisms": [{"name": m.name, "dom": m.dom, "cod": m.cod} for m in self.morphisms],
            "identities": {o: self.identities[o] for o in self.objects},
            "composition": [[g, f, gf] for (g, f), gf in self._comp.items()],
        }


def validate_category(objects, morphisms, identities, composition):
    """Check the raw tables and build a FinCategory.

    ``morphisms`` is a list of ``(name, dom, cod)``; ``composition`` a list of
    ``(g, f, g∘f)`` triples. Every violated law is reported with a witness.
    """
    objects = list(objects)
    if len(set(objects)) != len(objects):
        raise ValidationError("duplicate objects", [{"law": "objects", "witness": objects}])
    obs = set(objects)
    mors = []
    for entry in morphisms:
        name, dom, cod = entry
        for o in (dom, cod):
            if o not in obs:
                raise InputError(f"morphism {name} refers to unknown object {o!r}")
        mors.append(Morphism(name, dom, cod))
    by_name = {m.name: m for m in mors}
    if len(by_name) != len(mors):
        raise ValidationError("duplicate morphism names", [{"law": "morphisms"}])

    def known(f):
        if f not in by_name:
            raise InputError(f"unknown morphism {f!r}")
        return by_name[f]

    violations = []
    ids = {}
    for o in objects:
        if o not in identities:
            violations.append({"law": "identity", "object": o, "witness": "missing identity"})
            continue
        m = known(identities[o])
        if m.dom != o or m.cod != o:
            violations.append({"law": "identity typing", "object": o, "witness": m.name})
        ids[o] = m.name
    for o in identities:
        if o not in obs:
            raise InputError(f"identity given for unknown object {o!r}")

    comp = {}
    for g, f, gf in composition:
        mg, mf, mgf = known(g), known(f), known(gf)
        if mf.cod != mg.dom:
            violations.append({"law": "composable", "witness": [g, f],
                               "detail": f"cod({f}) = {mf.cod} but dom({g}) = {mg.dom}"})
            continue
        if (g, f) in comp and comp[(g, f)] != gf:
            violations.append({"law": "composition is a function", "witness": [g, f]})
            continue
        if mgf.dom != mf.dom or mgf.cod != mg.cod:
            violations.append({"law": "composite typing", "witness": [g, f, gf]})
        comp[(g, f)] = gf
    for mf in mors:
        for mg in mors:
            if mf.cod == mg.dom and (mg.name, mf.name) not in comp:
                violations.append({"law": "composition total", "witness": [mg.name, mf.name]})
    if violations:
        raise ValidationError("invalid category", violations)

    for m in mors:
        if comp[(ids[m.cod], m.name)] != m.name:
            violations.append({"law": "left identity", "witness": [ids[m.cod], m.name]})
        if comp[(m.name, ids[m.dom])] != m.name:
            violations.append({"law": "right identity", "witness": [m.name, ids[m.dom]]})
    for (g, f), gf in comp.items():
        for h in mors:
            if h.cod != by_name[f].dom:
                continue
            left = comp[(gf, h.name)]
            right = comp[(g, comp[(f, h.name)])]
            if left != right:
                violations.append({"law": "associativity", "witness": [g, f, h.name],
                                   "detail": f"({g}∘{f})∘{h.name} = {left} but "
                                             f"{g}∘({f}∘{h.name}) = {right}"})
    if violations:
        raise ValidationError("invalid category", violations)
    ordered = [(g, f) for g, f, _ in composition]
    return FinCategory(objects, mors, ids, [(k, comp[k]) for k in dict.fromkeys(ordered)])


@dataclass(frozen=True)
class IdNatAut:
    """Natural automorphism of the identity functor; ``components[k]`` sits at ``objects[k]``."""

    components: tuple

    def at(self, J, obj):
        return self.components[J.obj_index[obj]]


def is_natural_identity_family(J, comps):
    for m in J.morphisms:
        a = J.compose(m.name, comps[J.obj_index[m.dom]])
        b = J.compose(comps[J.obj_index[m.cod]], m.name)
        if a != b:
            return False
    return True


def aut_identity_functor(J):
    """All natural automorphisms of Id_J with the pointwise group structure.

    Families are enumerated in lexicographic (object order, morphism order);
    each component must be an isomorphism and every naturality square must
    commute.
    """
    from isokit.fingroup import FinGroup

    cand = [[f for f in J.endos(o) if J.is_iso(f)] for o in J.objects]
    # naturality squares checked as soon as both ends are chosen
    checks = [[] for _ in J.objects]
    for m in J.morphisms:
        a, b = J.obj_index[m.dom], J.obj_index[m.cod]
        checks[max(a, b)].append((m.name, a, b))
    found = []
    cur = [None] * len(J.objects)

    def rec(k):
        if k == len(J.objects):
            found.append(IdNatAut(tuple(cur)))
            return
        for f in cand[k]:
            cur[k] = f
            if all(J.compose(h, cur[a]) == J.compose(cur[b], h) for h, a, b in checks[k]):
                rec(k + 1)

    rec(0)

    def mul(p, q):
        return IdNatAut(tuple(J.compose(a, b) for a, b in zip(p.components, q.components)))

    names = ["{" + ", ".join(f"{o}: {c}" for o, c in zip(J.objects, p.components)) + "}"
             for p in found]
    return FinGroup.from_items(found, mul, names=names)
