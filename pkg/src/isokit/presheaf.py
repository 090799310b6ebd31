"""Covariant functors J → Group ("presheaves" of groups) and natural transformations."""

from isokit import kernels
from isokit.errors import InputError, ValidationError
from isokit.fingroup import FinGroup, GroupHom, automorphism_group, identity_hom


class GroupPresheaf:
    def __init__(self, base, on_objects, on_morphisms, name=""):
        self.base = base
        self.on_objects = dict(on_objects)
        self.on_morphisms = dict(on_morphisms)
        self.name = name

    def __repr__(self):
        groups = ", ".join(f"{o}: {self.at(o).name or self.at(o).order}" for o in self.base.objects)
        return f"GroupPresheaf({groups})"

    def at(self, obj):
        try:
            return self.on_objects[obj]
        except KeyError:
            raise InputError(f"object {obj!r} is not in the base category") from None

    def arrow(self, f):
        try:
            return self.on_morphisms[f]
        except KeyError:
            raise InputError(f"morphism {f!r} is not in the base category") from None

    def to_json(self):
        return {
            "category": self.base.to_json(),
            "on_objects": {o: self.at(o).to_json() for o in self.base.objects},
            "on_morphisms": {m.name: self.arrow(m.name).as_names() for m in self.base.morphisms},
        }


def functoriality_violations(J, on_objects, on_morphisms):
    out = []
    for o in J.objects:
        if o not in on_objects:
            out.append({"law": "object", "witness": o, "detail": "no group assigned"})
    for m in J.morphisms:
        if m.name not in on_morphisms:
            out.append({"law": "morphism", "witness": m.name, "detail": "no homomorphism assigned"})
    if out:
        return out
    for m in J.morphisms:
        h = on_morphisms[m.name]
        if h.source is not on_objects[m.dom] or h.target is not on_objects[m.cod]:
            out.append({"law": "typing", "witness": m.name})
            continue
        w = h.violation()
        if w is not None:
            out.append({"law": "homomorphism", "witness": [m.name, *w]})
    if out:
        return out
    for o in J.objects:
        h = on_morphisms[J.identity(o)]
        if h.images != tuple(range(on_objects[o].order)):
            G = on_objects[o]
            bad = next(a for a in range(G.order) if h.images[a] != a)
            out.append({"law": "identity", "witness": [J.identity(o), G.names[bad]]})
    for g, f in J.composable_pairs():
        gf = J.compose(g, f)
        lhs = on_morphisms[gf].images
        rhs = on_morphisms[f].then(on_morphisms[g]).images
        if lhs != rhs:
            G = on_objects[J.dom(f)]
            bad = next(a for a in range(G.order) if lhs[a] != rhs[a])
            out.append({"law": "composition", "witness": [g, f, G.names[bad]],
                        "detail": f"F({gf}) differs from F({g})∘F({f})"})
    return out


def validate_presheaf(J, on_objects, on_morphisms, name=""):
    violations = functoriality_violations(J, on_objects, on_morphisms)
    if violations:
        raise ValidationError("not a functor", violations)
    return GroupPresheaf(J, on_objects, on_morphisms, name=name)


def constant_presheaf(J, G):
    return GroupPresheaf(J, {o: G for o in J.objects},
                         {m.name: identity_hom(G) for m in J.morphisms})


class NatTrans:
    """Natural transformation between presheaves on the same base."""

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = dict(components)

    def __call__(self, obj):
        return self.components[obj]

    def key(self):
        return tuple(self.components[o].images for o in self.source.base.objects)

    def __eq__(self, other):
        return (isinstance(other, NatTrans) and self.source is other.source
                and self.target is other.target and self.key() == other.key())

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"NatTrans({ {o: c.as_names() for o, c in self.components.items()} })"

    def then(self, other):
        """``other ∘ self``."""
        return NatTrans(self.source, other.target,
                        {o: self.components[o].then(other.components[o]) for o in self.components})

    def to_json(self):
        return {"components": {o: self.components[o].as_names() for o in self.source.base.objects}}


def naturality_violations(mu):
    F, G = mu.source, mu.target
    J = F.base
    if G.base is not J and G.base.to_json() != J.to_json():
        return [{"law": "base", "witness": "source and target have different bases"}]
    out = []
    for o in J.objects:
        c = mu.components.get(o)
        if c is None:
            out.append({"law": "component", "witness": o})
        elif c.source is not F.at(o) or c.target is not G.at(o):
            out.append({"law": "typing", "witness": o})
        elif c.violation() is not None:
            out.append({"law": "homomorphism", "witness": [o, *c.violation()]})
    if out:
        return out
    for m in J.morphisms:
        a = F.arrow(m.name).then(mu(m.cod)).images
        b = mu(m.dom).then(G.arrow(m.name)).images
        if a != b:
            S = F.at(m.dom)
            bad = next(x for x in range(S.order) if a[x] != b[x])
            out.append({"law": "naturality", "witness": [m.name, S.names[bad]]})
    return out


def validate_nat_trans(source, target, components):
    mu = NatTrans(source, target, components)
    violations = naturality_violations(mu)
    if violations:
        raise ValidationError("not a natural transformation", violations)
    return mu


def identity_nat(F):
    return NatTrans(F, F, {o: identity_hom(F.at(o)) for o in F.base.objects})


def nat_auts(F):
    """All natural automorphisms of F, as a group under composition.

    Components are drawn from Aut(F(i)); the search fixes components in
    object order and prunes with every naturality square whose ends are
    both fixed.
    """
    J = F.base
    auts = [automorphism_group(F.at(o)).items for o in J.objects]
    cands = [[list(a.images) for a in per] for per in auts]
    edges = [(J.obj_index[m.dom], J.obj_index[m.cod], list(F.arrow(m.name).images))
             for m in J.morphisms]
    families = kernels.natural_families(cands, edges)
    nats = [NatTrans(F, F, {o: auts[k][choice[k]] for k, o in enumerate(J.objects)})
            for choice in families]

    def mul(a, b):
        return b.then(a)

    return FinGroup.from_items(nats, mul, names=[f"nat{k}" for k in range(len(nats))],
                               name="Aut(F)")
