"""Covariant isotropy of group presheaves.

An extended inner automorphism of F: J → Group is a pair ``(g, ψ)`` with
``g`` in lim F and ψ a natural automorphism of the identity functor on J.
Along an outgoing natural transformation μ: F → G it acts at object k as

    π_μ(k) = G(ψ(k)) ∘ inn(μ_k(g_k)).

Outgoing arrows may land in a finite presheaf (a ``NatTrans``) or in the
free extension F⟨x⟩ at some object (the unit η). Free extensions are
infinite, so automorphisms of them are represented by their values on
generators; that is exact because a homomorphism out of a free product is
determined there.
"""

from dataclasses import dataclass, field

from isokit import freeext as FX
from isokit.errors import InputError, ValidationError
from isokit.fincat import IdNatAut, aut_identity_functor
from isokit.fingroup import FinGroup, GroupHom, inn, limit_of_diagram
from isokit.presheaf import GroupPresheaf, NatTrans, identity_nat, naturality_violations


# ------------------------------------------------------------ targets


class FiniteTarget:
    """Adapter giving a finite presheaf the target interface."""

    finite = True

    def __init__(self, P):
        self.P = P
        self.base = P.base

    def key(self):
        return ("finite", id(self.P))

    def generators(self, j):
        return list(range(self.P.at(j).order))

    def act(self, h, a):
        return self.P.arrow(h)(a)

    def mul(self, j, a, b):
        return self.P.at(j).mul[a][b]

    def inv(self, j, a):
        return self.P.at(j).inv[a]

    def conj(self, j, c, a):
        G = self.P.at(j)
        return G.mul[G.mul[c][a]][G.inv[c]]

    def apply(self, j, images, a):
        return images[a]

    def fmt(self, j, a):
        return self.P.at(j).names[a]


class FreeTarget:
    """Adapter for F⟨x⟩; elements are normal-form words."""

    finite = False

    def __init__(self, ext):
        self.ext = ext
        self.base = ext.base

    def key(self):
        return ("free", id(self.ext.F), self.ext.obj)

    def generators(self, j):
        return self.ext.generators(j)

    def act(self, h, u):
        return self.ext.act(h, u)

    def mul(self, j, u, v):
        return self.ext.mul(j, u, v)

    def inv(self, j, u):
        return self.ext.inv(j, u)

    def conj(self, j, c, u):
        return self.mul(j, self.mul(j, c, u), self.inv(j, c))

    def apply(self, j, images, u):
        """Extend generator images multiplicatively to the word ``u``."""
        G = self.ext.group(j)
        out = ()
        for s in u:
            if isinstance(s, tuple):
                out = FX.mul(G, out, FX.power(G, images[FX.letter(s[0])], s[1]))
            else:
                out = FX.mul(G, out, images[(s,)])
        return out

    def fmt(self, j, u):
        return FX.format_word(self.ext.group(j), u)


class WordEndo:
    """Endomorphism of F⟨x⟩(k) stored as its values on generators."""

    def __init__(self, target, obj, images):
        self.target = target
        self.obj = obj
        self.images = dict(images)

    def __call__(self, u):
        return self.target.apply(self.obj, self.images, u)

    def then(self, other):
        """``other ∘ self``."""
        return WordEndo(self.target, self.obj, {g: other(v) for g, v in self.images.items()})

    def __eq__(self, other):
        return (isinstance(other, WordEndo) and self.target.key() == other.target.key()
                and self.obj == other.obj and self.images == other.images)

    def __hash__(self):
        return hash(tuple(sorted(self.images.items(), key=repr)))

    def __repr__(self):
        return f"WordEndo({self.obj}, {self.images})"


# ------------------------------------------------------------ slice arrows


class SliceArrow:
    """An arrow of the slice under F: ``source`` is a finite presheaf and
    ``comp(j, a)`` the image of element ``a`` of source(j) in ``target``."""

    def __init__(self, source, target, comp, label):
        self.source = source
        self.target = target
        self.comp = comp
        self.label = label

    def __repr__(self):
        return f"SliceArrow({self.label})"

    def then(self, other):
        """``other ∘ self``; ``other`` must start where self ends."""
        if not self.target.finite or other.source is not self.target.P:
            raise InputError(f"{other.label} does not start at the target of {self.label}")
        c1, c2 = self.comp, other.comp
        return SliceArrow(self.source, other.target, lambda j, a: c2(j, c1(j, a)),
                          f"{other.label}∘{self.label}")


def nat_arrow(mu, label=None):
    return SliceArrow(mu.source, FiniteTarget(mu.target), lambda j, a: mu(j)(a),
                      label or "mu")


def eta_arrow(F, k, ext=None):
    """The unit η: F → F⟨x⟩ with the indeterminate adjoined at ``k``."""
    ext = ext or FX.FreePresheafExtension(F, k)
    return SliceArrow(F, FreeTarget(ext), ext.include, f"eta@{k}")


def identity_arrow(F):
    return nat_arrow(identity_nat(F), "id")


def default_slice(F):
    """{id_F} together with one free-extension unit per object."""
    return [identity_arrow(F)] + [eta_arrow(F, k) for k in F.base.objects]


def _as_arrow(mu):
    return nat_arrow(mu) if isinstance(mu, NatTrans) else mu


# ------------------------------------------------------------ extended inner automorphisms


@dataclass(frozen=True)
class ExtendedInnerAut:
    """The pair ``(g, ψ)``; ``g`` lists element indices in object order."""

    F: GroupPresheaf = field(compare=False, hash=False, repr=False)
    g: tuple
    psi: IdNatAut

    def __mul__(self, other):
        J = self.F.base
        g = tuple(self.F.at(o).mul[a][b] for o, a, b in zip(J.objects, self.g, other.g))
        psi = IdNatAut(tuple(J.compose(p, q)
                             for p, q in zip(self.psi.components, other.psi.components)))
        return ExtendedInnerAut(self.F, g, psi)

    def g_at(self, k):
        return self.g[self.F.base.obj_index[k]]

    def psi_at(self, k):
        return self.psi.at(self.F.base, k)

    def to_json(self):
        J = self.F.base
        return {"g": {o: self.F.at(o).names[a] for o, a in zip(J.objects, self.g)},
                "psi": dict(zip(J.objects, self.psi.components))}


def make_extended(F, g, psi):
    """Build and check an extended inner automorphism from names or indices."""
    J = F.base
    if isinstance(g, dict):
        g = [g[o] for o in J.objects]
    g = tuple(F.at(o).index(a) if isinstance(a, str) else a for o, a in zip(J.objects, g))
    if isinstance(psi, dict):
        psi = [psi[o] for o in J.objects]
    if not isinstance(psi, IdNatAut):
        psi = IdNatAut(tuple(psi))
    for m in J.morphisms:
        if F.arrow(m.name)(g[J.obj_index[m.dom]]) != g[J.obj_index[m.cod]]:
            raise ValidationError("g is not in lim F", [{"law": "limit", "witness": m.name}])
    A = aut_identity_functor(J)
    if psi not in A.items:
        raise ValidationError("psi is not a natural automorphism of the identity functor",
                              [{"law": "naturality", "witness": list(psi.components)}])
    return ExtendedInnerAut(F, g, psi)


def evaluate_at(e, mu, k):
    """π_μ(k) = G(ψ(k)) ∘ inn(μ_k(g_k)) as an automorphism of G(k).

    ``mu`` is a NatTrans out of F or a slice arrow; the result is a GroupHom
    for finite targets and a ``WordEndo`` for free extensions.
    """
    arrow = _as_arrow(mu)
    F = e.F
    if arrow.source is not F:
        raise InputError(f"{arrow.label} does not start at F")
    if k not in F.base.obj_index:
        raise InputError(f"object {k!r} is not in the base category")
    tgt = arrow.target
    c = arrow.comp(k, e.g_at(k))
    psi_k = e.psi_at(k)
    images = {gen: tgt.act(psi_k, tgt.conj(k, c, gen)) for gen in tgt.generators(k)}
    if tgt.finite:
        G = tgt.P.at(k)
        return GroupHom(G, G, tuple(images[a] for a in range(G.order)))
    return WordEndo(tgt, k, images)


def _apply(endo, a):
    return endo(a)


def coherence_failures(family, F, slice_arrows):
    """Witnesses where ν ∘ π_μ(k) ≠ π_{ν∘μ}(k) ∘ ν for composable μ, ν in the slice.

    ``family(arrow, k)`` returns the endomorphism of arrow.target(k).
    """
    arrows = [_as_arrow(a) for a in slice_arrows]
    reachable = [F]
    pending = list(arrows)
    while pending:
        step = [a for a in pending if any(a.source is P for P in reachable)]
        if not step:
            raise InputError(f"slice arrow {pending[0].label} does not start at F "
                             "or at the target of another slice arrow")
        for a in step:
            pending.remove(a)
            if a.target.finite and all(a.target.P is not P for P in reachable):
                reachable.append(a.target.P)
    out = []
    for mu in arrows:
        if mu.source is not F or not mu.target.finite:
            continue
        G = mu.target.P
        for nu in arrows:
            if nu.source is not G:
                continue
            numu = mu.then(nu)
            for k in F.base.objects:
                left = family(mu, k)
                right = family(numu, k)
                for a in range(G.at(k).order):
                    lhs = nu.comp(k, _apply(left, a))
                    rhs = _apply(right, nu.comp(k, a))
                    if lhs != rhs:
                        out.append({"mu": mu.label, "nu": nu.label, "object": k,
                                    "element": G.at(k).names[a]})
                        break
    return out


def check_coherence(e, slice_arrows=None):
    """Does ν ∘ π_μ(k) = π_{ν∘μ}(k) ∘ ν hold across the slice?"""
    slice_arrows = default_slice(e.F) if slice_arrows is None else slice_arrows
    return not coherence_failures(lambda arrow, k: evaluate_at(e, arrow, k), e.F, slice_arrows)


def inner_witnesses(F, pi, iso=None):
    """All (g, ψ) with π(k) = F(ψ(k)) ∘ inn(g_k) at every object k.

    The result can hold several pairs (central conjugators); an empty list
    means π is not a categorical inner automorphism.
    """
    if not isinstance(pi, NatTrans) or pi.source is not F or pi.target is not F:
        raise InputError("pi must be a natural transformation F → F")
    violations = naturality_violations(pi)
    if violations:
        raise ValidationError("pi is not natural", violations)
    J = F.base
    iso = iso or isotropy_group(F)
    out = []
    # per object, the conjugators that already match for a given ψ-component
    wanted = {o: pi(o).images for o in J.objects}
    for psi in iso.aut_id.items:
        for g in iso.lim.items:
            ok = True
            for o, a, p in zip(J.objects, g, psi.components):
                G = F.at(o)
                if inn(G, a).then(F.arrow(p)).images != wanted[o]:
                    ok = False
                    break
            if ok:
                out.append(ExtendedInnerAut(F, g, psi))
    return out


def automorphism_of(e):
    """π_{id}: the natural automorphism of F that ``e`` restricts to."""
    F = e.F
    return NatTrans(F, F, {k: evaluate_at(e, identity_arrow(F), k) for k in F.base.objects})


# ------------------------------------------------------------ the isotropy group


class IsotropyGroup:
    """Z(F) ≅ lim F × Aut(Id_J) with the componentwise product."""

    def __init__(self, F):
        self.F = F
        J = F.base
        self.lim = limit_of_diagram(J, F)
        self.aut_id = aut_identity_functor(J)
        L, A = self.lim, self.aut_id
        pairs = [(a, b) for a in range(L.order) for b in range(A.order)]
        idx = {p: k for k, p in enumerate(pairs)}
        items = [ExtendedInnerAut(F, L.items[a], A.items[b]) for a, b in pairs]
        mul = [[idx[(L.mul[a][c], A.mul[b][d])] for (c, d) in pairs] for (a, b) in pairs]
        names = [f"<{L.names[a]} | {A.names[b]}>" for a, b in pairs]
        self.group = FinGroup(names, mul, idx[(L.unit, A.unit)], items=items, name="Z(F)")
        self._pos = {it: k for k, it in enumerate(items)}

    @property
    def order(self):
        return self.group.order

    @property
    def elements(self):
        return list(self.group.items)

    def index(self, e):
        return self._pos[e]

    def product(self, e1, e2):
        return self.group.items[self.group.mul[self._pos[e1]][self._pos[e2]]]

    def inverse(self, e):
        return self.group.items[self.group.inv[self._pos[e]]]

    def realize(self, e):
        """The coherent family μ, k ↦ π_μ(k) attached to ``e``."""
        return lambda mu, k: evaluate_at(e, mu, k)

    def generators(self):
        """A greedy generating set: keep the first element outside the
        subgroup generated so far."""
        G = self.group
        gens = []
        span = {G.unit}
        for a in range(G.order):
            if a in span:
                continue
            gens.append(a)
            frontier = list(span)
            span = set(span)
            while frontier:
                nxt = []
                for s in frontier:
                    for g in gens:
                        t = G.mul[s][g]
                        if t not in span:
                            span.add(t)
                            nxt.append(t)
                frontier = nxt
            if len(span) == G.order:
                break
        return [G.items[a] for a in gens]


def isotropy_group(F):
    return IsotropyGroup(F)


# ------------------------------------------------------------ compatibility


@dataclass
class CharResult:
    """Outcome of the compatibility test for a conjugator family."""

    compatible: bool
    in_limit: bool
    witness: dict = None

    @property
    def holds(self):
        return self.compatible == self.in_limit

    def __bool__(self):
        return self.holds

    def to_json(self):
        return {"compatible": self.compatible, "in_limit": self.in_limit,
                "holds": self.holds, "witness": self.witness}


def check_general_char(F, conjugators):
    """Test whether the family (inn(g_i)) is compatible and whether (g_i) ∈ lim F.

    For every h: i → j the separating arrow η_j ∘ F(h) into F(j) * ⟨x⟩
    transports inn(g_i) to conjugation by F(h)(g_i), while inn(g_j) acts by
    g_j; compatibility asks the two to agree on x, compared as normal forms.
    """
    J = F.base
    if isinstance(conjugators, dict):
        conjugators = [conjugators[o] for o in J.objects]
    g = [F.at(o).index(a) if isinstance(a, str) else a for o, a in zip(J.objects, conjugators)]
    if len(g) != len(J.objects):
        raise InputError("one conjugator per object is required")
    in_limit = all(F.arrow(m.name)(g[J.obj_index[m.dom]]) == g[J.obj_index[m.cod]]
                   for m in J.morphisms)
    witness = None
    for m in J.morphisms:
        G = F.at(m.cod)
        transported = F.arrow(m.name)(g[J.obj_index[m.dom]])
        lhs = FX.conjugator_word(G, g[J.obj_index[m.cod]])
        rhs = FX.conjugator_word(G, transported)
        if lhs != rhs:
            witness = {"morphism": m.name, "at_target": FX.format_word(G, lhs),
                       "transported": FX.format_word(G, rhs)}
            break
    return CharResult(witness is None, in_limit, witness)
