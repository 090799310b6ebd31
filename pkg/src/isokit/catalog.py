"""Standard small groups and index categories."""

import itertools

from isokit.fincat import validate_category
from isokit.fingroup import FinGroup, GroupHom


def cyclic(n):
    names = [str(k) for k in range(n)]
    return FinGroup(names, [[(a + b) % n for b in range(n)] for a in range(n)], 0, name=f"Z{n}")


def trivial():
    return FinGroup(["e"], [[0]], 0, name="1")


def _cycle_name(p):
    n = len(p)
    seen = [False] * n
    parts = []
    for s in range(n):
        if seen[s] or p[s] == s:
            seen[s] = True
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def permutation_group(perms, name=""):
    """Group of permutation tuples; product is composition ``(p q)(x) = p(q(x))``."""
    perms = sorted(perms)
    ident = tuple(range(len(perms[0])))
    perms.remove(ident)
    perms.insert(0, ident)
    idx = {p: k for k, p in enumerate(perms)}
    mul = [[idx[tuple(p[q[x]] for x in range(len(p)))] for q in perms] for p in perms]
    return FinGroup([_cycle_name(p) for p in perms], mul, 0, items=perms, name=name)


def _parity(p):
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return inv % 2


def symmetric(n):
    return permutation_group(list(itertools.permutations(range(n))), name=f"S{n}")


def alternating(n):
    return permutation_group([p for p in itertools.permutations(range(n)) if _parity(p) == 0],
                             name=f"A{n}")


def dihedral(n):
    """Symmetries of the regular n-gon (order 2n), as permutations of the vertices."""
    rots = [tuple((k + r) % n for k in range(n)) for r in range(n)]
    refl = [tuple((r - k) % n for k in range(n)) for r in range(n)]
    return permutation_group(rots + refl, name=f"D{n}")


def direct_product(G, H):
    pairs = [(a, b) for a in range(G.order) for b in range(H.order)]
    idx = {p: k for k, p in enumerate(pairs)}
    mul = [[idx[(G.mul[a][c], H.mul[b][d])] for (c, d) in pairs] for (a, b) in pairs]
    names = [f"({G.names[a]},{H.names[b]})" for a, b in pairs]
    return FinGroup(names, mul, idx[(G.unit, H.unit)], name=f"{G.name}x{H.name}")


def hom_by_names(G, H, mapping):
    return GroupHom.from_names(G, H, mapping)


def inversion(G):
    return GroupHom(G, G, G.inv)


def sign(Sn):
    """Sign map S_n → Z2."""
    Z2 = cyclic(2)
    return GroupHom(Sn, Z2, tuple(_parity(p) for p in Sn.items))


def embedding_by_generator(Zn, G, g):
    """Z_n → G sending 1 to ``g`` (a name or index); ``g`` must have order dividing n."""
    gi = G.index(g) if isinstance(g, str) else g
    return GroupHom(Zn, G, tuple(G.power(gi, k) for k in range(Zn.order)))


# ---------------------------------------------------------------- categories


def _category(objects, morphisms, identities, composition):
    return validate_category(objects, morphisms, identities, composition)


def _poset(objects, arrows):
    """Category of a finite preorder given by its non-identity arrows (a, b),
    assumed transitively closed."""
    rel = {(o, o) for o in objects} | set(arrows)
    name = {(a, b): (f"id_{a}" if a == b else f"{a}{b}") for a, b in rel}
    mors = [(name[(a, b)], a, b) for a in objects for b in objects if (a, b) in rel]
    comp = []
    for (a, b) in sorted(rel, key=lambda p: (objects.index(p[0]), objects.index(p[1]))):
        for c in objects:
            if (b, c) in rel:
                comp.append((name[(b, c)], name[(a, b)], name[(a, c)]))
    return _category(objects, mors, {o: f"id_{o}" for o in objects}, comp)


def discrete(n):
    objs = [f"o{k}" for k in range(n)]
    return _category(objs, [(f"id_{o}", o, o) for o in objs], {o: f"id_{o}" for o in objs},
                     [(f"id_{o}", f"id_{o}", f"id_{o}") for o in objs])


def terminal():
    return _category(["*"], [("id", "*", "*")], {"*": "id"}, [("id", "id", "id")])


def arrow():
    """i → j with the single arrow named f."""
    objs = ["i", "j"]
    mors = [("id_i", "i", "i"), ("id_j", "j", "j"), ("f", "i", "j")]
    comp = [("id_i", "id_i", "id_i"), ("id_j", "id_j", "id_j"),
            ("f", "id_i", "f"), ("id_j", "f", "f")]
    return _category(objs, mors, {"i": "id_i", "j": "id_j"}, comp)


def parallel_pair():
    """Two parallel arrows f, g : i ⇉ j."""
    objs = ["i", "j"]
    mors = [("id_i", "i", "i"), ("id_j", "j", "j"), ("f", "i", "j"), ("g", "i", "j")]
    comp = [("id_i", "id_i", "id_i"), ("id_j", "id_j", "id_j")]
    for h in ("f", "g"):
        comp += [(h, "id_i", h), ("id_j", h, h)]
    return _category(objs, mors, {"i": "id_i", "j": "id_j"}, comp)


def cospan():
    """f : i → k ← j : g."""
    objs = ["i", "j", "k"]
    mors = [("id_i", "i", "i"), ("id_j", "j", "j"), ("id_k", "k", "k"),
            ("f", "i", "k"), ("g", "j", "k")]
    comp = [(f"id_{o}", f"id_{o}", f"id_{o}") for o in objs]
    comp += [("f", "id_i", "f"), ("id_k", "f", "f"), ("g", "id_j", "g"), ("id_k", "g", "g")]
    return _category(objs, mors, {o: f"id_{o}" for o in objs}, comp)


def commutative_square():
    """The poset a ≤ b, a ≤ c, b ≤ d, c ≤ d (so a ≤ d)."""
    return _poset(["a", "b", "c", "d"], [("a", "b"), ("a", "c"), ("b", "d"), ("c", "d"), ("a", "d")])


def one_object(G, obj="*"):
    """BG: one object, one morphism per element of G, composition = multiplication."""
    names = list(G.names)
    mors = [(nm, obj, obj) for nm in names]
    comp = [(names[a], names[b], names[G.mul[a][b]]) for a in range(G.order) for b in range(G.order)]
    return _category([obj], mors, {obj: names[G.unit]}, comp)


def catalog_categories():
    """The named index categories used throughout the test corpus."""
    return {
        "discrete3": discrete(3),
        "arrow": arrow(),
        "parallel_pair": parallel_pair(),
        "cospan": cospan(),
        "BZ2": one_object(cyclic(2)),
        "BZ3": one_object(cyclic(3)),
        "BS3": one_object(symmetric(3)),
        "square": commutative_square(),
    }
