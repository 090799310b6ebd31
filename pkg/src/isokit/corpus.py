"""The presheaf corpus shared by the tests, the CLI workspace and the benchmark.

``ISOKIT_SEED`` (default 0) fixes every randomized corpus.
"""

import os
import random

from isokit import catalog as C
from isokit.fingroup import GroupHom, identity_hom, inn
from isokit.presheaf import validate_presheaf

DEFAULT_SEED = 0


def seed():
    raw = os.environ.get("ISOKIT_SEED", "")
    try:
        return int(raw) if raw else DEFAULT_SEED
    except ValueError:
        return DEFAULT_SEED


def rng(salt=0):
    return random.Random(seed() * 1_000_003 + salt)


def _bg_action(G, H, generator_image):
    """Presheaf on BG (G cyclic) acting on H, sending the generator "1" to the
    automorphism ``generator_image``."""
    J = C.one_object(G)
    homs = {}
    for k in range(G.order):
        h = identity_hom(H)
        for _ in range(k):
            h = h.then(generator_image)
        homs[G.names[k]] = h
    return validate_presheaf(J, {"*": H}, homs)


def bz2_z3_inversion():
    Z3 = C.cyclic(3)
    return _bg_action(C.cyclic(2), Z3, C.inversion(Z3))


def bz2_s3_conj():
    S3 = C.symmetric(3)
    return _bg_action(C.cyclic(2), S3, inn(S3, "(12)"))


def bz2_z4_inversion():
    Z4 = C.cyclic(4)
    return _bg_action(C.cyclic(2), Z4, C.inversion(Z4))


def bz2_v4_swap():
    V = C.direct_product(C.cyclic(2), C.cyclic(2))
    swap = GroupHom.from_names(V, V, {"(0,0)": "(0,0)", "(0,1)": "(1,0)",
                                      "(1,0)": "(0,1)", "(1,1)": "(1,1)"})
    return _bg_action(C.cyclic(2), V, swap)


def bz2_d4_trivial():
    D4 = C.dihedral(4)
    return _bg_action(C.cyclic(2), D4, identity_hom(D4))


def bz3_z7_mult2():
    Z7 = C.cyclic(7)
    return _bg_action(C.cyclic(3), Z7, GroupHom(Z7, Z7, tuple(2 * a % 7 for a in range(7))))


def bs3_s3_conj():
    S3 = C.symmetric(3)
    J = C.one_object(S3)
    return validate_presheaf(J, {"*": S3}, {nm: inn(S3, nm) for nm in S3.names})


def _arrow_presheaf(h):
    J = C.arrow()
    G, H = h.source, h.target
    return validate_presheaf(J, {"i": G, "j": H},
                             {"id_i": identity_hom(G), "id_j": identity_hom(H), "f": h})


def arrow_z2_s3():
    S3 = C.symmetric(3)
    return _arrow_presheaf(C.embedding_by_generator(C.cyclic(2), S3, "(12)"))


def arrow_s3_sign():
    return _arrow_presheaf(C.sign(C.symmetric(3)))


def arrow_z6_z3():
    Z6, Z3 = C.cyclic(6), C.cyclic(3)
    return _arrow_presheaf(GroupHom(Z6, Z3, tuple(a % 3 for a in range(6))))


def _parallel(f, g):
    J = C.parallel_pair()
    G, H = f.source, f.target
    return validate_presheaf(J, {"i": G, "j": H},
                             {"id_i": identity_hom(G), "id_j": identity_hom(H), "f": f, "g": g})


def parallel_z4_inversion():
    Z4 = C.cyclic(4)
    return _parallel(identity_hom(Z4), C.inversion(Z4))


def parallel_z3_s3():
    Z3, S3 = C.cyclic(3), C.symmetric(3)
    return _parallel(C.embedding_by_generator(Z3, S3, "(123)"),
                     C.embedding_by_generator(Z3, S3, "(132)"))


def discrete_s3_s3():
    S3 = C.symmetric(3)
    J = C.discrete(2)
    return validate_presheaf(J, {"o0": S3, "o1": S3},
                             {"id_o0": identity_hom(S3), "id_o1": identity_hom(S3)})


def cospan_transpositions():
    """Z2 → S3 ← Z2 through two different transpositions."""
    Z2, S3 = C.cyclic(2), C.symmetric(3)
    J = C.cospan()
    f = C.embedding_by_generator(Z2, S3, "(12)")
    g = C.embedding_by_generator(Z2, S3, "(23)")
    return validate_presheaf(J, {"i": Z2, "j": Z2, "k": S3},
                             {"id_i": identity_hom(Z2), "id_j": identity_hom(Z2),
                              "id_k": identity_hom(S3), "f": f, "g": g})


def terminal_group(G):
    return validate_presheaf(C.terminal(), {"*": G}, {"id": identity_hom(G)})


PRESHEAVES = {
    "bz2_z3_inversion": bz2_z3_inversion,
    "bz2_s3_conj": bz2_s3_conj,
    "bz2_z4_inversion": bz2_z4_inversion,
    "bz2_v4_swap": bz2_v4_swap,
    "bz2_d4_trivial": bz2_d4_trivial,
    "arrow_z2_s3": arrow_z2_s3,
    "arrow_s3_sign": arrow_s3_sign,
    "arrow_z6_z3": arrow_z6_z3,
    "parallel_z4_inversion": parallel_z4_inversion,
    "parallel_z3_s3": parallel_z3_s3,
}

EXTRA_PRESHEAVES = {
    "bz3_z7_mult2": bz3_z7_mult2,
    "bs3_s3_conj": bs3_s3_conj,
    "discrete_s3_s3": discrete_s3_s3,
    "cospan_transpositions": cospan_transpositions,
}


def presheaf_corpus(extra=False):
    names = dict(PRESHEAVES)
    if extra:
        names.update(EXTRA_PRESHEAVES)
    return {k: f() for k, f in names.items()}
