import random

import pytest
from hypothesis import given, strategies as st

from isokit import _pykernels, catalog as C, kernels

BACKENDS = kernels.available_backends()


def test_compiled_backend_present():
    # the build compiles the extension; ISOKIT_PURE forces the fallback
    import os

    if os.environ.get("ISOKIT_PURE"):
        assert kernels.BACKEND == "python"
    else:
        assert "cython" in BACKENDS


@pytest.mark.parametrize("G", [C.cyclic(6), C.symmetric(3), C.dihedral(4), C.alternating(4),
                               C.direct_product(C.cyclic(2), C.cyclic(4))], ids=lambda G: G.name)
def test_automorphisms_agree(G):
    results = {name: mod.automorphisms(G.flat, G.order, G.unit) for name, mod in BACKENDS.items()}
    ref = results["python"]
    assert all(r == ref for r in results.values())
    assert ref == sorted(ref)


def test_generating_words_spans():
    G = C.symmetric(4)
    gens, order, parent, via = _pykernels.generating_words(G.flat, G.order, G.unit)
    assert sorted(order) == list(range(G.order))
    for e in order[1:]:
        assert e == G.mul[parent[e]][gens[via[e]]]


@given(st.lists(st.integers(0, 5), min_size=6, max_size=6))
def test_hom_violation_agree(phi):
    G = C.cyclic(6)
    outs = {n: m.hom_violation(G.flat, 6, G.flat, 6, phi) for n, m in BACKENDS.items()}
    assert len(set(outs.values())) == 1


@given(st.integers(0, 10_000))
def test_limit_and_naturality_kernels_agree(seed):
    rng = random.Random(seed)
    sizes = [rng.randint(1, 4) for _ in range(3)]
    edges = []
    for _ in range(rng.randint(0, 4)):
        j, k = rng.randrange(3), rng.randrange(3)
        edges.append((j, k, [rng.randrange(sizes[k]) for _ in range(sizes[j])]))
    lim = {n: m.limit_tuples(sizes, edges) for n, m in BACKENDS.items()}
    assert len({tuple(map(tuple, v)) for v in lim.values()}) == 1
    # brute force reference
    import itertools

    brute = [t for t in itertools.product(*[range(s) for s in sizes])
             if all(f[t[j]] == t[k] for j, k, f in edges)]
    assert [tuple(t) for t in lim["python"]] == brute

    cands = [[[rng.randrange(s) for _ in range(s)] for _ in range(rng.randint(1, 3))] for s in sizes]
    nat = {n: m.natural_families(cands, edges) for n, m in BACKENDS.items()}
    assert len({tuple(map(tuple, v)) for v in nat.values()}) == 1
    brute = [c for c in itertools.product(*[range(len(x)) for x in cands])
             if all(cands[k][c[k]][f[a]] == f[cands[j][c[j]][a]]
                    for j, k, f in edges for a in range(sizes[j]))]
    assert [tuple(c) for c in nat["python"]] == brute
