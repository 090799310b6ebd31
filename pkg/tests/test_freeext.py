import pytest
from hypothesis import given, strategies as st

from isokit import catalog as C
from isokit import corpus
from isokit import freeext as FX
from isokit.errors import InputError

Z3 = C.cyclic(3)
S3 = C.symmetric(3)


def syllables(G, vars=("x",)):
    group = st.integers(0, G.order - 1)
    block = st.tuples(st.sampled_from(vars), st.integers(-3, 3))
    return st.lists(st.one_of(group, block), max_size=8)


def test_normal_form_examples():
    g = S3.index("(12)")
    assert FX.normalize(S3, [g, g]) == ()
    assert FX.normalize(S3, [("x", 1), ("x", -1)]) == ()
    assert FX.normalize(S3, ["(12)", "(23)"]) == (S3.index("(123)"),)
    assert FX.normalize(S3, [("x", 2), S3.unit, ("x", -1)]) == (("x", 1),)
    with pytest.raises(InputError):
        FX.normalize(S3, ["nope"])


@given(syllables(S3), syllables(S3), syllables(S3))
def test_free_product_is_a_group(a, b, c):
    a, b, c = (FX.normalize(S3, w) for w in (a, b, c))
    assert FX.mul(S3, FX.mul(S3, a, b), c) == FX.mul(S3, a, FX.mul(S3, b, c))
    assert FX.mul(S3, a, FX.inverse(S3, a)) == ()
    assert FX.normalize(S3, a) == a


@given(syllables(Z3), syllables(Z3), syllables(Z3))
def test_substitution_is_associative(s, t, u):
    s, t, u = (FX.normalize(Z3, w) for w in (s, t, u))
    left = FX.compose_subst(Z3, FX.compose_subst(Z3, s, t), u)
    right = FX.compose_subst(Z3, s, FX.compose_subst(Z3, t, u))
    assert left == right


def test_substitute_rejects_extra_variables():
    with pytest.raises(InputError):
        FX.substitute(Z3, (("y", 1),), (("x", 1),))


def test_generic_commutation():
    g = S3.index("(123)")
    conj = FX.conjugator_word(S3, g)
    for op in ("mul", "unit", "inv"):
        assert FX.commutes_generically(S3, conj, op)
    square = FX.letter("x", 2)
    assert not FX.commutes_generically(S3, square, "mul")
    assert FX.commutes_generically(S3, square, "unit")
    shifted = FX.normalize(S3, [g, ("x", 1)])
    assert not FX.commutes_generically(S3, shifted, "unit")
    with pytest.raises(InputError):
        FX.commutes_generically(S3, square, "pow")


def test_inverse_search():
    g = S3.index("(123)")
    w = FX.conjugator_word(S3, g)
    t = FX.is_invertible(S3, w)
    assert t == FX.conjugator_word(S3, S3.inv[g])
    assert FX.is_invertible(S3, FX.letter("x", 2)) is None


def test_words_enumeration_counts():
    # lengths 0..2 over Z2 with 4 exponents: 1 + (1 + 4) + (1*4 + 4*1) = 14
    ws = list(FX.words(C.cyclic(2), 2))
    assert len(ws) == len(set(ws)) == 14
    assert all(FX.normalize(C.cyclic(2), w) == w for w in ws)


@pytest.mark.parametrize("G", [S3, C.cyclic(4), C.cyclic(6), C.dihedral(4)], ids=lambda G: G.name)
def test_isotropy_search_is_conjugation(G):
    found = FX.isotropy_search(G, max_len=3)
    conj = {FX.conjugator_word(G, g) for g in range(G.order)}
    assert {e.word for e in found} == conj
    assert len(found) == G.order


def test_isotropy_search_parallel_matches_serial():
    serial = FX.isotropy_search(S3, max_len=3)
    parallel = FX.isotropy_search(S3, max_len=3, jobs=2)
    assert serial == parallel


def test_isotropy_search_bound():
    with pytest.raises(InputError):
        FX.isotropy_search(S3, max_len=2)


def test_json_roundtrip():
    w = FX.normalize(S3, ["(12)", ("x", -2), "(123)", ("y", 1)])
    assert FX.word_from_json(S3, FX.word_to_json(S3, w)) == w
    assert FX.format_word(S3, w) == "(12)·x^-2·(123)·y"


def test_free_presheaf_extension_functoriality():
    F = corpus.bz2_z3_inversion()
    ext = FX.FreePresheafExtension(F, "*")
    u = FX.normalize(F.at("*"), [1, ("1", 1), 2, ("0", -1)])
    # F<x>(1) sends x_0 to x_1 and inverts group letters
    assert ext.act("1", u) == FX.normalize(F.at("*"), [2, ("0", 1), 1, ("1", -1)])
    assert ext.act("1", ext.act("1", u)) == u
    assert ext.act("0", u) == u
    gens = ext.generators("*")
    assert FX.letter("0") in gens and FX.letter("1") in gens and len(gens) == 4


def test_free_extension_on_arrow_has_no_backwards_indeterminates():
    F = corpus.arrow_z2_s3()
    ext = FX.FreePresheafExtension(F, "j")
    assert [g for g in ext.generators("i") if isinstance(g[0], tuple)] == []
    assert FX.letter("id_j") in ext.generators("j")
