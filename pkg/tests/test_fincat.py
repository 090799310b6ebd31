import pytest

from isokit import catalog as C
from isokit.errors import InputError, ValidationError
from isokit.fincat import IdNatAut, aut_identity_functor, is_natural_identity_family, validate_category
from isokit.fingroup import center


def test_arrow_category_tables():
    J = C.arrow()
    assert J.objects == ("i", "j")
    assert J.compose("id_j", "f") == "f"
    assert J.hom("i", "j") == ["f"] and J.hom("j", "i") == []
    assert J.has_only_trivial_endos()
    with pytest.raises(InputError):
        J.compose("f", "f")


def test_non_associative_table_gives_witness():
    mors = [("id", "*", "*"), ("a", "*", "*"), ("b", "*", "*")]
    comp = [("id", "id", "id"), ("id", "a", "a"), ("id", "b", "b"), ("a", "id", "a"),
            ("b", "id", "b"), ("a", "a", "b"), ("a", "b", "a"), ("b", "a", "a"), ("b", "b", "a")]
    with pytest.raises(ValidationError) as err:
        validate_category(["*"], mors, {"*": "id"}, comp)
    laws = {v["law"] for v in err.value.violations}
    assert laws == {"associativity"}
    assert err.value.violations[0]["witness"] == ["a", "a", "b"]


def test_missing_composite_and_bad_identity():
    with pytest.raises(ValidationError) as err:
        validate_category(["i"], [("id", "i", "i"), ("a", "i", "i")], {"i": "id"},
                          [("id", "id", "id")])
    assert any(v["law"] == "composition total" for v in err.value.violations)
    with pytest.raises(ValidationError) as err:
        validate_category(["i"], [("id", "i", "i"), ("a", "i", "i")], {"i": "a"},
                          [(g, f, "a") for g in ("id", "a") for f in ("id", "a")])
    assert any("identity" in v["law"] for v in err.value.violations)


def test_dangling_names_are_input_errors():
    with pytest.raises(InputError):
        validate_category(["i"], [("id", "i", "k")], {"i": "id"}, [])
    with pytest.raises(InputError):
        validate_category(["i"], [("id", "i", "i")], {"i": "id"}, [("id", "nope", "id")])


def test_isos_and_inverses_in_bs3(S3):
    J = C.one_object(S3)
    assert all(J.is_iso(m.name) for m in J.morphisms)
    assert J.inverse("(123)") == "(132)"
    assert J.compose("(12)", "(12)") == "e"


EXPECTED_AUT_ID = {"discrete3": 1, "arrow": 1, "parallel_pair": 1, "cospan": 1,
                   "BZ2": 2, "BZ3": 3, "BS3": 1, "square": 1}


@pytest.mark.parametrize("name", sorted(EXPECTED_AUT_ID))
def test_aut_identity_catalog(name):
    J = C.catalog_categories()[name]
    A = aut_identity_functor(J)
    assert A.order == EXPECTED_AUT_ID[name]
    for p in A.items:
        assert is_natural_identity_family(J, p.components)


@pytest.mark.parametrize("G", [C.cyclic(4), C.dihedral(4), C.symmetric(3), C.cyclic(2)],
                         ids=lambda G: G.name)
def test_aut_id_of_bg_is_center(G):
    J = C.one_object(G)
    A = aut_identity_functor(J)
    Z = center(G)
    assert A.order == Z.order
    assert sorted(p.components[0] for p in A.items) == sorted(Z.names)


def test_idnataut_component_lookup():
    J = C.arrow()
    p = IdNatAut(("id_i", "id_j"))
    assert p.at(J, "j") == "id_j"
