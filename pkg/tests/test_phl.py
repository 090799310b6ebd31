import pytest

from isokit import catalog as C
from isokit.errors import InputError
from isokit.phl import (
    TOP, FunSymbol, HornFormula, HornSequent, PartialStructure, QuasiEquationalTheory, Signature,
    check_model, check_sequent, eval_term, group_signature, group_theory, parse_sequent,
)
from isokit import terms as T
from isokit.tj import group_structure


def test_group_theory_shape():
    th = group_theory()
    assert len(th.axioms) == 8
    assert [f.name for f in th.signature.funs] == ["m", "e", "inv"]


@pytest.mark.parametrize("G", [C.cyclic(2), C.cyclic(3), C.symmetric(3), C.dihedral(4)],
                         ids=lambda G: G.name)
def test_cayley_tables_are_models(G):
    assert check_model(group_structure(G), group_theory())


def test_strong_equality_needs_definedness():
    sig = Signature(("X",), (FunSymbol("f", ("X",), "X"),))
    M = PartialStructure(sig, {"X": ["a", "b"]}, {"f": {("a",): "b"}})
    x = T.var("x", "X")
    fx = T.app("f", [x], "X")
    assert eval_term(M, fx, {"x": "b"}) is None
    # f(x) = f(x) is "f(x) is defined": fails at b
    s = HornSequent((("x", "X"),), TOP, HornFormula.defined(fx), "f total")
    r = check_sequent(M, s)
    assert not r and r.witness == {"x": "b"}
    # conditional: f(x)↓ ⊢ f(x) = b holds
    s2 = HornSequent((("x", "X"),), HornFormula.defined(fx),
                     HornFormula(((fx, T.app("f", [x], "X")),)), "trivial")
    assert check_sequent(M, s2)


def test_vacuous_sequent_over_empty_carrier():
    sig = Signature(("X",), (FunSymbol("c", (), "X"),))
    M = PartialStructure(sig, {"X": []}, {})
    s = parse_sequent(sig, [("x", "X")], [], [["x", "x"]])
    assert check_sequent(M, s)
    assert not check_sequent(M, parse_sequent(sig, [], [], ["c"]))


def test_eval_rejects_bad_environment():
    M = group_structure(C.cyclic(2))
    with pytest.raises(InputError):
        eval_term(M, T.var("x", "X"), {})
    with pytest.raises(InputError):
        eval_term(M, T.var("x", "X"), {"x": "7"})


def test_structure_typing_errors():
    sig = group_signature()
    with pytest.raises(InputError):
        PartialStructure(sig, {"X": ["0"]}, {"m": {("0", "1"): "0"}})
    with pytest.raises(InputError):
        PartialStructure(sig, {"X": ["0"], "Y": []}, {})
    with pytest.raises(InputError):
        PartialStructure(sig, {"X": ["0", "0"]}, {})


def test_free_variable_must_be_declared():
    sig = group_signature()
    with pytest.raises(InputError):
        parse_sequent(sig, [("x", "X")], [], [["(m x y)", "x"]])


def test_theory_rejects_foreign_symbols():
    sig = Signature(("X",), ())
    other = group_signature()
    s = parse_sequent(other, [], [], ["e"])
    with pytest.raises(InputError):
        QuasiEquationalTheory(sig, (s,))


def test_check_model_signature_mismatch():
    M = group_structure(C.cyclic(2))
    th = QuasiEquationalTheory(Signature(("X",), ()), ())
    with pytest.raises(InputError):
        check_model(M, th)


def test_mutation_reports_witness():
    M = group_structure(C.cyclic(3))
    bad = M.with_entry("inv", ("1",), "1")
    report = check_model(bad, group_theory())
    assert not report
    names = {ax.name for _, ax, _ in report.failures}
    assert "right inverse" in names
    failing = next(w for _, ax, w in report.failures if ax.name == "right inverse")
    assert failing == {"x": "1"}
    gone = M.with_entry("m", ("2", "2"), None)
    report = check_model(gone, group_theory())
    assert [ax.name for _, ax, _ in report.failures][0] == "m total"
