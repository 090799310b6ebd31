import pytest

from isokit import catalog as C
from isokit import corpus
from isokit import freeext as FX
from isokit.errors import InputError, ValidationError
from isokit.fingroup import GroupHom, identity_hom, inn, pullback
from isokit.isotropy import (
    ExtendedInnerAut, FiniteTarget, SliceArrow, check_coherence, check_general_char,
    coherence_failures, default_slice, eta_arrow, evaluate_at, identity_arrow, inner_witnesses,
    automorphism_of, isotropy_group, make_extended, nat_arrow,
)
from isokit.presheaf import NatTrans, identity_nat, nat_auts, naturality_violations, validate_nat_trans


def unit_of(iso):
    return iso.group.items[iso.group.unit]


def test_unit_evaluates_to_identity(presheaves):
    for F in presheaves.values():
        iso = isotropy_group(F)
        e = unit_of(iso)
        for arrow in default_slice(F):
            for k in F.base.objects:
                endo = evaluate_at(e, arrow, k)
                for gen in arrow.target.generators(k):
                    assert endo(gen) == gen


def test_terminal_s3_conjugation():
    F = corpus.terminal_group(C.symmetric(3))
    S3 = F.at("*")
    e = make_extended(F, ["(123)"], ["id"])
    assert evaluate_at(e, identity_nat(F), "*") == inn(S3, "(123)")


def test_bz2_z3_generator_acts_by_inversion():
    F = corpus.bz2_z3_inversion()
    e = make_extended(F, {"*": "0"}, {"*": "1"})
    assert evaluate_at(e, identity_nat(F), "*") == C.inversion(F.at("*"))
    with pytest.raises(InputError):
        evaluate_at(e, identity_nat(F), "nowhere")


def test_make_extended_checks_membership():
    F = corpus.parallel_z4_inversion()
    with pytest.raises(ValidationError):
        make_extended(F, ["1", "1"], ["id_i", "id_j"])
    with pytest.raises(ValidationError):
        make_extended(corpus.bz2_z3_inversion(), ["0"], ["2"])


def test_coherence_identity_slice_always_holds(presheaves):
    for F in presheaves.values():
        for e in isotropy_group(F).elements:
            assert check_coherence(e, [identity_arrow(F)])
            assert check_coherence(e)


def test_coherence_along_embedding():
    Z3, S3 = C.cyclic(3), C.symmetric(3)
    F = corpus.terminal_group(Z3)
    G = corpus.terminal_group(S3)
    emb = C.embedding_by_generator(Z3, S3, "(123)")
    mu = validate_nat_trans(F, G, {"*": emb})
    e = make_extended(F, ["1"], ["id"])
    slice_ = [identity_arrow(F), nat_arrow(mu), eta_arrow(G, "*"), identity_arrow(G)]
    assert check_coherence(e, slice_)
    # the transported conjugator is mu(1) = (123)
    assert evaluate_at(e, mu, "*") == inn(S3, "(123)")


def test_non_natural_family_breaks_coherence():
    F = corpus.terminal_group(C.cyclic(3))
    e = make_extended(F, ["0"], ["id"])
    inversion = C.inversion(F.at("*"))

    def family(arrow, k):
        if arrow.label == "id":
            return inversion
        return evaluate_at(e, arrow, k)

    fails = coherence_failures(family, F, default_slice(F))
    assert any(f["mu"] == "id" and f["nu"] == "eta@*" for f in fails)


def test_slice_must_be_composable():
    F = corpus.terminal_group(C.cyclic(3))
    G = corpus.terminal_group(C.symmetric(3))
    stray = identity_arrow(G)
    e = make_extended(F, ["0"], ["id"])
    with pytest.raises(InputError):
        check_coherence(e, [identity_arrow(F), stray])


def test_inner_witness_examples():
    Fz = corpus.terminal_group(C.cyclic(3))
    inv = NatTrans(Fz, Fz, {"*": C.inversion(Fz.at("*"))})
    assert inner_witnesses(Fz, inv) == []

    Fs = corpus.terminal_group(C.symmetric(3))
    S3 = Fs.at("*")
    pi = NatTrans(Fs, Fs, {"*": inn(S3, "(123)")})
    w = inner_witnesses(Fs, pi)
    assert [(S3.names[e.g[0]], e.psi.components) for e in w] == [("(123)", ("id",))]

    Fb = corpus.bz2_z3_inversion()
    pi = NatTrans(Fb, Fb, {"*": C.inversion(Fb.at("*"))})
    w = inner_witnesses(Fb, pi)
    assert [(e.g, e.psi.components) for e in w] == [((0,), ("1",))]


def test_inner_witnesses_rejects_non_natural():
    F = corpus.bz2_s3_conj()
    pi = NatTrans(F, F, {"*": inn(F.at("*"), "(123)")})
    with pytest.raises(ValidationError):
        inner_witnesses(F, pi)
    with pytest.raises(InputError):
        inner_witnesses(F, "nope")


def test_central_conjugators_give_several_witnesses():
    F = corpus.terminal_group(C.dihedral(4))
    pi = identity_nat(F)
    assert len(inner_witnesses(F, pi)) == 2


@pytest.mark.parametrize("name,order", [
    ("discrete_s3_s3", 36), ("parallel_z4_inversion", 2), ("bz2_z3_inversion", 2),
    ("cospan_transpositions", 1), ("bz3_z7_mult2", 3), ("bz2_d4_trivial", 16),
])
def test_isotropy_orders(name, order):
    iso = isotropy_group(corpus.presheaf_corpus(extra=True)[name])
    assert iso.order == order == iso.lim.order * iso.aut_id.order


def test_generators_generate(presheaves):
    for F in presheaves.values():
        iso = isotropy_group(F)
        gens = iso.generators()
        span = {unit_of(iso)}
        frontier = list(span)
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = iso.product(a, g)
                    if b not in span:
                        span.add(b)
                        nxt.append(b)
            frontier = nxt
        assert len(span) == iso.order


def test_product_and_inverse(presheaves):
    for F in presheaves.values():
        iso = isotropy_group(F)
        for e in iso.elements:
            assert iso.product(e, iso.inverse(e)) == unit_of(iso)
            assert e * unit_of(iso) == e


def test_group_law_on_default_slice(presheaves):
    rng = corpus.rng(5)
    for F in presheaves.values():
        iso = isotropy_group(F)
        J = F.base
        # the law depends on lim elements being fixed by every endomorphism image
        for e in iso.elements:
            for k in J.objects:
                for p in J.endos(k):
                    assert F.arrow(p)(e.g_at(k)) == e.g_at(k)
        slice_ = default_slice(F)
        for _ in range(20):
            e1, e2 = rng.choice(iso.elements), rng.choice(iso.elements)
            prod = e1 * e2
            assert prod == iso.product(e1, e2)
            for arrow in slice_:
                for k in J.objects:
                    lhs = evaluate_at(prod, arrow, k)
                    rhs = evaluate_at(e2, arrow, k).then(evaluate_at(e1, arrow, k))
                    assert lhs == rhs


def test_evaluations_are_natural_automorphisms(presheaves):
    for F in presheaves.values():
        J = F.base
        for e in isotropy_group(F).elements:
            pi = automorphism_of(e)
            assert naturality_violations(pi) == []
            assert all(pi(k).is_bijective() for k in J.objects)
            assert e in inner_witnesses(F, pi)
            for k0 in J.objects:
                arrow = eta_arrow(F, k0)
                tgt = arrow.target
                for h in J.morphisms:
                    a, b = h.dom, h.cod
                    pa, pb = evaluate_at(e, arrow, a), evaluate_at(e, arrow, b)
                    for w in tgt.generators(a):
                        assert tgt.act(h.name, pa(w)) == pb(tgt.act(h.name, w))


def test_inner_automorphisms_form_subgroup(presheaves):
    for F in presheaves.values():
        iso = isotropy_group(F)
        N = nat_auts(F)
        inner = {mu for mu in N.items if inner_witnesses(F, mu, iso)}
        assert inner == {automorphism_of(e) for e in iso.elements}
        for a in inner:
            for b in inner:
                assert a.then(b) in inner
            inv = N.items[N.inv[N.items.index(a)]]
            assert inv in inner


@pytest.mark.parametrize("G", [C.symmetric(3), C.cyclic(4), C.cyclic(6), C.dihedral(4)],
                         ids=lambda G: G.name)
def test_terminal_case_matches_word_search(G):
    F = corpus.terminal_group(G)
    H = F.at("*")
    iso = isotropy_group(F)
    inner_auts = {automorphism_of(e)("*").images for e in iso.elements}
    words = FX.isotropy_search(H, max_len=3)
    # each isotropy word s induces the automorphism g -> s[g/x]
    from_words = set()
    for w in words:
        from_words.add(tuple(FX.substitute(H, w.word, (g,) if g != H.unit else ())[0]
                             if FX.substitute(H, w.word, (g,) if g != H.unit else ()) else H.unit
                             for g in range(H.order)))
    assert from_words == inner_auts
    for mu in nat_auts(F).items:
        assert bool(inner_witnesses(F, mu, iso)) == (mu("*").images in from_words)


def test_general_characterisation():
    F = corpus.parallel_z4_inversion()
    Z4 = F.at("i")
    assert check_general_char(F, ["2", "2"]).compatible
    r = check_general_char(F, ["1", "1"])
    assert not r.compatible and not r.in_limit and r.holds
    assert r.witness["morphism"] == "g"
    Fb = corpus.bz2_z3_inversion()
    assert check_general_char(Fb, ["0"]).compatible
    assert not check_general_char(Fb, ["1"]).compatible
    for F in corpus.presheaf_corpus().values():
        J = F.base
        import itertools

        for g in itertools.product(*[range(F.at(o).order) for o in J.objects]):
            assert check_general_char(F, list(g))


def test_cospan_pullback_two_ways():
    F = corpus.cospan_transpositions()
    iso = isotropy_group(F)
    P = pullback(F.arrow("f"), F.arrow("g"))
    assert iso.order == P.order * iso.aut_id.order == 1


def test_word_endo_equality_and_target_adapters():
    F = corpus.bz2_z3_inversion()
    e = make_extended(F, ["0"], ["1"])
    arrow = eta_arrow(F, "*")
    a = evaluate_at(e, arrow, "*")
    assert a == evaluate_at(e, arrow, "*")
    assert hash(a) == hash(evaluate_at(e, arrow, "*"))
    assert a.then(a)(FX.letter("0")) == FX.letter("0")
    t = FiniteTarget(F)
    assert t.fmt("*", 1) == "1" and arrow.target.fmt("*", FX.letter("1")) == "1"
