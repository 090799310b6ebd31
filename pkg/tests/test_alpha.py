import pytest

from isokit import corpus
from isokit import terms as T
from isokit.alpha import AlphaContext, erase_labels, random_term
from isokit.errors import InputError
from isokit.phl import group_theory
from isokit.sexpr import format_term
from isokit.tj import build_tj, presheaf_to_model


def context(F, obj=None):
    tj = build_tj(group_theory(), F.base)
    M = presheaf_to_model(tj, F)
    obj = obj or F.base.objects[0]
    return AlphaContext(tj, M, f"X@{obj}")


@pytest.fixture(scope="module")
def z3():
    return context(corpus.bz2_z3_inversion())


@pytest.fixture(scope="module")
def arrow():
    return context(corpus.arrow_z2_s3(), "i")


@pytest.fixture(scope="module")
def s3conj():
    return context(corpus.bs3_s3_conj())


def nf(ctx, text):
    return format_term(ctx.normalize(ctx.parse(text)))


def test_rewrite_rule_examples(z3, arrow):
    assert nf(z3, "(alpha 0 x)") == "x"
    assert nf(z3, "(alpha 1 (alpha 1 x))") == "x"
    assert nf(z3, "(alpha 1 (m@* x c:1))") == "(m@* (alpha 1 x) c:2)"
    assert nf(arrow, "(alpha f (m@i x c:1))") == '(m@j (alpha f x) c:"(12)")'
    assert nf(arrow, "(alpha id_j (alpha f (alpha id_i x)))") == "(alpha f x)"


def test_strategies_agree_and_count_steps(z3):
    t = z3.parse("(alpha 1 (inv@* (m@* (alpha 1 x) (alpha 0 c:2))))")
    a, n1 = z3.normalize_by_steps(t, "innermost")
    b, n2 = z3.normalize_by_steps(t, "outermost")
    assert a is b is z3.normalize(t)
    assert n1 > 0 and n2 > 0
    with pytest.raises(InputError):
        z3.normalize(t, "sideways")


def test_normal_forms_are_fixed_points(z3):
    u = z3.parse("(m@* (alpha 1 x) (inv@* x))")
    assert z3.is_alpha_restricted(u)
    assert z3.normalize(u) is u
    assert z3.step(u) is None
    assert not z3.is_alpha_restricted(z3.parse("(alpha 1 (inv@* x))"))


def test_bracket_examples(s3conj):
    ctx = s3conj
    x = ctx.x
    assert ctx.bracket(x, "(12)") is ctx.alpha_app("(12)", x)
    u = ctx.alpha_app("(123)", x)
    assert ctx.bracket(u, "(12)") is ctx.alpha_app(ctx.J.compose("(123)", "(12)"), x)
    with pytest.raises(InputError):
        ctx.bracket(ctx.parse('(alpha "(12)" (m@* x x))'), "(12)")


def test_bracket_changes_object():
    ctx = context(corpus.arrow_z2_s3(), "j")
    u = ctx.parse('(m@j x c:"(12)")')
    out = ctx.bracket(u, "f")
    assert format_term(out) == '(m@j (alpha f x) c:"(12)")'
    assert out.args[0].args[0].sort == "X@i"
    with pytest.raises(InputError):
        ctx.bracket(u, "id_i")


def test_push_example(z3):
    u = z3.parse("(m@* x x)")
    assert format_term(z3.push(u, "1")) == "(m@* (alpha 1 x) (alpha 1 x))"
    with pytest.raises(InputError):
        z3.push(z3.parse("(alpha 1 (m@* x x))"), "1")
    assert z3.local_transport(u, "1", "push") is z3.push(u, "1")
    assert z3.local_transport(u, "1", "bracket") is z3.bracket(u, "1")
    with pytest.raises(InputError):
        z3.local_transport(u, "1", "other")


def test_theta_examples(z3):
    assert format_term(z3.theta(z3.x)) == "x:0"
    assert format_term(z3.theta(z3.parse("(alpha 1 x)"))) == "x:1"
    assert format_term(z3.theta(z3.parse("(m@* (alpha 1 x) c:2)"))) == "(m x:1 c:2)"
    with pytest.raises(InputError):
        z3.theta(z3.parse("(alpha 1 (inv@* x))"))


def test_theta_star_examples(s3conj):
    ctx = s3conj
    assert ctx.theta_star(ctx.parse("(alpha \"(12)\" x)")) is T.ind("X")
    u = ctx.parse("(m@* (alpha \"(12)\" x) (alpha \"(123)\" x))")
    assert format_term(ctx.theta_star(u)) == "(m x x)"
    assert erase_labels(ctx.theta(u)) is ctx.theta_star(u)


def test_alpha_free_examples(z3):
    assert z3.alpha_free(z3.parse("(alpha 1 x)")) is z3.x
    assert z3.alpha_free(z3.x) is z3.x
    u = z3.parse("(m@* (alpha 1 x) c:2)")
    assert format_term(z3.alpha_free(u)) == "(m@* x c:2)"


def test_commutes_with_endo_examples(z3, s3conj):
    assert z3.commutes_with_endo(z3.x, "0")
    # alpha_f(x) against an endo g: equal iff f∘g = g∘f
    ctx = s3conj
    u = ctx.parse("(alpha \"(123)\" x)")
    assert ctx.commutes_with_endo(u, "(132)")
    assert not ctx.commutes_with_endo(u, "(12)")
    # a constant moved by F(f) breaks commutation
    assert not z3.commutes_with_endo(z3.parse("(m@* x c:1)"), "1")
    assert z3.commutes_with_endo(z3.parse("(m@* x c:0)"), "1")
    with pytest.raises(InputError):
        context(corpus.arrow_z2_s3()).commutes_with_endo(z3.x, "f")


def test_rho_embeds(z3):
    w = T.app("m", [T.ind("X"), T.const("1", "X")], "X")
    assert format_term(z3.rho(w)) == "(m@* x c:1)"
    with pytest.raises(InputError):
        z3.rho(T.ind("X", "1"))


def test_parse_errors(z3):
    with pytest.raises(InputError):
        z3.parse("(alpha nope x)")
    with pytest.raises(InputError):
        z3.parse("(m@* x c:7)")


# ------------------------------------------------------------ randomized properties


CORPUS = sorted(corpus.presheaf_corpus(extra=True))


def local_term(ctx, rng, depth=5):
    return ctx.normalize(random_term(ctx, rng, ctx.x_obj, depth, local=True))


@pytest.mark.parametrize("name", CORPUS)
def test_random_confluence_and_restriction(name):
    F = corpus.presheaf_corpus(extra=True)[name]
    ctx = context(F)
    rng = corpus.rng(1)
    for _ in range(150):
        t = random_term(ctx, rng, rng.choice(F.base.objects), 6)
        assert T.depth(t) <= 6
        a = ctx.normalize(t)
        assert ctx.is_alpha_restricted(a)
        assert ctx.normalize(a) is a
        assert ctx.normalize(t, "innermost") is a is ctx.normalize(t, "outermost")
        # every intermediate step has the same normal form and theta image
        mid = ctx.step(t)
        if mid is not None:
            assert ctx.normalize(mid) is a
            assert ctx.theta(ctx.fold_constants(ctx.normalize(mid))) is ctx.theta(ctx.fold_constants(a))


@pytest.mark.parametrize("name", CORPUS)
def test_random_translation_identities(name):
    F = corpus.presheaf_corpus(extra=True)[name]
    J = F.base
    rng = corpus.rng(2)
    for i in J.objects:
        ctx = context(F, i)
        into = J.into(i)
        for _ in range(30):
            u = local_term(ctx, rng)
            assert ctx.is_local(u)
            f = rng.choice(into)
            moved = ctx.with_x(f"X@{J.dom(f)}")
            assert moved.theta_star(ctx.bracket(u, f)) is ctx.theta_star(u)
            assert ctx.rho(ctx.theta_star(u)) is ctx.alpha_free(u)


@pytest.mark.parametrize("name", CORPUS)
def test_random_indeterminate_transport(name):
    F = corpus.presheaf_corpus(extra=True)[name]
    J = F.base
    rng = corpus.rng(3)
    for _ in range(40):
        k = rng.choice(J.objects)
        ctx = context(F, k)
        i = rng.choice(J.objects)
        v = ctx.normalize(random_term(ctx, rng, i, 5))
        f = rng.choice(J.out_of(i))
        labels = ctx.indexed_indeterminates(ctx.theta(v))
        pushed = ctx.indexed_indeterminates(ctx.theta(ctx.push(v, f)))
        for g in J.hom(k, i):
            assert (g in labels) == (J.compose(f, g) in pushed)
