"""Closed terms over Σ^J(M, x) and their α-restricted normal forms.

An ``AlphaContext`` fixes a T^J-model M (a finite partial structure over
Σ^J) and the sort ``A@i`` of the adjoined indeterminate x. Terms use the
node kinds of ``isokit.terms``: ``ind`` for x, ``const`` for the diagram
constant of an element of M, and ``app`` for every symbol of Σ^J.

The rewrite system that computes α-restricted forms:

    alpha_id(t)               -> t
    alpha_g(alpha_f(t))       -> alpha_{g∘f}(t)
    alpha_f(g@i(t1, ..., tn)) -> g@j(alpha_f(t1), ..., alpha_f(tn))
    alpha_f(c_s)              -> c_{F(f)(s)}

The last rule belongs to the diagram theory of M rather than to T^J
itself; without it a transition symbol applied to a constant could never
be pushed down to the indeterminate.

Equality of normal forms (after folding ground subterms with M's tables)
is used as provable equality in T^J(M, x). That is sound, and complete for
the α-fragment exercised here; it is not claimed for arbitrary equations
of T^J(M, x).
"""

from isokit import terms as T
from isokit.errors import InputError
from isokit.sexpr import TermReader, format_term


class AlphaContext:
    def __init__(self, tj, M, x_sort):
        self.tj = tj
        self.sigj = tj.sigj
        self.J = tj.sigj.J
        self.M = M
        if M.signature != self.sigj.signature:
            raise InputError("structure is not over Σ^J")
        self.x_sort = x_sort
        self.x_base, self.x_obj = self.sigj.sort_of(x_sort)
        self.x = T.ind(x_sort)

    def with_x(self, x_sort):
        return AlphaContext(self.tj, self.M, x_sort)

    # ------------------------------------------------------------ parsing

    def reader(self):
        sigj = self.sigj
        J = self.J

        def alpha(f, arg_sort):
            A, i = sigj.sort_of(arg_sort)
            if J.dom(f) != i:
                raise InputError(f"alpha {f} applied to a term of sort {arg_sort}")
            return sigj.alpha(f, A), sigj.sort(A, J.cod(f))

        def alpha_sorts(f):
            m = J.morphism(f)
            return [sigj.sort(A, m.dom) for A in sigj.base.sorts]

        def check_const(value, sort):
            if sort not in self.M.carriers:
                raise InputError(f"unknown sort {sort!r}")
            if not self.M.contains(sort, value):
                raise InputError(f"{value!r} is not an element of sort {sort}")

        return TermReader(sigj.signature.symbol_table(), x_sort=self.x_sort, alpha=alpha,
                          alpha_sorts=alpha_sorts, check_const=check_const)

    def parse(self, text):
        return self.reader().parse(text)

    # ------------------------------------------------------------ helpers

    def alpha_app(self, f, arg):
        A, _ = self.sigj.sort_of(arg.sort)
        return T.app(self.sigj.alpha(f, A), [arg], self.sigj.sort(A, self.J.cod(f)))

    def alpha_parts(self, t):
        """(morphism, base sort) when ``t`` is a transition application."""
        if t.kind != "app":
            return None
        return self.sigj.alpha_of(t.head)

    def obj_of(self, t):
        return self.sigj.sort_of(t.sort)[1]

    def is_identity(self, f):
        m = self.J.morphism(f)
        return self.J.identity(m.dom) == f

    # ------------------------------------------------------------ rewriting

    def rewrite_root(self, t):
        """Apply the first matching rule at the root, or return None."""
        parts = self.alpha_parts(t)
        if parts is None:
            return None
        f, A = parts
        arg = t.args[0]
        if self.is_identity(f):
            return arg
        inner = self.alpha_parts(arg)
        if inner is not None:
            g, _ = inner
            return self.alpha_app(self.J.compose(f, g), arg.args[0])
        if arg.kind == "app":
            g, i = self.sigj.local_of(arg.head)
            j = self.J.cod(f)
            return T.app(self.sigj.local(g, j), [self.alpha_app(f, a) for a in arg.args],
                         self.sigj.sort(self.sigj.sort_of(arg.sort)[0], j))
        if arg.kind == "const":
            out = self.M.apply(t.head, (arg.head,))
            if out is None:
                return None
            return T.const(out, t.sort)
        return None

    def step(self, t, strategy="innermost"):
        """One rewrite step, or None at a normal form.

        ``innermost``: leftmost-innermost redex. ``outermost``:
        rightmost-outermost redex.
        """
        if strategy == "innermost":
            for k, a in enumerate(t.args):
                r = self.step(a, strategy)
                if r is not None:
                    return T.app(t.head, t.args[:k] + (r,) + t.args[k + 1:], t.sort)
            return self.rewrite_root(t)
        if strategy == "outermost":
            r = self.rewrite_root(t)
            if r is not None:
                return r
            for k in range(len(t.args) - 1, -1, -1):
                r = self.step(t.args[k], strategy)
                if r is not None:
                    return T.app(t.head, t.args[:k] + (r,) + t.args[k + 1:], t.sort)
            return None
        raise InputError(f"unknown strategy {strategy!r}")

    def normalize_by_steps(self, t, strategy="innermost", max_steps=100000):
        for n in range(max_steps):
            r = self.step(t, strategy)
            if r is None:
                return t, n
            t = r
        raise RuntimeError(f"no normal form within {max_steps} steps")

    def normalize(self, t, strategy=None):
        """α-restricted form of ``t``.

        Without a strategy a structural normaliser is used; with
        ``innermost``/``outermost`` the rules are applied one step at a time.
        """
        if strategy is not None:
            return self.normalize_by_steps(t, strategy)[0]
        return self._norm(t)

    def _norm(self, t):
        if t.kind != "app":
            return t
        parts = self.alpha_parts(t)
        if parts is None:
            return T.app(t.head, [self._norm(a) for a in t.args], t.sort)
        return self._push(parts[0], self._norm(t.args[0]))

    def _push(self, f, u):
        """Normal form of alpha_f(u) for normal ``u``."""
        if self.is_identity(f):
            return u
        inner = self.alpha_parts(u)
        if inner is not None:
            h = self.J.compose(f, inner[0])
            x = u.args[0]
            return x if self.is_identity(h) else self.alpha_app(h, x)
        if u.kind == "app":
            g, _ = self.sigj.local_of(u.head)
            j = self.J.cod(f)
            return T.app(self.sigj.local(g, j), [self._push(f, a) for a in u.args],
                         self.sigj.sort(self.sigj.sort_of(u.sort)[0], j))
        if u.kind == "const":
            A, _ = self.sigj.sort_of(u.sort)
            out = self.M.apply(self.sigj.alpha(f, A), (u.head,))
            if out is not None:
                return T.const(out, self.sigj.sort(A, self.J.cod(f)))
        return self.alpha_app(f, u)

    def is_alpha_restricted(self, u):
        for v in T.subterms(u):
            parts = self.alpha_parts(v)
            if parts is None:
                continue
            f, A = parts
            a = v.args[0]
            if not (a.kind == "ind" and a.head is None and a.sort == self.x_sort
                    and A == self.x_base and self.J.dom(f) == self.x_obj):
                return False
        return True

    def fold_constants(self, u):
        """Evaluate every ground subterm through M's tables (where defined)."""
        if u.kind != "app":
            return u
        args = [self.fold_constants(a) for a in u.args]
        if all(a.kind == "const" for a in args):
            out = self.M.apply(u.head, tuple(a.head for a in args))
            if out is not None:
                return T.const(out, u.sort)
        return T.app(u.head, args, u.sort)

    # ------------------------------------------------------------ locality and transport

    def is_local(self, u, i=None):
        i = self.x_obj if i is None else i
        return all(self.obj_of(v) == i for v in T.subterms(u))

    def bracket(self, u, f):
        """``u[f]`` for an i-local ``u`` and ``f: j → i``; the result lives in the
        context whose indeterminate has sort A@j."""
        i = self.x_obj
        if self.J.cod(f) != i:
            raise InputError(f"{f} does not have codomain {i}")
        if not self.is_alpha_restricted(u) or not self.is_local(u):
            raise InputError(f"{format_term(u)} is not {i}-local")
        j = self.J.dom(f)
        xj = T.ind(self.sigj.sort(self.x_base, j))

        def go(v):
            if v.kind == "ind":
                return self.alpha_app(f, xj)
            parts = self.alpha_parts(v)
            if parts is not None:
                return self.alpha_app(self.J.compose(parts[0], f), xj)
            if v.kind == "const":
                return v
            return T.app(v.head, [go(a) for a in v.args], v.sort)

        return go(u)

    def push(self, u, f):
        """``u^f``: α-restricted form of alpha_f(u)."""
        if not self.is_alpha_restricted(u):
            raise InputError("push needs an α-restricted term")
        if self.J.dom(f) != self.obj_of(u):
            raise InputError(f"{f} does not start at the object of {format_term(u)}")
        return self._push(f, u)

    def local_transport(self, u, f, mode="bracket"):
        if mode == "bracket":
            return self.bracket(u, f)
        if mode == "push":
            return self.push(u, f)
        raise InputError(f"unknown mode {mode!r}")

    def commutes_with_endo(self, u, f):
        """Decide ``alpha_f(u) = u[f]`` for an i-local, α-restricted u and endomorphism f.

        Both sides are normalised and ground subterms folded before the
        syntactic comparison; u[f] itself may contain alpha_id(x).
        """
        m = self.J.morphism(f)
        if m.dom != self.x_obj or m.cod != self.x_obj:
            raise InputError(f"{f} is not an endomorphism of {self.x_obj}")
        lhs = self.fold_constants(self.push(u, f))
        rhs = self.fold_constants(self._norm(self.bracket(u, f)))
        return lhs is rhs

    # ------------------------------------------------------------ theta

    def theta(self, u):
        """Replace alpha_f(x) by x:f and x by x:id_i; drop object superscripts."""
        if not self.is_alpha_restricted(u):
            raise InputError(f"{format_term(u)} is not α-restricted")
        idx = self.J.identity(self.x_obj)

        def go(v):
            if v.kind == "ind":
                return T.ind(self.x_base, idx)
            parts = self.alpha_parts(v)
            if parts is not None:
                return T.ind(self.x_base, parts[0])
            A, _ = self.sigj.sort_of(v.sort)
            if v.kind == "const":
                return T.const(v.head, A)
            g, _ = self.sigj.local_of(v.head)
            return T.app(g, [go(a) for a in v.args], A)

        return go(u)

    def theta_star(self, u):
        return erase_labels(self.theta(u))

    def alpha_free(self, u):
        """``u^{-α}``: every alpha_f(x) becomes x."""
        if not self.is_alpha_restricted(u) or not self.is_local(u):
            raise InputError(f"{format_term(u)} is not {self.x_obj}-local")

        def go(v):
            if v.kind == "ind" or self.alpha_parts(v) is not None:
                return self.x
            if v.kind == "const":
                return v
            return T.app(v.head, [go(a) for a in v.args], v.sort)

        return go(u)

    def rho(self, w, i=None):
        """Embed a closed term over Σ(M^i, x_A) into Σ^J(M, x_{A@i})."""
        i = self.x_obj if i is None else i
        sigj = self.sigj

        def go(v):
            if v.kind == "ind":
                if v.head is not None:
                    raise InputError("rho expects a term without indexed indeterminates")
                return T.ind(sigj.sort(v.sort, i))
            if v.kind == "const":
                return T.const(v.head, sigj.sort(v.sort, i))
            return T.app(sigj.local(v.head, i), [go(a) for a in v.args], sigj.sort(v.sort, i))

        return go(w)

    def indexed_indeterminates(self, theta_term):
        return {v.head for v in T.subterms(theta_term) if v.kind == "ind"}


def erase_labels(w):
    """λ: every indexed indeterminate x:f becomes the plain x."""
    if w.kind == "ind":
        return T.ind(w.sort)
    if w.kind == "app":
        return T.app(w.head, [erase_labels(a) for a in w.args], w.sort)
    return w


# ------------------------------------------------------------ random corpus


def random_term(ctx, rng, obj, depth, local=False, alpha_rate=0.35, leaf_rate=0.2):
    """A random closed term at object ``obj`` of depth at most ``depth``.

    With ``local`` the term is x_obj-local and α-restricted: no transition
    symbol above the indeterminate and only endomorphisms of its object.
    """
    sorts = ctx.sigj.base.sorts
    A = rng.choice(sorts)
    return _random_of_sort(ctx, rng, A, obj, depth, local, alpha_rate, leaf_rate)


def _random_of_sort(ctx, rng, A, obj, depth, local, alpha_rate, leaf_rate):
    sigj, J = ctx.sigj, ctx.J
    sort = sigj.sort(A, obj)
    carrier = ctx.M.carriers[sort]
    reach = J.hom(ctx.x_obj, obj) if A == ctx.x_base else []
    ops = [g for g in sigj.base.funs if g.result == A and g.args]
    nullary = [g for g in sigj.base.funs if g.result == A and not g.args]
    # a leaf alpha_f(x) has depth 1, so leaves are taken once one level is left
    leaf = depth <= 1 or not ops or rng.random() < leaf_rate
    if not leaf and not local and rng.random() < alpha_rate:
        f = rng.choice(J.into(obj))
        inner = _random_of_sort(ctx, rng, A, J.dom(f), depth - 1, local, alpha_rate, leaf_rate)
        return ctx.alpha_app(f, inner)
    if leaf and nullary and rng.random() < 0.15:
        return T.app(sigj.local(rng.choice(nullary).name, obj), [], sort)
    if leaf and (reach or carrier):
        if reach and (not carrier or rng.random() < 0.6):
            f = rng.choice(reach)
            return ctx.x if ctx.is_identity(f) else ctx.alpha_app(f, ctx.x)
        return T.const(rng.choice(carrier), sort)
    if not (ops or nullary):
        raise InputError(f"no closed term of sort {sort}")
    g = rng.choice(ops or nullary)
    args = [_random_of_sort(ctx, rng, a, obj, depth - 1, local, alpha_rate, leaf_rate)
            for a in g.args]
    return T.app(sigj.local(g.name, obj), args, sort)
