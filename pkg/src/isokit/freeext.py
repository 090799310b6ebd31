"""Free extensions of finite groups by indeterminates.

A word in the free product ``G * F(X)`` is a tuple of syllables. A syllable
is either an ``int`` (a non-unit element index of G) or a pair
``(var, exponent)`` with a nonzero exponent. In normal form no two group
syllables are adjacent, no two adjacent blocks share an indeterminate, and
the unit never appears; normal forms are unique, so equality in the free
product is tuple equality.

Provable equality in the free extension of a group is decided by these
normal forms, which are sound and complete for the theory of groups.
"""

from dataclasses import dataclass

from isokit.errors import InputError

X = "x"
EXPONENTS = (-2, -1, 1, 2)
INVERSE_SEARCH_SLACK = 2


def normalize(G, raw):
    """Normal form of a raw syllable sequence.

    Raw syllables may carry the unit, zero exponents and unmerged blocks;
    group syllables may be element names or indices.
    """
    out = []
    for syl in raw:
        if isinstance(syl, tuple):
            v, e = syl
            if not isinstance(e, int):
                raise InputError(f"exponent of {v} must be an integer")
            if e == 0:
                continue
            if out and isinstance(out[-1], tuple) and out[-1][0] == v:
                e += out.pop()[1]
                if e == 0:
                    continue
            out.append((v, e))
        else:
            g = G.index(syl) if isinstance(syl, str) else syl
            if not isinstance(g, int) or not 0 <= g < G.order:
                raise InputError(f"{syl!r} is not an element of {G.name or 'the group'}")
            if g == G.unit:
                continue
            if out and not isinstance(out[-1], tuple):
                g = G.mul[out.pop()][g]
                if g == G.unit:
                    continue
            out.append(g)
    return tuple(out)


word_normalize = normalize


def mul(G, u, v):
    return normalize(G, u + v)


def inverse(G, u):
    return tuple((s[0], -s[1]) if isinstance(s, tuple) else G.inv[s] for s in reversed(u))


def power(G, u, n):
    if n < 0:
        u, n = inverse(G, u), -n
    out = ()
    for _ in range(n):
        out = mul(G, out, u)
    return out


def letter(v, e=1):
    return ((v, e),)


def element(G, g):
    return normalize(G, [g])


def indeterminates(u):
    return {s[0] for s in u if isinstance(s, tuple)}


def substitute_many(G, s, mapping):
    """Replace every block ``vⁿ`` with ``mapping[v]ⁿ`` (unmapped variables stay)."""
    raw = []
    for syl in s:
        if isinstance(syl, tuple) and syl[0] in mapping:
            raw.extend(power(G, mapping[syl[0]], syl[1]))
        else:
            raw.append(syl)
    return normalize(G, raw)


def substitute(G, s, v, x=X):
    """``s[v/x]`` for a word ``s`` in the single indeterminate ``x``."""
    extra = indeterminates(s) - {x}
    if extra:
        raise InputError(f"word mentions indeterminates {sorted(extra)} besides {x}")
    return substitute_many(G, normalize(G, s), {x: normalize(G, v)})


def compose_subst(G, s, t, x=X):
    """The isotropy group law: ``s · t = s[t/x]``."""
    return substitute(G, s, t, x)


def conjugator_word(G, g, x=X):
    """``g x g⁻¹``."""
    g = G.index(g) if isinstance(g, str) else g
    return normalize(G, [g, (x, 1), G.inv[g]])


def commutes_generically(G, s, op, x=X):
    """Does ``s`` commute generically with the group operation ``op``?

    ``mul``: s[x₁x₂/x] = s[x₁/x]·s[x₂/x] in G * F(x₁, x₂);
    ``unit``: s[e/x] = e; ``inv``: s[x⁻¹/x] = s⁻¹.
    """
    s = normalize(G, s)
    if op == "mul":
        x1, x2 = x + "#1", x + "#2"
        lhs = substitute_many(G, s, {x: letter(x1) + letter(x2)})
        rhs = mul(G, substitute_many(G, s, {x: letter(x1)}), substitute_many(G, s, {x: letter(x2)}))
        return lhs == rhs
    if op == "unit":
        return substitute_many(G, s, {x: ()}) == ()
    if op == "inv":
        return substitute_many(G, s, {x: letter(x, -1)}) == inverse(G, s)
    raise InputError(f"unknown operation {op!r}; expected mul, unit or inv")


def words(G, max_len, vars=(X,), exponents=EXPONENTS):
    """All normal-form words with at most ``max_len`` syllables, shortest first."""
    non_unit = [g for g in range(G.order) if g != G.unit]
    blocks = [(v, e) for v in sorted(vars) for e in exponents]

    def exact(prefix, remaining):
        if remaining == 0:
            yield prefix
            return
        last = prefix[-1] if prefix else None
        if last is None or isinstance(last, tuple):
            for g in non_unit:
                yield from exact(prefix + (g,), remaining - 1)
        for b in blocks:
            if isinstance(last, tuple) and last[0] == b[0]:
                continue
            yield from exact(prefix + (b,), remaining - 1)

    for n in range(max_len + 1):
        yield from exact((), n)


def is_invertible(G, s, x=X, slack=INVERSE_SEARCH_SLACK):
    """Search for ``t`` with ``s[t/x] = x = t[s/x]``.

    Candidates have at most ``len(s) + slack`` syllables and exponents in
    ``EXPONENTS``; returns the first inverse found (shortest, then
    lexicographic) or None. A None answer is relative to this bound.
    """
    s = normalize(G, s)
    target = letter(x)
    for t in words(G, len(s) + slack, (x,)):
        if substitute_many(G, s, {x: t}) == target and substitute_many(G, t, {x: s}) == target:
            return t
    return None


@dataclass(frozen=True)
class IsotropyElement:
    word: tuple
    inverse: tuple
    invertible: bool = True
    commutes_mul: bool = True
    commutes_unit: bool = True
    commutes_inv: bool = True


def _isotropy_candidate(G, w, x):
    if not all(commutes_generically(G, w, op, x) for op in ("unit", "inv", "mul")):
        return None
    t = is_invertible(G, w, x)
    return None if t is None else IsotropyElement(w, t)


def _check_chunk(payload):
    G, chunk, x = payload
    return [_isotropy_candidate(G, w, x) for w in chunk]


def isotropy_search(G, max_len=3, x=X, jobs=1):
    """Words of at most ``max_len`` syllables that are substitutionally
    invertible and commute generically with m, e and inv.

    With ``jobs > 1`` candidates are checked in worker processes; the
    result order is the same as in the serial search.
    """
    if max_len < 3:
        raise InputError("max_len must be at least 3")
    cands = words(G, max_len, (x,))
    if jobs <= 1:
        found = (_isotropy_candidate(G, w, x) for w in cands)
    else:
        from concurrent.futures import ProcessPoolExecutor

        cands = list(cands)
        size = max(1, len(cands) // (4 * jobs))
        chunks = [(G, cands[k:k + size], x) for k in range(0, len(cands), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            found = [r for part in pool.map(_check_chunk, chunks) for r in part]
    return [e for e in found if e is not None]


def format_word(G, w):
    if not w:
        return "e"
    parts = []
    for s in w:
        if isinstance(s, tuple):
            v, e = s
            parts.append(v if e == 1 else f"{v}^{e}")
        else:
            parts.append(G.names[s])
    return "·".join(parts)


def word_to_json(G, w):
    out = []
    for s in w:
        if isinstance(s, tuple):
            out.append({"x": s[1]} if s[0] == X else {"x": s[1], "var": s[0]})
        else:
            out.append({"g": G.names[s]})
    return out


def word_from_json(G, data):
    raw = []
    for syl in data:
        if not isinstance(syl, dict):
            raise InputError(f"bad syllable {syl!r}")
        if "g" in syl:
            raw.append(G.index(syl["g"]))
        elif "x" in syl:
            raw.append((syl.get("var", X), int(syl["x"])))
        else:
            raise InputError(f"bad syllable {syl!r}")
    return normalize(G, raw)


class FreePresheafExtension:
    """The presheaf F⟨x⟩ freely extending F: J → Group by one indeterminate at ``obj``.

    At object j the group is F(j) * F({x_f : f: obj → j}); indeterminate
    ``x_f`` is named by the morphism ``f``, and F⟨x⟩(h) sends ``x_f`` to
    ``x_{h∘f}``. Elements are words; only their behaviour on generators is
    ever needed, so the infinite groups are never enumerated.
    """

    def __init__(self, F, obj):
        self.F = F
        self.obj = obj
        self.base = F.base

    def group(self, j):
        return self.F.at(j)

    def mul(self, j, u, v):
        return mul(self.F.at(j), u, v)

    def inv(self, j, u):
        return inverse(self.F.at(j), u)

    def act(self, h, u):
        J = self.base
        G, H = self.F.at(J.dom(h)), self.F.at(J.cod(h))
        Fh = self.F.arrow(h)
        raw = [(J.compose(h, s[0]), s[1]) if isinstance(s, tuple) else Fh(s) for s in u]
        return normalize(H, raw)

    def generators(self, j):
        G = self.F.at(j)
        gens = [(g,) for g in range(G.order) if g != G.unit]
        return gens + [letter(f) for f in self.base.hom(self.obj, j)]

    def include(self, j, a):
        """The unit η: F → F⟨x⟩ at object j."""
        return element(self.F.at(j), a)
