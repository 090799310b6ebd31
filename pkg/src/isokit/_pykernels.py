"""Pure-Python versions of the enumeration kernels.

Tables are flat lists of ints: a Cayley table of order ``n`` is stored
row-major, ``mul[a * n + b] = a*b``. Maps between groups are lists indexed
by source element. ``_ckernels`` exposes the same functions.
"""


def hom_violation(mul_src, n_src, mul_dst, n_dst, phi):
    """Return the first pair ``(a, b)`` with phi(ab) != phi(a)phi(b), or None."""
    for a in range(n_src):
        pa = phi[a]
        row = a * n_src
        prow = pa * n_dst
        for b in range(n_src):
            if phi[mul_src[row + b]] != mul_dst[prow + phi[b]]:
                return (a, b)
    return None


def element_orders(mul, n, unit):
    orders = []
    for a in range(n):
        k, x = 1, a
        while x != unit:
            x = mul[x * n + a]
            k += 1
        orders.append(k)
    return orders


def generating_words(mul, n, unit):
    """Greedy generating set plus a spanning tree expressing every element.

    Returns ``(gens, order, parent, via)``: ``order`` lists elements in BFS
    order from the unit, and each non-unit ``e`` satisfies
    ``e == mul[parent[e] * n + gens[via[e]]]``.
    """
    gens = []
    parent = [-1] * n
    via = [-1] * n
    seen = [False] * n
    seen[unit] = True
    order = [unit]
    for a in range(n):
        if seen[a]:
            continue
        gens.append(a)
        # re-close under the enlarged generating set
        queue = list(order)
        head = 0
        while head < len(queue):
            x = queue[head]
            head += 1
            for gi, g in enumerate(gens):
                y = mul[x * n + g]
                if not seen[y]:
                    seen[y] = True
                    parent[y] = x
                    via[y] = gi
                    order.append(y)
                    queue.append(y)
    return gens, order, parent, via


def automorphisms(mul, n, unit):
    """All automorphisms of the group as image lists, in lexicographic order."""
    gens, order, parent, via = generating_words(mul, n, unit)
    orders = element_orders(mul, n, unit)
    cands = [[b for b in range(n) if orders[b] == orders[g]] for g in gens]
    found = []
    images = [0] * len(gens)

    def extend():
        phi = [-1] * n
        phi[unit] = unit
        for e in order[1:]:
            phi[e] = mul[phi[parent[e]] * n + images[via[e]]]
        hit = [False] * n
        for v in phi:
            if hit[v]:
                return None
            hit[v] = True
        if hom_violation(mul, n, mul, n, phi) is not None:
            return None
        return phi

    def rec(k):
        if k == len(gens):
            phi = extend()
            if phi is not None:
                found.append(phi)
            return
        for b in cands[k]:
            images[k] = b
            rec(k + 1)

    rec(0)
    found.sort()
    return found


def limit_tuples(sizes, edges):
    """Tuples ``t`` with ``fmap[t[j]] == t[k]`` for every edge ``(j, k, fmap)``.

    Objects are assigned in index order; each edge is checked as soon as
    both its endpoints are fixed.
    """
    m = len(sizes)
    by_last = [[] for _ in range(m)]
    for j, k, fmap in edges:
        by_last[max(j, k)].append((j, k, fmap))
    out = []
    cur = [0] * m

    def rec(i):
        if i == m:
            out.append(tuple(cur))
            return
        for v in range(sizes[i]):
            cur[i] = v
            if all(fmap[cur[j]] == cur[k] for j, k, fmap in by_last[i]):
                rec(i + 1)

    rec(0)
    return out


def natural_families(cands, edges):
    """Families of maps ``(c_0, ..., c_{m-1})`` with ``c_i`` from ``cands[i]``
    such that ``c_k[fmap[a]] == fmap[c_j[a]]`` for every edge ``(j, k, fmap)``
    and every ``a``. Returns index tuples into ``cands``."""
    m = len(cands)
    by_last = [[] for _ in range(m)]
    for j, k, fmap in edges:
        by_last[max(j, k)].append((j, k, fmap))
    out = []
    cur = [0] * m

    def ok(i):
        for j, k, fmap in by_last[i]:
            cj = cands[j][cur[j]]
            ck = cands[k][cur[k]]
            for a in range(len(fmap)):
                if ck[fmap[a]] != fmap[cj[a]]:
                    return False
        return True

    def rec(i):
        if i == m:
            out.append(tuple(cur))
            return
        for v in range(len(cands[i])):
            cur[i] = v
            if ok(i):
                rec(i + 1)

    rec(0)
    return out
