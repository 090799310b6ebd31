# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels. Same API as ``_pykernels``."""

from libc.stdlib cimport malloc, free


cdef int* _buf(seq) except NULL:
    cdef Py_ssize_t i, n = len(seq)
    cdef int* p = <int*> malloc((n if n > 0 else 1) * sizeof(int))
    if p == NULL:
        raise MemoryError()
    for i in range(n):
        p[i] = seq[i]
    return p


cdef inline int _violation(const int* ms, int ns, const int* md, int nd, const int* phi,
                           int* wa, int* wb) noexcept nogil:
    cdef int a, b, pa
    for a in range(ns):
        pa = phi[a]
        for b in range(ns):
            if phi[ms[a * ns + b]] != md[pa * nd + phi[b]]:
                wa[0] = a
                wb[0] = b
                return 1
    return 0


def hom_violation(mul_src, int n_src, mul_dst, int n_dst, phi):
    cdef int* ms = _buf(mul_src)
    cdef int* md = _buf(mul_dst)
    cdef int* p = _buf(phi)
    cdef int a = -1, b = -1, bad
    with nogil:
        bad = _violation(ms, n_src, md, n_dst, p, &a, &b)
    free(ms)
    free(md)
    free(p)
    return (a, b) if bad else None


def element_orders(mul, int n, int unit):
    cdef int* m = _buf(mul)
    cdef int a, k, x
    out = []
    for a in range(n):
        k = 1
        x = a
        while x != unit:
            x = m[x * n + a]
            k += 1
        out.append(k)
    free(m)
    return out


def generating_words(mul, int n, int unit):
    from isokit._pykernels import generating_words as gw
    return gw(mul, n, unit)


def automorphisms(mul, int n, int unit):
    gens, order, parent, via = generating_words(mul, n, unit)
    orders = element_orders(mul, n, unit)
    cdef int ng = len(gens)
    cdef int* m = _buf(mul)
    cdef int* ordr = _buf(order)
    cdef int* par = _buf(parent)
    cdef int* vi = _buf(via)
    cdef int* phi = <int*> malloc(n * sizeof(int))
    cdef int* hit = <int*> malloc(n * sizeof(int))
    cdef int* img = <int*> malloc((ng if ng > 0 else 1) * sizeof(int))
    cdef int* pos = <int*> malloc((ng if ng > 0 else 1) * sizeof(int))
    cdef int* ncand = <int*> malloc((ng if ng > 0 else 1) * sizeof(int))
    cdef int* cand = <int*> malloc((ng * n if ng > 0 else 1) * sizeof(int))
    cdef int g, b, k, e, t, ok, wa, wb
    found = []
    for g in range(ng):
        t = 0
        for b in range(n):
            if orders[b] == orders[gens[g]]:
                cand[g * n + t] = b
                t += 1
        ncand[g] = t
        if t == 0:
            ng = -1
            break
    if ng == 0:
        found.append([unit] * n)
    elif ng > 0:
        # odometer over candidate images of the generators
        for g in range(ng):
            pos[g] = 0
        while True:
            for g in range(ng):
                img[g] = cand[g * n + pos[g]]
            phi[unit] = unit
            for k in range(1, n):
                e = ordr[k]
                phi[e] = m[phi[par[e]] * n + img[vi[e]]]
            for k in range(n):
                hit[k] = 0
            ok = 1
            for k in range(n):
                if hit[phi[k]]:
                    ok = 0
                    break
                hit[phi[k]] = 1
            if ok and not _violation(m, n, m, n, phi, &wa, &wb):
                found.append([phi[k] for k in range(n)])
            g = ng - 1
            while g >= 0:
                pos[g] += 1
                if pos[g] < ncand[g]:
                    break
                pos[g] = 0
                g -= 1
            if g < 0:
                break
    free(m)
    free(ordr)
    free(par)
    free(vi)
    free(phi)
    free(hit)
    free(img)
    free(pos)
    free(ncand)
    free(cand)
    found.sort()
    return found


def limit_tuples(sizes, edges):
    cdef int m = len(sizes)
    cdef int ne = len(edges)
    cdef int* sz = _buf(sizes)
    cdef int* ej = <int*> malloc((ne if ne > 0 else 1) * sizeof(int))
    cdef int* ek = <int*> malloc((ne if ne > 0 else 1) * sizeof(int))
    cdef int* elast = <int*> malloc((ne if ne > 0 else 1) * sizeof(int))
    cdef int** emap = <int**> malloc((ne if ne > 0 else 1) * sizeof(int*))
    cdef int* cur = <int*> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int i, q, good
    for q in range(ne):
        j, k, fmap = edges[q]
        ej[q] = j
        ek[q] = k
        elast[q] = j if j > k else k
        emap[q] = _buf(fmap)
    out = []
    if m == 0:
        out.append(())
    else:
        i = 0
        cur[0] = -1
        while i >= 0:
            cur[i] += 1
            if cur[i] >= sz[i]:
                i -= 1
                continue
            good = 1
            for q in range(ne):
                if elast[q] == i and emap[q][cur[ej[q]]] != cur[ek[q]]:
                    good = 0
                    break
            if not good:
                continue
            if i == m - 1:
                out.append(tuple([cur[t] for t in range(m)]))
            else:
                i += 1
                cur[i] = -1
    for q in range(ne):
        free(emap[q])
    free(sz)
    free(ej)
    free(ek)
    free(elast)
    free(emap)
    free(cur)
    return out


def natural_families(cands, edges):
    cdef int m = len(cands)
    cdef int ne = len(edges)
    cdef int* nc = <int*> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int** cb = <int**> malloc((m if m > 0 else 1) * sizeof(int*))
    cdef int* width = <int*> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int* ej = <int*> malloc((ne if ne > 0 else 1) * sizeof(int))
    cdef int* ek = <int*> malloc((ne if ne > 0 else 1) * sizeof(int))
    cdef int* elen = <int*> malloc((ne if ne > 0 else 1) * sizeof(int))
    cdef int* elast = <int*> malloc((ne if ne > 0 else 1) * sizeof(int))
    cdef int** emap = <int**> malloc((ne if ne > 0 else 1) * sizeof(int*))
    cdef int* cur = <int*> malloc((m if m > 0 else 1) * sizeof(int))
    cdef int i, q, a, good, wj, wk
    cdef int* cj
    cdef int* ck
    cdef int* fm
    for i in range(m):
        nc[i] = len(cands[i])
        width[i] = len(cands[i][0]) if nc[i] > 0 else 0
        cb[i] = _buf([v for c in cands[i] for v in c])
    for q in range(ne):
        j, k, fmap = edges[q]
        ej[q] = j
        ek[q] = k
        elen[q] = len(fmap)
        elast[q] = j if j > k else k
        emap[q] = _buf(fmap)
    out = []
    if m == 0:
        out.append(())
    else:
        i = 0
        cur[0] = -1
        while i >= 0:
            cur[i] += 1
            if cur[i] >= nc[i]:
                i -= 1
                continue
            good = 1
            for q in range(ne):
                if elast[q] != i:
                    continue
                wj = width[ej[q]]
                wk = width[ek[q]]
                cj = cb[ej[q]] + cur[ej[q]] * wj
                ck = cb[ek[q]] + cur[ek[q]] * wk
                fm = emap[q]
                for a in range(elen[q]):
                    if ck[fm[a]] != fm[cj[a]]:
                        good = 0
                        break
                if not good:
                    break
            if not good:
                continue
            if i == m - 1:
                out.append(tuple([cur[t] for t in range(m)]))
            else:
                i += 1
                cur[i] = -1
    for i in range(m):
        free(cb[i])
    for q in range(ne):
        free(emap[q])
    free(nc)
    free(cb)
    free(width)
    free(ej)
    free(ek)
    free(elen)
    free(elast)
    free(emap)
    free(cur)
    return out
