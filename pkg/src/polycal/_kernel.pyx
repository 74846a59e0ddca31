# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled simplex kernel.  Same pivoting as ``_kernel_py`` but over gmpy2
``mpq``; inputs and outputs are :class:`fractions.Fraction`."""
from fractions import Fraction
from gmpy2 import mpq

cdef enum:
    OPTIMAL = 0
    INFEASIBLE = 1
    UNBOUNDED = 2


cdef inline object _q(object x):
    return mpq(x.numerator, x.denominator)


cdef inline object _f(object x):
    return Fraction(int(x.numerator), int(x.denominator))


cdef void _pivot(list T, list rhs, list d, Py_ssize_t p, Py_ssize_t q):
    cdef list row = <list>T[p]
    cdef list Ti
    cdef list nz
    cdef Py_ssize_t i, k, kk, width = len(row)
    cdef object piv = row[q], inv, f, rp
    if piv != 1:
        inv = 1 / piv
        for k in range(width):
            if row[k]:
                row[k] = row[k] * inv
        rhs[p] = rhs[p] * inv
    nz = [k for k in range(width) if row[k]]
    rp = rhs[p]
    for i in range(len(T)):
        if i == p:
            continue
        Ti = <list>T[i]
        f = Ti[q]
        if f:
            for kk in range(len(nz)):
                k = nz[kk]
                Ti[k] = Ti[k] - f * row[k]
            if rp:
                rhs[i] = rhs[i] - f * rp
    f = d[q]
    if f:
        for kk in range(len(nz)):
            k = nz[kk]
            d[k] = d[k] - f * row[k]


cdef Py_ssize_t _run(list T, list rhs, list d, list basis, Py_ssize_t ncols):
    cdef Py_ssize_t m = len(T), i, j, p, q
    cdef object best, ratio, a
    while True:
        q = -1
        for j in range(ncols):
            if d[j] < 0:
                q = j
                break
        if q < 0:
            return -1
        p = -1
        best = None
        for i in range(m):
            a = (<list>T[i])[q]
            if a > 0:
                ratio = rhs[i] / a
                if p < 0 or ratio < best or (ratio == best and basis[i] < basis[p]):
                    p = i
                    best = ratio
        if p < 0:
            return q
        _pivot(T, rhs, d, p, q)
        basis[p] = q


def simplex(M, r, c, hint=None):
    cdef Py_ssize_t m = len(M), n = len(c), i, j, k, q, na, width
    cdef list T = [], rhs = [], sigma = [1] * m, basis = [-1] * m, art_rows = []
    cdef list row, Ti, d, cq, y, z, ray
    cdef object zero = mpq(0), one = mpq(1), ri, w, pi, cb
    for i in range(m):
        row = [_q(x) for x in M[i]]
        ri = _q(r[i])
        if ri < 0:
            sigma[i] = -1
            row = [-x for x in row]
            ri = -ri
        T.append(row)
        rhs.append(ri)

    if hint is not None:
        for i in range(m):
            if hint[i] >= 0 and sigma[i] == 1:
                basis[i] = hint[i]
    for i in range(m):
        if basis[i] < 0:
            art_rows.append(i)
    na = len(art_rows)
    width = n + na
    for i in range(m):
        (<list>T[i]).extend([zero] * na)
    for k in range(na):
        i = art_rows[k]
        (<list>T[i])[n + k] = one
        basis[i] = n + k

    d = [zero] * width
    for i in art_rows:
        Ti = <list>T[i]
        for j in range(n):
            if Ti[j]:
                d[j] = d[j] - Ti[j]
    if na:
        _run(T, rhs, d, basis, width)
        w = zero
        for i in range(m):
            if basis[i] >= n:
                w = w + rhs[i]
        if w > 0:
            art_col = {art_rows[k]: n + k for k in range(na)}
            y = []
            for i in range(m):
                if i in art_col:
                    pi = 1 - d[art_col[i]]
                else:
                    pi = -d[hint[i]]
                y.append(_f(-sigma[i] * pi / w))
            return INFEASIBLE, y

        i = 0
        while i < len(T):
            if basis[i] >= n:
                q = -1
                Ti = <list>T[i]
                for j in range(n):
                    if Ti[j]:
                        q = j
                        break
                if q < 0:
                    del T[i]
                    del rhs[i]
                    del basis[i]
                    continue
                _pivot(T, rhs, d, i, q)
                basis[i] = q
            i += 1
        for row in T:
            del row[n:]

    cq = [_q(x) for x in c]
    d = list(cq)
    for i in range(len(T)):
        cb = cq[basis[i]]
        if cb:
            Ti = <list>T[i]
            for j in range(n):
                if Ti[j]:
                    d[j] = d[j] - cb * Ti[j]
    q = _run(T, rhs, d, basis, n)
    if q >= 0:
        ray = [Fraction(0)] * n
        ray[q] = Fraction(1)
        for i in range(len(T)):
            if (<list>T[i])[q]:
                ray[basis[i]] = _f(-(<list>T[i])[q])
        return UNBOUNDED, ray
    z = [Fraction(0)] * n
    for i in range(len(T)):
        z[basis[i]] = _f(rhs[i])
    return OPTIMAL, z
