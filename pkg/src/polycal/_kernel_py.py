"""Pure-Python two-phase simplex kernel over :class:`fractions.Fraction`.

This is the reference implementation of the hot loop.  ``_kernel.pyx`` is a
line-for-line Cython port over gmpy2 ``mpq``; both must pivot identically.

Problem form: minimize ``c.z`` subject to ``M z = r``, ``z >= 0``.
``hint[i]`` is a column that equals the unit vector ``e_i`` (a slack), or -1.

Returns ``(status, data)``:

* ``(0, z)``  optimal point,
* ``(1, y)``  infeasible; ``y.M >= 0`` componentwise and ``y.r == -1``,
* ``(2, d)``  unbounded; ``d >= 0``, ``M d == 0`` and ``c.d < 0``.
"""
from fractions import Fraction

OPTIMAL, INFEASIBLE, UNBOUNDED = 0, 1, 2


def _pivot(T, rhs, d, p, q):
    row = T[p]
    piv = row[q]
    if piv != 1:
        inv = 1 / piv
        for k in range(len(row)):
            if row[k]:
                row[k] = row[k] * inv
        rhs[p] = rhs[p] * inv
    nz = [k for k in range(len(row)) if row[k]]
    rp = rhs[p]
    for i in range(len(T)):
        if i == p:
            continue
        Ti = T[i]
        f = Ti[q]
        if f:
            for k in nz:
                Ti[k] = Ti[k] - f * row[k]
            if rp:
                rhs[i] = rhs[i] - f * rp
    f = d[q]
    if f:
        for k in nz:
            d[k] = d[k] - f * row[k]


def _run(T, rhs, d, basis, ncols):
    """Bland's rule on minimization form.  Returns -1 when optimal, otherwise
    the entering column that proved unboundedness."""
    m = len(T)
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
            a = T[i][q]
            if a > 0:
                ratio = rhs[i] / a
                if p < 0 or ratio < best or (ratio == best and basis[i] < basis[p]):
                    p, best = i, ratio
        if p < 0:
            return q
        _pivot(T, rhs, d, p, q)
        basis[p] = q


def simplex(M, r, c, hint=None):
    m = len(M)
    n = len(c)
    zero = Fraction(0)
    sigma = [1] * m
    T = []
    rhs = []
    for i in range(m):
        row = list(M[i])
        ri = r[i]
        if ri < 0:
            sigma[i] = -1
            row = [-x for x in row]
            ri = -ri
        T.append(row)
        rhs.append(ri)

    basis = [-1] * m
    art_rows = []
    if hint is not None:
        for i in range(m):
            h = hint[i]
            if h >= 0 and sigma[i] == 1:
                basis[i] = h
    for i in range(m):
        if basis[i] < 0:
            art_rows.append(i)
    na = len(art_rows)
    width = n + na
    for i in range(m):
        T[i].extend([zero] * na)
    for k, i in enumerate(art_rows):
        T[i][n + k] = Fraction(1)
        basis[i] = n + k

    # phase 1: minimise the sum of artificials
    d = [zero] * width
    for i in art_rows:
        Ti = T[i]
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
            art_col = {i: n + k for k, i in enumerate(art_rows)}
            y = []
            for i in range(m):
                if i in art_col:
                    pi = 1 - d[art_col[i]]
                else:
                    pi = -d[hint[i]]
                y.append(-sigma[i] * pi / w)
            return INFEASIBLE, y

        # drive zero-level artificials out of the basis
        i = 0
        while i < len(T):
            if basis[i] >= n:
                q = -1
                for j in range(n):
                    if T[i][j]:
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

    # phase 2
    d = [Fraction(x) for x in c]
    for i in range(len(T)):
        cb = c[basis[i]]
        if cb:
            Ti = T[i]
            for j in range(n):
                if Ti[j]:
                    d[j] = d[j] - cb * Ti[j]
    q = _run(T, rhs, d, basis, n)
    if q >= 0:
        ray = [zero] * n
        ray[q] = Fraction(1)
        for i in range(len(T)):
            if T[i][q]:
                ray[basis[i]] = -T[i][q]
        return UNBOUNDED, ray
    z = [zero] * n
    for i in range(len(T)):
        z[basis[i]] = rhs[i]
    return OPTIMAL, z
