"""Rational scalars, vectors and the small amount of dense linear algebra we need.

``Rat`` is :class:`fractions.Fraction`; vectors are tuples of ``Rat`` and
matrices are tuples of row tuples.  Every helper returns fresh tuples so
values can be shared freely.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
Vec = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)

_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rat(text) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` exactly.  Ints and Fractions pass through."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise ValueError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"rational literals must be strings, got {type(text).__name__}")
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def rat_str(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating-point values are not accepted; use strings or Fractions")
    if isinstance(x, str):
        return parse_rat(x)
    return Fraction(x)


def vec(xs: Iterable) -> Vec:
    return tuple(as_rat(x) for x in xs)


def mat(rows: Iterable[Iterable]) -> tuple:
    return tuple(vec(r) for r in rows)


def parse_csv(text: str) -> Vec:
    """``"0,1/2"`` -> (0, 1/2).  The empty string is the 0-dim vector."""
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rat(t) for t in text.split(","))


def dot(a: Sequence, b: Sequence) -> Fraction:
    s = ZERO
    for x, y in zip(a, b):
        if x and y:
            s += x * y
    return s


def add(a: Sequence, b: Sequence) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def scale(t, a: Sequence) -> Vec:
    return tuple(t * x for x in a)


def neg(a: Sequence) -> Vec:
    return tuple(-x for x in a)


def zeros(n: int) -> Vec:
    return (ZERO,) * n


def unit(n: int, i: int) -> Vec:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero(a: Sequence) -> bool:
    return not any(a)


def matvec(M: Sequence[Sequence], x: Sequence) -> Vec:
    return tuple(dot(row, x) for row in M)


def transpose(M: Sequence[Sequence], ncols: int | None = None) -> tuple:
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(tuple(col) for col in zip(*M))


def identity(n: int) -> tuple:
    return tuple(unit(n, i) for i in range(n))


def primitive(a: Sequence, b=ZERO) -> tuple[Vec, Fraction]:
    """Scale the row ``a.x <= b`` by a positive factor so that ``a`` is a
    primitive integer vector (gcd 1).  Zero rows are returned unchanged."""
    from math import gcd

    nz = [x for x in a if x]
    if not nz:
        return tuple(a), b
    lcm = 1
    for x in nz:
        d = x.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(x * lcm) for x in a]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    f = Fraction(lcm, g)
    return tuple(Fraction(v // g) for v in ints), b * f


def rref(rows: Sequence[Sequence], rhs: Sequence | None = None, ncols: int | None = None):
    """Reduced row echelon form of ``[rows | rhs]``.

    Returns ``(R, r, pivots, inconsistent)`` where zero rows are dropped.
    ``inconsistent`` is True when a row ``0 = c`` with ``c != 0`` appeared.
    """
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    A = [list(r) for r in rows]
    b = list(rhs) if rhs is not None else [ZERO] * len(A)
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c]), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        b[r], b[p] = b[p], b[r]
        piv = A[r][c]
        if piv != 1:
            A[r] = [x / piv for x in A[r]]
            b[r] = b[r] / piv
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
                b[i] = b[i] - f * b[r]
        pivots.append(c)
        r += 1
        if r == len(A):
            break
    inconsistent = any(b[i] for i in range(r, len(A)))
    return tuple(tuple(row) for row in A[:r]), tuple(b[:r]), tuple(pivots), inconsistent


def nullspace_basis(M: Sequence[Sequence], ncols: int | None = None) -> list[Vec]:
    """Exact basis of ``{v | M v = 0}``, one vector per free column of the RREF."""
    if ncols is None:
        if not M:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(M[0])
    R, _, pivots, _ = rref(M, ncols=ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, pc in zip(R, pivots):
            v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def rank(M: Sequence[Sequence], ncols: int | None = None) -> int:
    return len(rref(M, ncols=ncols)[2])
