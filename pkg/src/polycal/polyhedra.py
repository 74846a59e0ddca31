"""H-representation polyhedra ``{x | A x <= b, E x = e}`` over the rationals.

Everything here reduces to LPs or to Fourier-Motzkin elimination; vertices
are never enumerated.  Relative interiors are never materialised as sets:
they are handled through :func:`ri_member` and witness points.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionMismatch, EmptySet, PointNotInSet
from .lp import INFEASIBLE, OPTIMAL, UNBOUNDED, LPResult, _solve
from .rational import (ONE, ZERO, add, as_rat, dot, nullspace_basis, primitive, rref, scale,
                       sub, unit, zeros)

Row = tuple  # (a: tuple[Fraction, ...], b: Fraction)


def _coerce_rows(rows, dim, what):
    out = []
    for a, b in rows:
        a = tuple(as_rat(x) for x in a)
        if len(a) != dim:
            raise DimensionMismatch(f"{what} row has length {len(a)}, expected {dim}")
        out.append((a, as_rat(b)))
    return tuple(out)


@dataclass(frozen=True)
class HPoly:
    """Convex polyhedron ``{x | <a,x> <= b for (a,b) in ineqs, <c,x> = d for (c,d) in eqs}``."""

    dim: int
    ineqs: tuple = ()
    eqs: tuple = ()

    def __post_init__(self):
        if self.dim < 0:
            raise ValueError("negative dimension")
        object.__setattr__(self, "ineqs", _coerce_rows(self.ineqs, self.dim, "inequality"))
        object.__setattr__(self, "eqs", _coerce_rows(self.eqs, self.dim, "equality"))

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_matrices(cls, A=(), b=(), E=(), e=(), dim=None) -> "HPoly":
        if dim is None:
            rows = list(A) or list(E)
            if not rows:
                raise ValueError("dim required for a system without rows")
            dim = len(rows[0])
        return cls(dim, tuple(zip(A, b)), tuple(zip(E, e)))

    @classmethod
    def universe(cls, dim: int) -> "HPoly":
        return cls(dim)

    @classmethod
    def empty(cls, dim: int) -> "HPoly":
        return cls(dim, ((zeros(dim), -ONE),))

    @classmethod
    def point(cls, p: Sequence) -> "HPoly":
        p = tuple(as_rat(x) for x in p)
        n = len(p)
        return cls(n, (), tuple((unit(n, i), p[i]) for i in range(n)))

    @classmethod
    def box(cls, lo: Sequence, hi: Sequence) -> "HPoly":
        n = len(lo)
        rows = []
        for i in range(n):
            rows.append((unit(n, i), as_rat(hi[i])))
            rows.append((scale(-1, unit(n, i)), -as_rat(lo[i])))
        return cls(n, tuple(rows))

    # -- cheap queries ------------------------------------------------------

    def contains_point(self, x: Sequence) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of length {len(x)} in dimension {self.dim}")
        return (all(dot(a, x) <= b for a, b in self.ineqs)
                and all(dot(c, x) == d for c, d in self.eqs))

    def maximize(self, c: Sequence) -> LPResult:
        return _solve(tuple(as_rat(x) for x in c), self.ineqs, self.eqs, True)

    def minimize(self, c: Sequence) -> LPResult:
        return _solve(tuple(as_rat(x) for x in c), self.ineqs, self.eqs, False)

    @cached_property
    def _feasibility(self) -> LPResult:
        return _solve(zeros(self.dim), self.ineqs, self.eqs, True)

    def is_empty(self) -> bool:
        return self._feasibility.status == INFEASIBLE

    def any_point(self) -> tuple:
        res = self._feasibility
        if res.status == INFEASIBLE:
            raise EmptySet("polyhedron is empty")
        return res.point

    @cached_property
    def _analysis(self) -> "_Analysis":
        return _analyze(self)

    @cached_property
    def canonical(self) -> "CanonicalHPoly":
        return _canonicalize(self)

    def to_json(self) -> dict:
        from .formats import hpoly_doc
        return hpoly_doc(self)


@dataclass(frozen=True)
class CanonicalHPoly(HPoly):
    """An :class:`HPoly` with implicit equalities promoted to ``eqs`` (in
    reduced row echelon form), redundant inequalities removed, and a stored
    relative-interior witness ``ri_point``."""

    ri_point: tuple = ()


@dataclass(frozen=True)
class AffineSet:
    """``{x | <c,x> = d}``, equivalently ``point + span(directions)``."""

    dim: int
    eqs: tuple
    point: tuple
    directions: tuple

    def contains_point(self, x) -> bool:
        return all(dot(c, x) == d for c, d in self.eqs)

    def as_hpoly(self) -> HPoly:
        return HPoly(self.dim, (), self.eqs)


@dataclass(frozen=True)
class _Analysis:
    """Implicit-equality split of an HPoly (no redundancy removal)."""

    empty: bool
    eqs: tuple = ()        # original eqs plus promoted implicit rows
    strict: tuple = ()     # the non-implicit inequality rows
    ri_point: tuple = ()


def _max_min_slack(dim, strict, eqs, fixed_ineqs=()):
    """max t s.t. a.x + t <= b (strict rows), fixed rows, eqs, t <= 1.
    Returns the LPResult over (x, t)."""
    ext_strict = [(a + (ONE,), b) for a, b in strict]
    ext_fixed = [(a + (ZERO,), b) for a, b in fixed_ineqs]
    cap = [(zeros(dim) + (ONE,), ONE)]
    ext_eqs = [(c + (ZERO,), d) for c, d in eqs]
    obj = zeros(dim) + (ONE,)
    return _solve(obj, ext_strict + ext_fixed + cap, ext_eqs, True)


def _analyze(P: HPoly) -> _Analysis:
    n = P.dim
    eqs = list(P.eqs)
    cand = []
    for a, b in P.ineqs:
        if not any(a):
            if b < 0:
                return _Analysis(True)
            continue  # 0 <= b with b >= 0 carries no information
        cand.append((a, b))

    res = _max_min_slack(n, cand, eqs)
    if res.status == INFEASIBLE:
        return _Analysis(True)
    if res.value > 0:
        return _Analysis(False, tuple(eqs), tuple(cand), res.point[:n])

    # some rows are implicit: max sum of capped slacks, peel off rows that move
    strict: list = []
    K = list(range(len(cand)))
    while K:
        k = len(K)
        ineqs = []
        for pos, i in enumerate(K):
            a, b = cand[i]
            s = [ZERO] * k
            s[pos] = ONE
            ineqs.append((a + tuple(s), b))
        for a, b in strict:
            ineqs.append((a + zeros(k), b))
        for pos in range(k):
            ineqs.append((zeros(n) + unit(k, pos), ONE))
            ineqs.append((zeros(n) + scale(-1, unit(k, pos)), ZERO))
        ext_eqs = [(c + zeros(k), d) for c, d in eqs]
        res = _solve(zeros(n) + (ONE,) * k, ineqs, ext_eqs, True)
        if res.status == INFEASIBLE:
            return _Analysis(True)
        moved = [i for pos, i in enumerate(K) if res.point[n + pos] > 0]
        if not moved:
            break
        strict.extend(cand[i] for i in moved)
        K = [i for i in K if i not in moved]
    strict_rows = [cand[i] for i in range(len(cand)) if i not in K]
    eqs.extend(cand[i] for i in K)
    res = _max_min_slack(n, strict_rows, eqs)
    assert res.status == OPTIMAL and res.value > 0
    return _Analysis(False, tuple(eqs), tuple(strict_rows), res.point[:n])


def _analysis(P: HPoly) -> _Analysis:
    an = P._analysis
    if an.empty:
        raise EmptySet("polyhedron is empty")
    return an


def _reduce_eqs(eqs, dim):
    """RREF of an equality system (consistent by assumption)."""
    if not eqs:
        return ()
    R, r, _, bad = rref([c for c, _ in eqs], [d for _, d in eqs], ncols=dim)
    assert not bad
    return tuple(zip(R, r))


def _reduce_row(a, b, eqs_rref, dim):
    """Eliminate the pivot columns of an RREF equality system from a row."""
    a = list(a)
    for c, d in eqs_rref:
        p = next(j for j in range(dim) if c[j])
        f = a[p]
        if f:
            a = [x - f * y for x, y in zip(a, c)]
            b = b - f * d
    return tuple(a), b


def _canonicalize(P: HPoly) -> CanonicalHPoly:
    an = _analysis(P)
    n = P.dim
    eqs = _reduce_eqs(an.eqs, n)
    rows: list = []
    seen: dict = {}
    for a, b in an.strict:
        a, b = _reduce_row(a, b, eqs, n)
        if not any(a):
            continue
        a, b = primitive(a, b)
        if a in seen:
            j = seen[a]
            if b < rows[j][1]:
                rows[j] = (a, b)
            continue
        seen[a] = len(rows)
        rows.append((a, b))
    kept = _remove_redundant(rows, eqs)
    return CanonicalHPoly(n, tuple(kept), eqs, an.ri_point)


def _remove_redundant(rows, eqs):
    """Drop rows implied by the others, one LP per row, in order."""
    kept = list(rows)
    i = 0
    while i < len(kept):
        a, b = kept[i]
        others = kept[:i] + kept[i + 1:]
        res = _solve(a, others, eqs, True)
        if res.status == OPTIMAL and res.value <= b:
            del kept[i]
        else:
            i += 1
    return kept


# -- public operations ------------------------------------------------------

def is_empty(P: HPoly) -> bool:
    return P.is_empty()


def canonicalize(P: HPoly) -> CanonicalHPoly:
    """Promote implicit equalities, drop redundant rows, attach an ri witness.

    Raises :class:`EmptySet` for an empty polyhedron.
    """
    return P.canonical


def affine_hull(P: HPoly) -> AffineSet:
    C = P.canonical
    base = C.ri_point
    if C.eqs:
        dirs = nullspace_basis([c for c, _ in C.eqs], ncols=P.dim)
    else:
        dirs = [unit(P.dim, i) for i in range(P.dim)]
    return AffineSet(P.dim, C.eqs, base, tuple(dirs))


def ri_member(P: HPoly, x: Sequence) -> bool:
    """True iff ``x`` lies in the relative interior of ``P``."""
    if len(x) != P.dim:
        raise DimensionMismatch(f"point of length {len(x)} in dimension {P.dim}")
    an = _analysis(P)
    x = tuple(as_rat(t) for t in x)
    return (all(dot(c, x) == d for c, d in an.eqs)
            and all(dot(a, x) < b for a, b in an.strict))


def ri_point(P: HPoly) -> tuple:
    """A deterministic point of ri(P) from the max-min-slack LP."""
    return _analysis(P).ri_point


def ri_intersect_witness(*polys: HPoly) -> tuple | None:
    """A common relative-interior point of all ``polys`` or None."""
    if not polys:
        raise ValueError("need at least one polyhedron")
    dim = polys[0].dim
    strict, eqs = [], []
    for P in polys:
        if P.dim != dim:
            raise DimensionMismatch("polyhedra live in different dimensions")
        an = P._analysis
        if an.empty:
            return None
        strict.extend(an.strict)
        eqs.extend(an.eqs)
    res = _max_min_slack(dim, strict, eqs)
    if res.status == OPTIMAL and res.value > 0:
        return res.point[:dim]
    return None


def intersect(*polys: HPoly) -> HPoly:
    dim = polys[0].dim
    if any(P.dim != dim for P in polys):
        raise DimensionMismatch("cannot intersect polyhedra of different dimensions")
    return HPoly(dim, sum((P.ineqs for P in polys), ()), sum((P.eqs for P in polys), ()))


def _embed(rows, offset, width):
    out = []
    for a, b in rows:
        out.append((zeros(offset) + a + zeros(width - offset - len(a)), b))
    return tuple(out)


def product(*polys: HPoly) -> HPoly:
    width = sum(P.dim for P in polys)
    ineqs, eqs, off = (), (), 0
    for P in polys:
        ineqs += _embed(P.ineqs, off, width)
        eqs += _embed(P.eqs, off, width)
        off += P.dim
    return HPoly(width, ineqs, eqs)


def embed(P: HPoly, offset: int, width: int) -> HPoly:
    """``P`` placed at coordinates ``offset..offset+P.dim`` of ``R^width``
    (the other coordinates are free)."""
    return HPoly(width, _embed(P.ineqs, offset, width), _embed(P.eqs, offset, width))


def embed_at(P: HPoly, coords: Sequence[int], width: int) -> HPoly:
    """``P`` with its coordinate ``i`` placed at ``coords[i]`` of ``R^width``."""
    if len(coords) != P.dim:
        raise DimensionMismatch("one target coordinate per dimension of P")

    def place(a):
        row = [ZERO] * width
        for i, j in enumerate(coords):
            row[j] = a[i]
        return tuple(row)
    return HPoly(width, tuple((place(a), b) for a, b in P.ineqs),
                 tuple((place(c), d) for c, d in P.eqs))


def reflect(P: HPoly, coords: Sequence[int]) -> HPoly:
    """``{x | x with coordinates in coords negated lies in P}``."""
    flip = set(coords)

    def re(a):
        return tuple(-x if j in flip else x for j, x in enumerate(a))
    return HPoly(P.dim, tuple((re(a), b) for a, b in P.ineqs),
                 tuple((re(c), d) for c, d in P.eqs))


def permute(P: HPoly, order: Sequence[int]) -> HPoly:
    """Reorder coordinates: new coordinate ``k`` is old coordinate ``order[k]``."""
    if sorted(order) != list(range(P.dim)):
        raise ValueError("order must be a permutation")
    def re(a):
        return tuple(a[j] for j in order)
    return HPoly(P.dim, tuple((re(a), b) for a, b in P.ineqs),
                 tuple((re(c), d) for c, d in P.eqs))


def slice_(P: HPoly, coords: Sequence[int], values: Sequence) -> HPoly:
    """Fix ``x[coords[k]] = values[k]`` and drop those coordinates."""
    if len(coords) != len(values):
        raise DimensionMismatch("coords and values differ in length")
    if any(not 0 <= c < P.dim for c in coords):
        raise DimensionMismatch("slice coordinate out of range")
    fixed = dict(zip(coords, (as_rat(v) for v in values)))
    free = [j for j in range(P.dim) if j not in fixed]

    def sub_row(a, b):
        shift = sum((a[j] * v for j, v in fixed.items()), ZERO)
        return tuple(a[j] for j in free), b - shift

    ineqs, eqs = [], []
    for a, b in P.ineqs:
        a, b = sub_row(a, b)
        if any(a) or b < 0:
            ineqs.append((a, b))
    for c, d in P.eqs:
        c, d = sub_row(c, d)
        if any(c) or d:
            eqs.append((c, d))
    return HPoly(len(free), tuple(ineqs), tuple(eqs))


slice = slice_  # noqa: A001 - public alias


def scale_set(t, P: HPoly) -> HPoly:
    """``{t x | x in P}`` for ``t > 0``."""
    t = as_rat(t)
    if t <= 0:
        raise ValueError("scale factor must be positive")
    return HPoly(P.dim, tuple((a, t * b) for a, b in P.ineqs), tuple((c, t * d) for c, d in P.eqs))


def negate(P: HPoly) -> HPoly:
    return HPoly(P.dim, tuple((scale(-1, a), b) for a, b in P.ineqs),
                 tuple((scale(-1, c), d) for c, d in P.eqs))


# -- Fourier-Motzkin --------------------------------------------------------

def eliminate(P: HPoly, keep: Sequence[int]) -> HPoly:
    """Projection of ``P`` onto the coordinates in ``keep`` (in that order).

    Equalities are used for substitution first; the remaining variables are
    removed by Fourier-Motzkin with an LP redundancy sweep after each step.
    """
    keep = list(keep)
    if len(set(keep)) != len(keep) or any(not 0 <= k < P.dim for k in keep):
        raise DimensionMismatch("keep must list distinct coordinates of P")
    out_dim = len(keep)
    an = P._analysis
    if an.empty:
        return HPoly.empty(out_dim)
    n = P.dim
    drop = [j for j in range(n) if j not in keep]
    eqs = [(list(c), d) for c, d in an.eqs]
    ineqs = [(list(a), b) for a, b in an.strict]

    # substitution through equalities
    for j in drop:
        piv = next((k for k, (c, _) in enumerate(eqs) if c[j]), None)
        if piv is None:
            continue
        c, d = eqs.pop(piv)
        cj = c[j]
        c = [x / cj for x in c]
        d = d / cj
        for rows in (eqs, ineqs):
            for k, (a, b) in enumerate(rows):
                f = a[j]
                if f:
                    rows[k] = ([x - f * y for x, y in zip(a, c)], b - f * d)

    ineqs = _dedup([(tuple(a), b) for a, b in ineqs])
    eqs = [(tuple(c), d) for c, d in eqs]
    live = [j for j in drop if any(a[j] for a, _ in ineqs)]
    while live:
        def cost(j):
            pos = sum(1 for a, _ in ineqs if a[j] > 0)
            neg = sum(1 for a, _ in ineqs if a[j] < 0)
            return pos * neg - pos - neg
        j = min(live, key=lambda j: (cost(j), j))
        pos = [(a, b) for a, b in ineqs if a[j] > 0]
        neg = [(a, b) for a, b in ineqs if a[j] < 0]
        new = [(a, b) for a, b in ineqs if not a[j]]
        for ap, bp in pos:
            for an_, bn in neg:
                lp_, ln = -an_[j], ap[j]
                a = tuple(lp_ * x + ln * y for x, y in zip(ap, an_))
                new.append((a, lp_ * bp + ln * bn))
        ineqs = _dedup(new)
        ineqs = _remove_redundant(ineqs, eqs)
        live = [k for k in live if k != j and any(a[k] for a, _ in ineqs)]

    def proj(a):
        return tuple(a[k] for k in keep)
    out_ineqs = []
    for a, b in ineqs:
        pa = proj(a)
        if any(pa) or b < 0:
            out_ineqs.append((pa, b))
    out_eqs = []
    for c, d in eqs:
        pc = proj(c)
        if any(pc) or d:
            out_eqs.append((pc, d))
    return HPoly(out_dim, tuple(out_ineqs), tuple(out_eqs))


def _dedup(rows):
    """Normalise rows to primitive integer form, keep the tightest of parallel
    copies, drop trivially true zero rows."""
    best: dict = {}
    order = []
    for a, b in rows:
        if not any(a):
            if b < 0:
                return [(a, b)]
            continue
        a, b = primitive(a, b)
        if a not in best:
            order.append(a)
            best[a] = b
        elif b < best[a]:
            best[a] = b
    return [(a, best[a]) for a in order]


def lift_exists(P: HPoly, keep: Sequence[int], y: Sequence) -> bool:
    """Direct LP test: is there ``x in P`` with ``x[keep] == y``?"""
    return not slice_(P, keep, y).is_empty()


def linear_image(P: HPoly, M: Sequence[Sequence]) -> HPoly:
    """``{M x | x in P}`` via the lift ``{(y, x) | y = M x, x in P}``."""
    M = [tuple(as_rat(v) for v in row) for row in M]
    if any(len(row) != P.dim for row in M):
        raise DimensionMismatch("matrix column count differs from dim")
    m = len(M)
    width = m + P.dim
    eqs = list(_embed(P.eqs, m, width))
    for i, row in enumerate(M):
        eqs.append((unit(m, i) + tuple(-v for v in row), ZERO))
    lifted = HPoly(width, _embed(P.ineqs, m, width), tuple(eqs))
    return eliminate(lifted, range(m))


def minkowski_sum(*polys: HPoly) -> HPoly:
    """``P1 + ... + Pk`` via the lift ``z = p1 + ... + pk``."""
    if not polys:
        raise ValueError("need at least one polyhedron")
    n = polys[0].dim
    if any(P.dim != n for P in polys):
        raise DimensionMismatch("Minkowski sum of sets in different dimensions")
    k = len(polys)
    width = n * (k + 1)
    ineqs, eqs = [], []
    for idx, P in enumerate(polys):
        ineqs.extend(_embed(P.ineqs, n * (idx + 1), width))
        eqs.extend(_embed(P.eqs, n * (idx + 1), width))
    for i in range(n):
        row = [ZERO] * width
        row[i] = ONE
        for idx in range(k):
            row[n * (idx + 1) + i] = -ONE
        eqs.append((tuple(row), ZERO))
    return eliminate(HPoly(width, tuple(ineqs), tuple(eqs)), range(n))


def disjunctive_hull(*polys: HPoly) -> HPoly:
    """Closed convex hull of a union of polyhedra (Balas lift, then projection).

    For nonempty polytopes this is exactly ``conv(P1 u ... u Pk)``.  Empty
    members are skipped.
    """
    polys = [P for P in polys if not P.is_empty()]
    if not polys:
        raise EmptySet("hull of empty sets")
    n = polys[0].dim
    if any(P.dim != n for P in polys):
        raise DimensionMismatch("hull of sets in different dimensions")
    k = len(polys)
    # variables: x (n), then per piece: x^j (n), lambda_j (1)
    width = n + k * (n + 1)
    ineqs, eqs = [], []

    def off(j):
        return n + j * (n + 1)

    for j, P in enumerate(polys):
        o = off(j)
        for a, b in P.ineqs:  # a.x^j - b lambda_j <= 0
            row = [ZERO] * width
            row[o:o + n] = a
            row[o + n] = -b
            ineqs.append((tuple(row), ZERO))
        for c, d in P.eqs:
            row = [ZERO] * width
            row[o:o + n] = c
            row[o + n] = -d
            eqs.append((tuple(row), ZERO))
        row = [ZERO] * width
        row[o + n] = -ONE
        ineqs.append((tuple(row), ZERO))
    for i in range(n):
        row = [ZERO] * width
        row[i] = ONE
        for j in range(k):
            row[off(j) + i] = -ONE
        eqs.append((tuple(row), ZERO))
    row = [ZERO] * width
    for j in range(k):
        row[off(j) + n] = ONE
    eqs.append((tuple(row), ONE))
    return eliminate(HPoly(width, tuple(ineqs), tuple(eqs)), range(n))


# -- containment ------------------------------------------------------------

def _row_escape(row, Q: HPoly, upper=True):
    """A point of Q violating ``a.x <= b`` (or ``>= b`` when upper is False), or None."""
    a, b = row
    res = Q.maximize(a) if upper else Q.minimize(a)
    if res.status == OPTIMAL:
        if (res.value > b) if upper else (res.value < b):
            return res.point
        return None
    if res.status == UNBOUNDED:
        base = Q.any_point()
        ray = res.certificate
        slope = dot(a, ray)
        gap = b - dot(a, base)
        t = abs(gap / slope) + 1
        return add(base, scale(t, ray))
    return None


def point_outside(P: HPoly, Q: HPoly) -> tuple | None:
    """A point of ``Q`` not in ``P`` (a falsifier of ``Q subset P``), or None."""
    if P.dim != Q.dim:
        raise DimensionMismatch("containment across dimensions")
    if Q.is_empty():
        return None
    for row in P.ineqs:
        w = _row_escape(row, Q)
        if w is not None:
            return w
    for c, d in P.eqs:
        w = _row_escape((c, d), Q, True)
        if w is None:
            w = _row_escape((c, d), Q, False)
        if w is not None:
            return w
    return None


def contains(P: HPoly, Q: HPoly) -> bool:
    """True iff ``Q`` is a subset of ``P`` (one LP per row of ``P``)."""
    return point_outside(P, Q) is None


def set_equal(P: HPoly, Q: HPoly) -> bool:
    return contains(P, Q) and contains(Q, P)


def difference_witness(P: HPoly, Q: HPoly) -> tuple | None:
    """A point in exactly one of ``P``, ``Q``, or None when they are equal."""
    w = point_outside(P, Q)
    if w is None:
        w = point_outside(Q, P)
    return w


# -- sampling and the segment oracle ----------------------------------------

def sample_points(P: HPoly, count: int, seed: int = 0, radius=8) -> list:
    """Deterministic points of ``P``: the ri witness, LP optima for seeded
    objectives over ``P`` clipped to a box around it, and midpoints.

    Returns ``count`` points (repeats allowed when P is small).
    """
    an = _analysis(P)
    rng = random.Random(seed)
    center = an.ri_point
    n = P.dim
    clip = intersect(P, HPoly.box([c - radius for c in center], [c + radius for c in center]))
    pts = [center]
    dirs = []
    for i in range(n):
        dirs.append(unit(n, i))
        dirs.append(scale(-1, unit(n, i)))
    while len(pts) < count:
        k = len(pts)
        if k % 3 == 2 and len(pts) >= 2:
            pts.append(scale(Fraction(1, 2), add(pts[-1], pts[-2])))
            continue
        if dirs and rng.random() < 0.4:
            c = dirs[rng.randrange(len(dirs))]
        else:
            c = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(n))
        res = clip.maximize(c)
        pts.append(res.point)
    return pts[:count]


def ri_segment_oracle(P: HPoly, xbar: Sequence, samples: int = 8, seed: int = 0) -> bool:
    """Segment-extension test of relative interior membership.

    ``xbar`` is in ri(P) iff for every ``x in P`` some ``u in P`` has ``xbar``
    strictly between ``x`` and ``u``.  Candidate points ``x`` are LP optima
    over ``P`` cut to a box around ``xbar``: for every row normal, every
    coordinate direction and ``samples`` seeded random directions.  For each
    one an LP decides ``max{m | xbar + m (xbar - x) in P, m <= 1} > 0``.
    It does not use the implicit-equality machinery of :func:`ri_member`.
    """
    xbar = tuple(as_rat(t) for t in xbar)
    if P.is_empty():
        raise EmptySet("polyhedron is empty")
    if not P.contains_point(xbar):
        raise PointNotInSet("xbar is not in P")
    n = P.dim
    R = 4
    clip = intersect(P, HPoly.box([c - R for c in xbar], [c + R for c in xbar]))
    rng = random.Random(seed)
    objectives = [scale(-1, a) for a, _ in P.ineqs]
    objectives += [c for c, _ in P.eqs] + [scale(-1, c) for c, _ in P.eqs]
    for i in range(n):
        objectives.append(unit(n, i))
        objectives.append(scale(-1, unit(n, i)))
    for _ in range(samples):
        objectives.append(tuple(Fraction(rng.randint(-7, 7), rng.randint(1, 4)) for _ in range(n)))
    for c in objectives:
        x = clip.maximize(c).point
        if x == xbar:
            continue
        d = sub(xbar, x)
        ineqs = [((dot(a, d),), b - dot(a, xbar)) for a, b in P.ineqs]
        ineqs.append(((ONE,), ONE))
        eqs = [((dot(cc, d),), dd - dot(cc, xbar)) for cc, dd in P.eqs]
        res = _solve((ONE,), ineqs, eqs, True)
        if not (res.status == OPTIMAL and res.value > 0):
            return False
    return True
