"""Seeded random instances.

Every polyhedron is built around an anchor point that satisfies all of its
rows, so it is nonempty by construction.  Entries stay small: integer row
normals in ``[-2, 2]``, anchors in ``{-1, -1/2, 0, 1/2, 1}`` and right-hand
sides whose numerator and denominator are at most 8 in absolute value.
Violated-qualification instances are built from two sets that share the
anchor but sit on opposite sides of a hyperplane through it; each one is
re-validated with :func:`ri_intersect_witness` before it is returned.
"""
from __future__ import annotations

import random
from fractions import Fraction

from ..errors import CapsExceeded, ImproperValue
from ..functions import MaxAffineFn, fn_sum
from ..maps import OptimalValueFn, SVMap, gem, value
from ..polyhedra import HPoly, intersect, ri_intersect_witness, ri_point, sample_points
from ..rational import ONE, ZERO, add, dot, scale, unit, zeros

MAX_DIM = 3
MAX_ROWS = 8
MAX_ENTRY = 8
_ANCHOR_VALUES = (Fraction(-1), Fraction(-1, 2), ZERO, Fraction(1, 2), ONE)
_RHS = sorted({Fraction(p, q) for p in range(-MAX_ENTRY, MAX_ENTRY + 1) for q in range(1, MAX_ENTRY + 1)})
_ATTEMPTS = 200


class GenerationFailed(RuntimeError):
    """No valid instance within the attempt budget (should not happen at default caps)."""


def check_caps(dims, rows=None):
    for d in dims:
        if isinstance(d, bool) or not isinstance(d, int) or d < 1:
            raise CapsExceeded(f"dimensions must be positive integers, got {d!r}")
        if d > MAX_DIM:
            raise CapsExceeded(f"dimension {d} exceeds the cap of {MAX_DIM}")
    if rows is not None and not 1 <= rows <= MAX_ROWS:
        raise CapsExceeded(f"row count {rows} outside 1..{MAX_ROWS}")


class Gen:
    """Random building blocks drawn from one ``random.Random`` stream."""

    def __init__(self, rng: random.Random, density: float = 0.5):
        if not 0 < density <= 1:
            raise CapsExceeded("density must lie in (0, 1]")
        self.rng = rng
        self.max_rows = max(1, min(MAX_ROWS, round(density * MAX_ROWS)))

    # -- scalars and vectors ------------------------------------------------

    def seed(self) -> int:
        return self.rng.randrange(2 ** 31)

    def anchor(self, n):
        return tuple(self.rng.choice(_ANCHOR_VALUES) for _ in range(n))

    def normal(self, n, lo=-2, hi=2, nonneg=False):
        if nonneg:
            lo = 0
        while True:
            a = tuple(Fraction(self.rng.randint(lo, hi)) for _ in range(n))
            if any(a):
                return a

    def small(self, lo=-MAX_ENTRY, hi=MAX_ENTRY, dens=(1, 2, 4)):
        return Fraction(self.rng.randint(lo, hi), self.rng.choice(dens))

    def rhs_at_least(self, t, tight):
        """A capped rational ``b >= t``; exactly ``t`` when ``tight`` and representable."""
        if tight and t in _RHS_SET:
            return t
        cands = [b for b in _RHS if b > t and b <= t + 3]
        if not cands:
            return None
        return self.rng.choice(cands[: max(1, len(cands) // 3)] + cands[:2])

    def row(self, n, anchor, tight, nonneg=False):
        """A random row ``a.x <= b`` satisfied by ``anchor``."""
        for _ in range(_ATTEMPTS):
            a = self.normal(n, nonneg=nonneg)
            b = self.rhs_at_least(dot(a, anchor), tight)
            if b is not None:
                return a, b
        raise GenerationFailed("could not draw a capped row")

    def through(self, n, anchor):
        """A normal ``c`` whose hyperplane through ``anchor`` has a capped offset."""
        for _ in range(_ATTEMPTS):
            c = self.normal(n)
            if dot(c, anchor) in _RHS_SET:
                return c, dot(c, anchor)
        raise GenerationFailed("could not draw a capped hyperplane")

    def nrows(self, lo=1, hi=None):
        hi = self.max_rows if hi is None else min(hi, self.max_rows)
        return self.rng.randint(min(lo, hi), hi)

    # -- sets, functions, mappings -----------------------------------------

    def poly(self, n, anchor=None, rows=None, tight=0.3, eq=0.08, extra=()):
        anchor = self.anchor(n) if anchor is None else anchor
        rows = self.nrows(2) if rows is None else rows
        ineqs, eqs = [], []
        for _ in range(max(0, rows - len(extra))):
            if self.rng.random() < eq:
                c, d = self.through(n, anchor)
                eqs.append((c, d))
            else:
                ineqs.append(self.row(n, anchor, self.rng.random() < tight))
        ineqs.extend(extra)
        return HPoly(n, tuple(ineqs), tuple(eqs))

    def fn(self, n, anchor=None, dom=None, pieces=None, nonneg=False, extra=()):
        """Max-affine function; ``dom`` None means a coin flip between R^n
        and a random polyhedron around ``anchor``."""
        anchor = self.anchor(n) if anchor is None else anchor
        k = self.rng.randint(1, 3) if pieces is None else pieces
        ps = [(self.normal(n, -2, 2, nonneg=nonneg) if self.rng.random() < 0.85 or nonneg
               else zeros(n), self.small(dens=(1, 2))) for _ in range(k)]
        if dom is None:
            dom = self.rng.random() < 0.5
        if dom is True:
            D = self.poly(n, anchor, rows=self.rng.randint(1, 3), tight=0.4, extra=extra)
        elif dom is False:
            D = HPoly.universe(n) if not extra else HPoly(n, tuple(extra))
        else:
            D = dom
        return MaxAffineFn(n, tuple(ps), D)

    def coercive_fn(self, n):
        """A max-affine function on R^n whose minimum is attained."""
        ps = []
        for i in range(n):
            w = Fraction(self.rng.randint(1, 2))
            ps.append((scale(w, unit(n, i)), self.small(dens=(1, 2))))
            ps.append((scale(-w, unit(n, i)), self.small(dens=(1, 2))))
        for _ in range(self.rng.randint(0, 2)):
            ps.append((self.normal(n), self.small(dens=(1, 2))))
        return MaxAffineFn(n, tuple(ps))

    def svmap(self, n, m, anchor=None, extra=(), rows=None):
        anchor = self.anchor(n + m) if anchor is None else anchor
        rows = self.nrows(2) if rows is None else rows
        return SVMap(n, m, self.poly(n + m, anchor, rows=rows, extra=extra))

    # -- points -------------------------------------------------------------

    def sample(self, P, count):
        return sample_points(P, count, seed=self.seed())

    def perturb(self, p):
        steps = (Fraction(-1, 2), Fraction(-1, 4), ZERO, ZERO, Fraction(1, 4), Fraction(1, 2))
        return tuple(x + self.rng.choice(steps) for x in p)

    def vectors(self, k, dim, lo=-2, hi=2):
        return [tuple(self.small(lo, hi, dens=(1, 2)) for _ in range(dim)) for _ in range(k)]

    def boundary_points(self, P, count):
        """LP optima over ``P`` clipped to a box around its ri point."""
        c0 = ri_point(P)
        clip = intersect(P, HPoly.box([c - 4 for c in c0], [c + 4 for c in c0]))
        out = []
        for _ in range(count):
            c = tuple(Fraction(self.rng.randint(-3, 3)) for _ in range(P.dim))
            out.append(clip.maximize(c).point)
        return out

    def kink_points(self, epi, n, count):
        """Points ``x`` where several pieces tie: vertices of the epigraph
        (or of a GEM graph) under objectives pushing the values down."""
        m = epi.dim - n
        c0 = ri_point(epi)
        box = HPoly.box([c - 4 for c in c0[:n]] + [c - 64 for c in c0[n:]],
                        [c + 4 for c in c0[:n]] + [c + 64 for c in c0[n:]])
        clip = intersect(epi, box)
        out = []
        for _ in range(count):
            c = tuple(Fraction(self.rng.randint(-2, 2)) for _ in range(n)) + (-ONE,) * m
            out.append(clip.maximize(c).point[:n])
        return out


_RHS_SET = frozenset(_RHS)


def mid(p, q, t=Fraction(1, 2)):
    return tuple(t * a + (1 - t) * b for a, b in zip(p, q))


def _dedup_points(pts):
    seen, out = set(), []
    for p in pts:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


# -- touching constructions -------------------------------------------------

def touching_rows(gen: Gen, n, anchor, offset=0, width=None):
    """Rows ``c.x <= c.anchor`` and ``-c.x <= -c.anchor`` acting on the
    coordinates ``offset .. offset+n`` of ``R^width``."""
    width = n if width is None else width
    c, t = gen.through(n, anchor)
    full = [ZERO] * width
    full[offset:offset + n] = c
    full = tuple(full)
    return (full, t), (tuple(-x for x in full), -t)


def _validated(builder, want_witness):
    """Call ``builder`` until its last element (the qualification sets)
    has (want_witness=True) or lacks a common ri point."""
    for _ in range(_ATTEMPTS):
        out = builder()
        if out is None:
            continue
        *payload, sets = out
        has = ri_intersect_witness(*sets) is not None
        if has == want_witness:
            return payload
    raise GenerationFailed("no instance in the requested qualification regime")


# -- public generator -------------------------------------------------------

KINDS = ("polyhedron", "function", "svmap", "pair", "triple")


def gen_instance(kind: str, dims=(2,), density: float = 0.5, seed: int = 0, qualified: bool = True):
    """Deterministic random instance.

    * ``polyhedron``: HPoly in R^n, ``dims = (n,)``
    * ``function``: MaxAffineFn on R^n
    * ``svmap``: SVMap R^n => R^m, ``dims = (n, m)``
    * ``pair`` / ``triple``: tuple of HPolys in R^n whose relative interiors
      meet (``qualified=True``) or are disjoint (``qualified=False``)
    """
    dims = tuple(dims)
    check_caps(dims)
    gen = Gen(random.Random(seed), density)
    if kind == "polyhedron":
        return gen.poly(dims[0])
    if kind == "function":
        return gen.fn(dims[0])
    if kind == "svmap":
        if len(dims) < 2:
            raise CapsExceeded("svmap needs dims (n, m)")
        return gen.svmap(dims[0], dims[1])
    if kind in ("pair", "triple"):
        k = 2 if kind == "pair" else 3
        return tuple(set_family(gen, dims[0], k, qualified))
    raise ValueError(f"unknown instance kind {kind!r}; choose from {', '.join(KINDS)}")


def set_family(gen: Gen, n, k, overlap, apart=None):
    """``k`` polyhedra sharing an anchor; overlapping or with disjoint ri."""
    def build():
        z0 = gen.anchor(n)
        if overlap:
            polys = [gen.poly(n, z0, tight=0.25) for _ in range(k)]
            return polys, polys
        far = gen.rng.random() < 0.5 if apart is None else apart
        up, down = touching_rows(gen, n, z0)
        if far:
            # second set strictly beyond the hyperplane, around a shifted anchor
            c, t = up
            gap = t + Fraction(1, 2)
            if gap not in _RHS_SET:
                return None
            z1 = add(z0, c)
            first = gen.poly(n, z0, extra=(up,))
            second = gen.poly(n, z1, extra=((tuple(-x for x in c), -gap),))
        else:
            first = gen.poly(n, z0, extra=(up,))
            second = gen.poly(n, z0, extra=(down,))
        polys = [first, second] + [gen.poly(n, z0, tight=0.25) for _ in range(k - 2)]
        return polys, polys
    (polys,) = _validated(build, overlap)
    return polys
