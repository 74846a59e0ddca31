"""Proper polyhedral convex functions ``f(x) = max_k <a_k,x> + b_k`` on a
polyhedral domain (``+inf`` outside), with epigraphs and subdifferentials."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .cones import ConeGen, cone_hrep, normal_cone
from .errors import DimensionMismatch, EmptySet, NegativeScalar, NotInDomain
from .lp import OPTIMAL
from .polyhedra import HPoly, scale_set, slice_
from .rational import ONE, ZERO, as_rat, dot, neg

INF = math.inf


@dataclass(frozen=True)
class MaxAffineFn:
    """``f(x) = max_k (<a_k, x> + b_k)`` for ``x`` in ``dom``, ``+inf`` elsewhere."""

    n: int
    pieces: tuple
    dom: HPoly | None = None

    def __post_init__(self):
        pieces = tuple((tuple(as_rat(x) for x in a), as_rat(b)) for a, b in self.pieces)
        if not pieces:
            raise ValueError("a max-affine function needs at least one piece")
        if any(len(a) != self.n for a, _ in pieces):
            raise DimensionMismatch("piece gradient of wrong length")
        object.__setattr__(self, "pieces", pieces)
        dom = self.dom if self.dom is not None else HPoly.universe(self.n)
        if dom.dim != self.n:
            raise DimensionMismatch("domain dimension differs from n")
        if dom.is_empty():
            raise EmptySet("proper functions need a nonempty domain")
        object.__setattr__(self, "dom", dom)

    @classmethod
    def constant(cls, n: int, value=0, dom: HPoly | None = None) -> "MaxAffineFn":
        return cls(n, (((ZERO,) * n, value),), dom)

    def __call__(self, x):
        return eval_fn(self, x)

    @cached_property
    def epigraph(self) -> HPoly:
        n = self.n
        ineqs = [(a + (ZERO,), b) for a, b in self.dom.ineqs]
        ineqs += [(a + (-ONE,), -b) for a, b in self.pieces]
        eqs = [(c + (ZERO,), d) for c, d in self.dom.eqs]
        return HPoly(n + 1, tuple(ineqs), tuple(eqs))

    def active_pieces(self, x) -> list[int]:
        vals = [dot(a, x) + b for a, b in self.pieces]
        top = max(vals)
        return [k for k, v in enumerate(vals) if v == top]

    def to_json(self) -> dict:
        from .formats import maxaffine_doc
        return maxaffine_doc(self)


def eval_fn(f: MaxAffineFn, x: Sequence):
    """``f(x)`` as a Fraction, or ``math.inf`` outside the domain."""
    x = tuple(as_rat(t) for t in x)
    if len(x) != f.n:
        raise DimensionMismatch("point dimension")
    if not f.dom.contains_point(x):
        return INF
    return max(dot(a, x) + b for a, b in f.pieces)


def epigraph(f: MaxAffineFn) -> HPoly:
    return f.epigraph


def _value_at(f: MaxAffineFn, xbar) -> tuple:
    xbar = tuple(as_rat(t) for t in xbar)
    val = eval_fn(f, xbar)
    if val == INF:
        raise NotInDomain("point outside dom f")
    return xbar, val


def epi_subdiff(epi: HPoly, xbar: Sequence, value) -> HPoly:
    """``{v | (v, -1) in N((xbar, value); epi)}`` for any epigraph polyhedron."""
    point = tuple(xbar) + (as_rat(value),)
    N = normal_cone(epi, point)
    return slice_(cone_hrep(N), [epi.dim - 1], [-ONE])


def subdiff(f: MaxAffineFn, xbar: Sequence) -> HPoly:
    xbar, val = _value_at(f, xbar)
    return epi_subdiff(f.epigraph, xbar, val)


def singular_subdiff(f: MaxAffineFn, xbar: Sequence) -> ConeGen:
    """``{v | (v, 0) in N((xbar, f(xbar)); epi f)}``.

    Every generator of that normal cone has last coordinate 0 or negative
    (epigraph rows never carry a positive ``lambda`` coefficient), so the
    horizontal slice is generated by the horizontal generators.
    """
    xbar, val = _value_at(f, xbar)
    N = normal_cone(f.epigraph, xbar + (val,))
    assert all(g[-1] <= 0 for g in N.generators) and all(h[-1] == 0 for h in N.lineality)
    gens = tuple(g[:-1] for g in N.generators if g[-1] == 0)
    lin = tuple(h[:-1] for h in N.lineality)
    return ConeGen(f.n, gens, lin)


def singular_subdiff_hrep(f: MaxAffineFn, xbar: Sequence) -> HPoly:
    """Same set as :func:`singular_subdiff`, sliced from the cone H-rep."""
    xbar, val = _value_at(f, xbar)
    N = normal_cone(f.epigraph, xbar + (val,))
    return slice_(cone_hrep(N), [f.n], [ZERO])


def scaled_subdiff(alpha, f: MaxAffineFn, xbar: Sequence) -> HPoly:
    """``alpha * subdiff`` for ``alpha > 0``; the singular subdifferential for 0."""
    alpha = as_rat(alpha)
    if alpha < 0:
        raise NegativeScalar("alpha must be nonnegative")
    if alpha == 0:
        return cone_hrep(singular_subdiff(f, xbar))
    return scale_set(alpha, subdiff(f, xbar))


def sd_oracle(f: MaxAffineFn, xbar: Sequence, v: Sequence) -> bool:
    """Definition-level subgradient test: ``min (lambda - <v,x>)`` over epi f
    is attained and equals ``f(xbar) - <v,xbar>``."""
    xbar, val = _value_at(f, xbar)
    v = tuple(as_rat(t) for t in v)
    res = f.epigraph.minimize(neg(v) + (ONE,))
    return res.status == OPTIMAL and res.value == val - dot(v, xbar)


def sublevel_set(f: MaxAffineFn, level) -> HPoly:
    level = as_rat(level)
    rows = f.dom.ineqs + tuple((a, level - b) for a, b in f.pieces)
    return HPoly(f.n, rows, f.dom.eqs)


def fn_sum(f: MaxAffineFn, g: MaxAffineFn) -> MaxAffineFn:
    """``f + g``: pairwise piece sums on the intersected domain."""
    if f.n != g.n:
        raise DimensionMismatch("sum of functions on different spaces")
    pieces = tuple((tuple(x + y for x, y in zip(a1, a2)), b1 + b2)
                   for a1, b1 in f.pieces for a2, b2 in g.pieces)
    dom = HPoly(f.n, f.dom.ineqs + g.dom.ineqs, f.dom.eqs + g.dom.eqs)
    return MaxAffineFn(f.n, pieces, dom)
