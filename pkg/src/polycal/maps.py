"""Convex set-valued mappings stored as graph polyhedra, their coderivatives,
and the constructions built on them (sums, compositions, preimages,
generalized epigraphical mappings, optimal value functions)."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .cones import ConeGen, cone_hrep, normal_cone
from .errors import DimensionMismatch, ImproperValue, NotInDomain, NotInGraph
from .functions import INF, MaxAffineFn, epi_subdiff
from .lp import OPTIMAL, UNBOUNDED, _solve
from .polyhedra import (HPoly, eliminate, embed_at, intersect, permute, reflect, slice_)
from .rational import ONE, ZERO, as_rat, unit, zeros


@dataclass(frozen=True)
class SVMap:
    """``F: R^n => R^m`` with ``gph F`` a polyhedron in ``R^(n+m)``, x first."""

    n: int
    m: int
    graph: HPoly

    def __post_init__(self):
        if self.graph.dim != self.n + self.m:
            raise DimensionMismatch("graph dimension must be n + m")

    @classmethod
    def linear(cls, A: Sequence[Sequence]) -> "SVMap":
        """``F(x) = {A x}``."""
        A = [tuple(as_rat(v) for v in row) for row in A]
        m, n = len(A), len(A[0])
        eqs = tuple((tuple(-v for v in A[i]) + unit(m, i), ZERO) for i in range(m))
        return cls(n, m, HPoly(n + m, (), eqs))

    @cached_property
    def dom(self) -> HPoly:
        return eliminate(self.graph, range(self.n))

    @cached_property
    def rge(self) -> HPoly:
        return eliminate(self.graph, range(self.n, self.n + self.m))

    def __call__(self, x) -> HPoly:
        return value(self, x)

    def in_graph(self, x, y) -> bool:
        return self.graph.contains_point(tuple(x) + tuple(y))

    def to_json(self) -> dict:
        from .formats import svmap_doc
        return svmap_doc(self)


def dom(F: SVMap) -> HPoly:
    return F.dom


def rge(F: SVMap) -> HPoly:
    return F.rge


def value(F: SVMap, xbar: Sequence) -> HPoly:
    """``F(xbar)`` as a polyhedron in ``R^m`` (possibly empty)."""
    if len(xbar) != F.n:
        raise DimensionMismatch("point dimension")
    return slice_(F.graph, range(F.n), xbar)


def inverse(F: SVMap) -> SVMap:
    order = list(range(F.n, F.n + F.m)) + list(range(F.n))
    return SVMap(F.m, F.n, permute(F.graph, order))


@dataclass(frozen=True)
class CoderivResult:
    """``{u | (u, -v) in N((xbar, ybar); gph F)}`` together with that normal cone."""

    uset: HPoly
    cone: ConeGen


def _graph_cone(F: SVMap, xbar, ybar) -> ConeGen:
    xbar = tuple(as_rat(t) for t in xbar)
    ybar = tuple(as_rat(t) for t in ybar)
    if len(xbar) != F.n or len(ybar) != F.m:
        raise DimensionMismatch("point dimension")
    if not F.graph.contains_point(xbar + ybar):
        raise NotInGraph("(xbar, ybar) is not in gph F")
    return normal_cone(F.graph, xbar + ybar)


def coderivative(F: SVMap, xbar, ybar, v) -> CoderivResult:
    v = tuple(as_rat(t) for t in v)
    if len(v) != F.m:
        raise DimensionMismatch("v must live in R^m")
    C = _graph_cone(F, xbar, ybar)
    uset = slice_(cone_hrep(C), range(F.n, F.n + F.m), [-t for t in v])
    return CoderivResult(uset, C)


def coderiv_union_over(F: SVMap, xbar, ybar, vset: HPoly) -> HPoly:
    """``{u | exists v in vset: (u, -v) in N((xbar, ybar); gph F)}`` by one projection."""
    if vset.dim != F.m:
        raise DimensionMismatch("vset must live in R^m")
    C = _graph_cone(F, xbar, ybar)
    K = reflect(cone_hrep(C), range(F.n, F.n + F.m))  # now over (u, v)
    lifted = intersect(K, embed_at(vset, range(F.n, F.n + F.m), F.n + F.m))
    return eliminate(lifted, range(F.n))


def coderiv_chain(F: SVMap, G: SVMap, xbar, ybar, zbar, w) -> HPoly:
    """``{u | exists v: v in D*G(ybar,zbar)(w), u in D*F(xbar,ybar)(v)}``."""
    w = tuple(as_rat(t) for t in w)
    n, m, q = F.n, F.m, G.m
    KF = reflect(cone_hrep(_graph_cone(F, xbar, ybar)), range(n, n + m))     # (u, v)
    KG = cone_hrep(_graph_cone(G, ybar, zbar))                               # (v, -w)
    KGw = slice_(KG, range(m, m + q), [-t for t in w])                       # v
    lifted = intersect(KF, embed_at(KGw, range(n, n + m), n + m))
    return eliminate(lifted, range(n))


def map_sum(F1: SVMap, F2: SVMap) -> SVMap:
    """``(F1 + F2)(x) = F1(x) + F2(x)``."""
    if (F1.n, F1.m) != (F2.n, F2.m):
        raise DimensionMismatch("summands must share (n, m)")
    n, m = F1.n, F1.m
    width = n + 3 * m  # x, y, y1, y2
    xs = list(range(n))
    g1 = embed_at(F1.graph, xs + list(range(n + m, n + 2 * m)), width)
    g2 = embed_at(F2.graph, xs + list(range(n + 2 * m, n + 3 * m)), width)
    eqs = []
    for i in range(m):
        row = [ZERO] * width
        row[n + i] = ONE
        row[n + m + i] = -ONE
        row[n + 2 * m + i] = -ONE
        eqs.append((tuple(row), ZERO))
    lifted = intersect(g1, g2, HPoly(width, (), tuple(eqs)))
    return SVMap(n, m, eliminate(lifted, range(n + m)))


def compose(G: SVMap, F: SVMap) -> SVMap:
    """``(G o F)(x) = union of G(y) over y in F(x)``."""
    if F.m != G.n:
        raise DimensionMismatch("F output dimension must equal G input dimension")
    n, m, q = F.n, F.m, G.m
    width = n + m + q
    lifted = intersect(embed_at(F.graph, range(n + m), width),
                       embed_at(G.graph, range(n, n + m + q), width))
    keep = list(range(n)) + list(range(n + m, width))
    return SVMap(n, q, eliminate(lifted, keep))


def preimage(F: SVMap, theta: HPoly) -> HPoly:
    """``F^-1(theta) = {x | F(x) meets theta}``."""
    if theta.dim != F.m:
        raise DimensionMismatch("theta must live in R^m")
    lifted = intersect(F.graph, embed_at(theta, range(F.n, F.n + F.m), F.n + F.m))
    return eliminate(lifted, range(F.n))


def epigraphical(f: MaxAffineFn) -> SVMap:
    """``E_f(x) = [f(x), inf)``; its graph is epi f."""
    return SVMap(f.n, 1, f.epigraph)


def gem(*fs: MaxAffineFn) -> SVMap:
    """Generalized epigraphical mapping ``x => E_f1(x) x ... x E_fm(x)``."""
    if not fs:
        raise ValueError("need at least one function")
    n = fs[0].n
    if any(f.n != n for f in fs):
        raise DimensionMismatch("all functions must share the input dimension")
    m = len(fs)
    width = n + m
    ineqs, eqs = [], []
    for i, f in enumerate(fs):
        ineqs.extend((a + zeros(m), b) for a, b in f.dom.ineqs)
        eqs.extend((c + zeros(m), d) for c, d in f.dom.eqs)
        for a, b in f.pieces:
            lam = [ZERO] * m
            lam[i] = -ONE
            ineqs.append((a + tuple(lam), -b))
    return SVMap(n, m, HPoly(width, tuple(ineqs), tuple(eqs)))


# -- optimal value functions ------------------------------------------------

class OptimalValueFn:
    """``mu(x) = inf {phi(y) | y in F(x)}`` held through its epigraph.

    Construction rejects instances where ``mu`` would be ``-inf`` somewhere
    (or ``+inf`` everywhere) with :class:`ImproperValue`.
    """

    def __init__(self, F: SVMap, phi: MaxAffineFn):
        if phi.n != F.m:
            raise DimensionMismatch("phi must be defined on R^m")
        self.F = F
        self.phi = phi
        self.n = F.n
        n, m = F.n, F.m
        width = n + m + 1  # x, y, lambda
        ineqs = [(a + (ZERO,), b) for a, b in F.graph.ineqs]
        eqs = [(c + (ZERO,), d) for c, d in F.graph.eqs]
        ineqs += [(zeros(n) + a + (ZERO,), b) for a, b in phi.dom.ineqs]
        eqs += [(zeros(n) + c + (ZERO,), d) for c, d in phi.dom.eqs]
        ineqs += [(zeros(n) + a + (-ONE,), -b) for a, b in phi.pieces]
        self.lifted = HPoly(width, tuple(ineqs), tuple(eqs))
        if self.lifted.is_empty():
            raise ImproperValue("F(x) never meets dom phi: mu is +inf everywhere")
        if _decreasing_recession(F, phi):
            raise ImproperValue("mu takes the value -inf")

    @cached_property
    def epi(self) -> HPoly:
        return eliminate(self.lifted, list(range(self.n)) + [self.lifted.dim - 1])

    @cached_property
    def dom(self) -> HPoly:
        return eliminate(self.lifted, range(self.n))

    def __call__(self, x):
        x = tuple(as_rat(t) for t in x)
        if len(x) != self.n:
            raise DimensionMismatch("point dimension")
        S = slice_(self.lifted, range(self.n), x)
        res = S.minimize(zeros(S.dim - 1) + (ONE,))
        if res.status == OPTIMAL:
            return res.value
        assert res.status != UNBOUNDED
        return INF

    def subdiff(self, xbar) -> HPoly:
        val = self(xbar)
        if val == INF:
            raise NotInDomain("xbar is outside dom mu")
        return epi_subdiff(self.epi, tuple(as_rat(t) for t in xbar), val)


def _decreasing_recession(F: SVMap, phi: MaxAffineFn) -> bool:
    """Is there ``d`` with ``(0, d)`` recessive for gph F, ``d`` recessive for
    dom phi and every piece of phi strictly decreasing along ``d``?"""
    n, m = F.n, F.m
    ineqs = [(a[n:], ZERO) for a, _ in F.graph.ineqs]
    eqs = [(c[n:], ZERO) for c, _ in F.graph.eqs]
    ineqs += [(a, ZERO) for a, _ in phi.dom.ineqs]
    eqs += [(c, ZERO) for c, _ in phi.dom.eqs]
    ineqs += [(a, -ONE) for a, _ in phi.pieces]
    return _solve(zeros(m), ineqs, eqs, True).status == OPTIMAL


def optimal_value(F: SVMap, phi: MaxAffineFn) -> OptimalValueFn:
    return OptimalValueFn(F, phi)


def argmin_set(F: SVMap, phi: MaxAffineFn, xbar) -> HPoly:
    """``S(xbar) = {y in F(xbar) | phi(y) = mu(xbar)}``."""
    mu = OptimalValueFn(F, phi)
    val = mu(xbar)
    if val == INF:
        raise NotInDomain("xbar is outside dom mu")
    Fx = value(F, xbar)
    rows = Fx.ineqs + phi.dom.ineqs + tuple((a, val - b) for a, b in phi.pieces)
    return HPoly(F.m, rows, Fx.eqs + phi.dom.eqs)


def decomposition_set(F1: SVMap, F2: SVMap, xbar, ybar) -> HPoly:
    """``{(y1, y2) | y1 in F1(xbar), y2 in F2(xbar), y1 + y2 = ybar}``."""
    m = F1.m
    ybar = tuple(as_rat(t) for t in ybar)
    S = intersect(embed_at(value(F1, xbar), range(m), 2 * m),
                  embed_at(value(F2, xbar), range(m, 2 * m), 2 * m),
                  HPoly(2 * m, (), tuple((unit(m, i) + unit(m, i), ybar[i]) for i in range(m))))
    if S.is_empty():
        raise NotInGraph("(xbar, ybar) is not in gph(F1 + F2)")
    return S


def intermediate_set(F: SVMap, G: SVMap, xbar, zbar) -> HPoly:
    """``M(xbar, zbar) = F(xbar) meet G^-1(zbar)``."""
    M = intersect(value(F, xbar), value(inverse(G), zbar))
    if M.is_empty():
        raise NotInGraph("(xbar, zbar) is not in gph(G o F)")
    return M
