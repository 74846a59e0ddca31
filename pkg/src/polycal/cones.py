"""Finitely generated cones, normal cones of polyhedra, and proper separation."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DimensionMismatch, EmptySet, PointNotInSet
from .lp import OPTIMAL, _solve
from .polyhedra import HPoly, _analysis, eliminate, ri_intersect_witness
from .rational import ONE, ZERO, as_rat, dot, neg, primitive, rref, scale, unit, zeros


@dataclass(frozen=True)
class ConeGen:
    """``cone(generators) + span(lineality)`` in ``R^dim``."""

    dim: int
    generators: tuple = ()
    lineality: tuple = ()

    def __post_init__(self):
        for name in ("generators", "lineality"):
            vs = tuple(tuple(as_rat(x) for x in v) for v in getattr(self, name))
            if any(len(v) != self.dim for v in vs):
                raise DimensionMismatch(f"{name} vector of wrong length")
            object.__setattr__(self, name, vs)

    @cached_property
    def hrep(self) -> HPoly:
        return _cone_hrep(self)

    def is_trivial(self) -> bool:
        return not any(any(g) for g in self.generators + self.lineality)


def normal_cone(P: HPoly, xbar: Sequence) -> ConeGen:
    """``N(xbar; P)``: active non-implicit row normals plus the span of the
    equality normals.  Raises :class:`PointNotInSet` when ``xbar`` is not in P."""
    xbar = tuple(as_rat(t) for t in xbar)
    if len(xbar) != P.dim:
        raise DimensionMismatch("point dimension")
    if not P.contains_point(xbar):
        raise PointNotInSet("normal cone requested at a point outside the set")
    an = _analysis(P)
    gens, seen = [], set()
    for a, b in an.strict:
        if dot(a, xbar) == b:
            g, _ = primitive(a)
            if g not in seen:
                seen.add(g)
                gens.append(g)
    lin = ()
    if an.eqs:
        lin, _, _, _ = rref([c for c, _ in an.eqs], ncols=P.dim)
    return ConeGen(P.dim, tuple(gens), tuple(lin))


def cone_member(C: ConeGen, v: Sequence) -> bool:
    """LP feasibility of ``v = sum l_i g_i + sum m_j h_j`` with ``l >= 0``."""
    v = tuple(as_rat(t) for t in v)
    if len(v) != C.dim:
        raise DimensionMismatch("vector dimension")
    if not any(v):
        return True
    k, l = len(C.generators), len(C.lineality)
    if k + l == 0:
        return False
    cols = C.generators + C.lineality
    eqs = [(tuple(col[i] for col in cols), v[i]) for i in range(C.dim)]
    ineqs = [(scale(-1, unit(k + l, i)), ZERO) for i in range(k)]
    return _solve(zeros(k + l), ineqs, eqs, True).status == OPTIMAL


def nc_oracle(P: HPoly, xbar: Sequence, v: Sequence) -> bool:
    """Definition-level normal cone test: ``max <v,x>`` over ``P`` is attained
    and equals ``<v,xbar>``."""
    xbar = tuple(as_rat(t) for t in xbar)
    if not P.contains_point(xbar):
        raise PointNotInSet("xbar is not in P")
    v = tuple(as_rat(t) for t in v)
    res = P.maximize(v)
    return res.status == OPTIMAL and res.value == dot(v, xbar)


def _cone_hrep(C: ConeGen) -> HPoly:
    n, k, l = C.dim, len(C.generators), len(C.lineality)
    width = n + k + l
    eqs = []
    for i in range(n):
        row = [ZERO] * width
        row[i] = ONE
        for j, g in enumerate(C.generators):
            row[n + j] = -g[i]
        for j, h in enumerate(C.lineality):
            row[n + k + j] = -h[i]
        eqs.append((tuple(row), ZERO))
    ineqs = [(scale(-1, unit(width, n + j)), ZERO) for j in range(k)]
    return eliminate(HPoly(width, tuple(ineqs), tuple(eqs)), range(n))


def cone_hrep(C: ConeGen) -> HPoly:
    """H-representation of the cone, by eliminating the multipliers (cached)."""
    return C.hrep


def cone_sum(*cones: ConeGen) -> ConeGen:
    dim = cones[0].dim
    if any(C.dim != dim for C in cones):
        raise DimensionMismatch("cone sum across dimensions")
    return ConeGen(dim, sum((C.generators for C in cones), ()), sum((C.lineality for C in cones), ()))


def cone_is_subspace(C: ConeGen) -> bool:
    return all(cone_member(C, neg(g)) for g in C.generators)


def cone_contains(C: ConeGen, D: ConeGen) -> tuple | None:
    """None if ``D`` is a subset of ``C``; otherwise a generator of ``D`` outside ``C``."""
    for g in D.generators:
        if not cone_member(C, g):
            return g
    for h in D.lineality:
        if not cone_member(C, h):
            return h
        if not cone_member(C, neg(h)):
            return neg(h)
    return None


def cone_difference_witness(C: ConeGen, D: ConeGen) -> tuple | None:
    """A vector in exactly one of two cones, or None when they coincide."""
    w = cone_contains(C, D)
    if w is None:
        w = cone_contains(D, C)
    return w


def cones_equal(C: ConeGen, D: ConeGen) -> bool:
    return cone_difference_witness(C, D) is None


# -- proper separation ------------------------------------------------------

@dataclass(frozen=True)
class SeparationCertificate:
    """``<v,w1> <= <v,w2>`` for all ``w1`` in the first set and ``w2`` in the
    second, and ``<v,w1_hat> < <v,w2_hat>``.

    ``first`` names which input plays the first role (always ``"P"`` here:
    the vector is oriented so the first argument sits on the low side).
    """

    v: tuple
    sup_first: Fraction
    inf_second: Fraction
    witnesses: tuple
    first: str = "P"


def _dual_blocks(P: HPoly, sign, width, voff, yoff):
    """Rows expressing ``sign * v = A^T y + E^T z`` with fresh multiplier columns."""
    n = P.dim
    k, l = len(P.ineqs), len(P.eqs)
    eqs = []
    for i in range(n):
        row = [ZERO] * width
        row[voff + i] = Fraction(sign)
        for j, (a, _) in enumerate(P.ineqs):
            row[yoff + j] = -a[i]
        for j, (c, _) in enumerate(P.eqs):
            row[yoff + k + j] = -c[i]
        eqs.append((tuple(row), ZERO))
    nonneg = []
    for j in range(k):
        row = [ZERO] * width
        row[yoff + j] = -ONE
        nonneg.append((tuple(row), ZERO))
    rhs = [(yoff + j, b) for j, (_, b) in enumerate(P.ineqs)]
    rhs += [(yoff + k + j, d) for j, (_, d) in enumerate(P.eqs)]
    return eqs, nonneg, rhs


def proper_separation(P: HPoly, Q: HPoly) -> SeparationCertificate | None:
    """A verified proper-separation certificate for ``(P, Q)`` or None.

    The vector comes from one LP over ``v`` and dual multipliers certifying
    ``sup_P <v,.> + sup_Q <-v,.> <= 0``, minimising ``<v, p0 - q0>`` for
    relative-interior points ``p0``, ``q0`` under the box ``|v_i| <= 1``.
    Separation is proper exactly when that minimum is negative.
    """
    if P.dim != Q.dim:
        raise DimensionMismatch("separation across dimensions")
    if P.is_empty() or Q.is_empty():
        raise EmptySet("separation needs nonempty sets")
    n = P.dim
    p0, q0 = _analysis(P).ri_point, _analysis(Q).ri_point
    kp = len(P.ineqs) + len(P.eqs)
    kq = len(Q.ineqs) + len(Q.eqs)
    width = n + kp + kq
    e1, n1, r1 = _dual_blocks(P, 1, width, 0, n)
    e2, n2, r2 = _dual_blocks(Q, -1, width, 0, n + kp)
    row = [ZERO] * width
    for j, b in r1 + r2:
        row[j] = b
    ineqs = n1 + n2 + [(tuple(row), ZERO)]
    for i in range(n):
        ineqs.append((unit(width, i), ONE))
        ineqs.append((scale(-1, unit(width, i)), ONE))
    obj = tuple(p0[i] - q0[i] for i in range(n)) + zeros(kp + kq)
    res = _solve(obj, ineqs, e1 + e2, False)
    if res.status != OPTIMAL or res.value >= 0:
        return None
    v = res.point[:n]
    sup_p = P.maximize(v)
    inf_q = Q.minimize(v)
    cert = SeparationCertificate(v, sup_p.value, inf_q.value, (p0, q0))
    if not verify_separation(P, Q, cert):  # pragma: no cover - would be a solver bug
        raise AssertionError("separation certificate failed verification")
    return cert


def verify_separation(P: HPoly, Q: HPoly, cert: SeparationCertificate) -> bool:
    """Re-check both separation inequalities by LP."""
    v = cert.v
    A, B = (P, Q) if cert.first == "P" else (Q, P)
    sup_a = A.maximize(v)
    inf_b = B.minimize(v)
    if sup_a.status != OPTIMAL or inf_b.status != OPTIMAL:
        return False
    if sup_a.value > inf_b.value:
        return False
    w1, w2 = cert.witnesses
    return A.contains_point(w1) and B.contains_point(w2) and dot(v, w1) < dot(v, w2)


def properly_separable(P: HPoly, Q: HPoly) -> bool:
    return proper_separation(P, Q) is not None


def ri_disjoint(P: HPoly, Q: HPoly) -> bool:
    return ri_intersect_witness(P, Q) is None
