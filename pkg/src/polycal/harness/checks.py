"""One check procedure per theorem: test the qualification, build both sides
exactly, compare, and report a falsifier when they differ.

Set identities are compared with LP containment in both directions; cone
identities additionally by mutual generator membership.  Relative-interior
statements are compared pointwise as membership biconditionals.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..cones import (ConeGen, cone_difference_witness, cone_hrep, cone_member, cone_sum,
                     normal_cone, proper_separation, verify_separation)
from ..errors import MalformedInstance, NotInDomain
from ..functions import INF, MaxAffineFn, fn_sum, scaled_subdiff, subdiff, sublevel_set
from ..maps import (OptimalValueFn, SVMap, argmin_set, coderiv_chain, coderiv_union_over,
                    coderivative, compose, decomposition_set, epigraphical, gem, intermediate_set,
                    map_sum, preimage, value)
from ..polyhedra import (HPoly, difference_witness, disjunctive_hull, eliminate, embed_at, intersect,
                         minkowski_sum, point_outside, product, ri_intersect_witness, ri_member,
                         ri_point, sample_points)
from ..rational import ONE, ZERO, as_rat, dot, unit, zeros
from .verdict import (EQUAL, MISMATCH, NOT_SATISFIED, SATISFIED, SKIPPED, Outcome, Qualification,
                      TheoremId, Verdict, instance_digest)


class _Mismatch(Exception):
    def __init__(self, outcome: Outcome):
        self.outcome = outcome


@dataclass
class Ctx:
    """Per-check bookkeeping.  ``corrupt`` swaps every right-hand side for a
    wrong one; it exists only to exercise the Mismatch path."""

    params: dict
    corrupt: bool = False
    checks: int = 0
    notes: list = field(default_factory=list)
    qual: "Qualification | None" = None

    def qualify(self, *sets):
        self.qual = qualify(*sets)
        return self.qual

    def param(self, key, default):
        return self.params.get(key, default)

    def rng(self):
        return random.Random(int(self.params.get("seed", 0)))

    # -- comparisons --------------------------------------------------------

    def sets(self, lhs: HPoly, rhs: HPoly, lhs_desc: str, rhs_desc: str):
        if self.corrupt:
            rhs = HPoly.universe(lhs.dim) if lhs.is_empty() else HPoly.empty(lhs.dim)
        self.checks += 1
        w = point_outside(rhs, lhs)
        side = "lhs"
        if w is None:
            w = point_outside(lhs, rhs)
            side = "rhs"
        if w is None:
            return
        if lhs.contains_point(w) == rhs.contains_point(w):  # pragma: no cover - LP bug guard
            raise AssertionError("falsifier failed re-verification")
        raise _Mismatch(Outcome(MISMATCH, lhs_desc, rhs_desc, w, side))

    def cones(self, lhs: ConeGen, rhs: ConeGen, lhs_desc: str, rhs_desc: str):
        if self.corrupt:
            full = ConeGen(lhs.dim, (), tuple(unit(lhs.dim, i) for i in range(lhs.dim)))
            rhs = full if lhs.is_trivial() else ConeGen(lhs.dim)
        self.checks += 1
        w = cone_difference_witness(lhs, rhs)
        if w is not None:
            side = "lhs" if cone_member(lhs, w) else "rhs"
            if cone_member(lhs, w) == cone_member(rhs, w):  # pragma: no cover
                raise AssertionError("falsifier failed re-verification")
            raise _Mismatch(Outcome(MISMATCH, lhs_desc, rhs_desc, w, side))
        self.sets(cone_hrep(lhs), cone_hrep(rhs), lhs_desc + " (H-rep)", rhs_desc + " (H-rep)")

    def member(self, point, lhs: bool, rhs: bool, lhs_desc: str, rhs_desc: str):
        if self.corrupt:
            rhs = not rhs
        self.checks += 1
        if lhs != rhs:
            raise _Mismatch(Outcome(MISMATCH, lhs_desc, rhs_desc, tuple(point),
                                    "lhs" if lhs else "rhs"))

    def implies(self, point, premise: bool, conclusion: bool, lhs_desc: str, rhs_desc: str):
        if premise:
            self.member(point, True, conclusion, lhs_desc, rhs_desc)


# -- qualification ----------------------------------------------------------

def qualify(*sets: HPoly) -> Qualification:
    """Nonempty common relative interior, with a witness either way."""
    w = ri_intersect_witness(*sets)
    if w is not None:
        return Qualification(SATISFIED, w)
    if any(P.is_empty() for P in sets):
        return Qualification(NOT_SATISFIED, None, "a set is empty")
    if len(sets) == 2:
        cert = proper_separation(sets[0], sets[1])
    else:
        # ri(P1) meets ... ri(Pk) iff ri(P1 x ... x Pk) meets the diagonal
        n, k = sets[0].dim, len(sets)
        eqs = []
        for j in range(1, k):
            for i in range(n):
                row = [ZERO] * (n * k)
                row[i] = ONE
                row[j * n + i] = -ONE
                eqs.append((tuple(row), ZERO))
        cert = proper_separation(product(*sets), HPoly(n * k, (), tuple(eqs)))
    if cert is None:  # pragma: no cover - would contradict the separation theorem
        return Qualification(NOT_SATISFIED, None, "no separator found")
    return Qualification(NOT_SATISFIED, cert.v)


_ALWAYS = Qualification(SATISFIED)


# -- helpers ----------------------------------------------------------------

def _need(instances, *types):
    if len(instances) != len(types) or not all(isinstance(i, t) for i, t in zip(instances, types)):
        want = ", ".join(t.__name__ for t in types)
        got = ", ".join(type(i).__name__ for i in instances)
        raise MalformedInstance(f"expected instances ({want}), got ({got})")


def _need_many(instances, typ, lo, hi=None):
    if len(instances) < lo or (hi is not None and len(instances) > hi) \
            or not all(isinstance(i, typ) for i in instances):
        raise MalformedInstance(f"expected {lo}{'' if hi == lo else '+'} {typ.__name__} instances")


def _dim(points, d, what="point"):
    for p in points:
        if len(p) != d:
            raise MalformedInstance(f"{what} {list(map(str, p))} should have length {d}")


def _samples(P: HPoly, ctx: Ctx, key="samples", default=3):
    count = int(ctx.param(key, default))
    pts = sample_points(P, count, seed=int(ctx.param("seed", 0)))
    distinct = list(dict.fromkeys(pts))
    return distinct


def _vectors(ctx: Ctx, key, dim):
    vs = ctx.param(key, None)
    if vs is None:
        raise MalformedInstance(f"params.{key} is required")
    out = []
    for v in vs:
        v = tuple(as_rat(t) for t in v)
        if len(v) != dim:
            raise MalformedInstance(f"params.{key} vectors should have length {dim}")
        out.append(v)
    return out


def _upper_halfline_lift(n, level):
    """``R^n x (-inf, level]``."""
    return HPoly(n + 1, ((zeros(n) + (ONE,), as_rat(level)),))


def _fmt(v):
    return "(" + ",".join(str(x) for x in v) + ")"


# -- the checks -------------------------------------------------------------

def check_ri_props(instances, points, ctx: Ctx):
    _need(instances, HPoly, HPoly)
    P, Q = instances
    if P.dim != Q.dim:
        raise MalformedInstance("both sets must live in the same space")
    n = P.dim
    rng = ctx.rng()
    xs = [tuple(p) for p in points] or sample_points(P, 6, seed=rng.randrange(2 ** 31))
    _dim(xs, n)
    for x in xs:
        if not P.contains_point(x):
            raise MalformedInstance(f"point {_fmt(x)} is not in the first set")
    # (a) nonempty ri, witnessed
    for S in (P, Q):
        p0 = ri_point(S)
        ctx.member(p0, S.contains_point(p0) and ri_member(S, p0), True, "ri witness in ri", "true")
    p0, q0 = ri_point(P), ri_point(Q)
    ri_p = [p0] + [tuple((a + b) / 2 for a, b in zip(p0, x)) for x in xs[:3]]
    # (b) segments from an ri point stay in ri
    for a in ri_p:
        for x in xs:
            for t in (ONE, Fraction(1, 2), Fraction(1, 3)):
                z = tuple(t * u + (1 - t) * w for u, w in zip(a, x))
                ctx.member(z, ri_member(P, z), True, "t a + (1-t) x in ri P", "a in ri P, x in P")
    # (e) ri of a Minkowski sum, both directions
    S = minkowski_sum(P, Q)
    ri_q = [q0] + [tuple((a + b) / 2 for a, b in zip(q0, y))
                   for y in sample_points(Q, 3, seed=rng.randrange(2 ** 31))]
    for p in ri_p[:3]:
        for q in ri_q[:3]:
            z = tuple(a + b for a, b in zip(p, q))
            ctx.member(z, ri_member(S, z), True, "p + q in ri(P + Q)", "p in ri P, q in ri Q")
    s0 = ri_point(S)
    for z in [s0] + [tuple((a + b) / 2 for a, b in zip(s0, y)) for y in sample_points(S, 3, seed=rng.randrange(2 ** 31))]:
        split = HPoly(2 * n, (), tuple((unit(n, i) + unit(n, i), z[i]) for i in range(n)))
        ctx.member(z, True, ri_intersect_witness(product(P, Q), split) is not None,
                   "z in ri(P + Q)", "z = p + q with p in ri P, q in ri Q")
    # (f) ri of a projection, both directions
    keep = sorted(rng.sample(range(n), rng.randint(1, n)))
    A = eliminate(P, keep)
    for x in ri_p:
        y = tuple(x[k] for k in keep)
        ctx.member(x, True, ri_member(A, y), "x in ri P", "projected x in ri of the projection")
    a0 = ri_point(A)
    for y in [a0] + [tuple((u + w) / 2 for u, w in zip(a0, b)) for b in sample_points(A, 3, seed=rng.randrange(2 ** 31))]:
        fibre = HPoly(n, (), tuple((unit(n, k), y[i]) for i, k in enumerate(keep)))
        ctx.member(y, True, ri_intersect_witness(P, fibre) is not None,
                   "y in ri of the projection", "y is the projection of some x in ri P")
    # (g) ri of an intersection under overlapping relative interiors
    if ri_intersect_witness(P, Q) is not None:
        I = intersect(P, Q)
        i0 = ri_point(I)
        for z in [i0] + sample_points(I, 6, seed=rng.randrange(2 ** 31)):
            ctx.member(z, ri_member(I, z), ri_member(P, z) and ri_member(Q, z),
                       "z in ri(P meet Q)", "z in ri P and ri Q")
    else:
        ctx.notes.append("intersection property not exercised: relative interiors are disjoint")
    return _ALWAYS


def check_separation(instances, points, ctx: Ctx):
    _need(instances, HPoly, HPoly)
    P, Q = instances
    cert = proper_separation(P, Q)
    separated = cert is not None and verify_separation(P, Q, cert)
    if cert is not None:
        ctx.checks += 1
    w = ri_intersect_witness(P, Q)
    point = w if w is not None else ri_point(P)
    ctx.member(point, separated, w is None, "properly separable", "relative interiors disjoint")
    if cert is not None:
        ctx.notes.append("separator " + _fmt(cert.v))
    return _ALWAYS


def check_nc_intersection(instances, points, ctx: Ctx):
    _need_many(instances, HPoly, 2)
    n = instances[0].dim
    if any(P.dim != n for P in instances):
        raise MalformedInstance("all sets must live in the same space")
    q = ctx.qualify(*instances)
    if not q.satisfied:
        return q
    I = intersect(*instances)
    _dim(points, n)
    for x in points:
        if not I.contains_point(x):
            raise MalformedInstance(f"point {_fmt(x)} is not in the intersection")
        ctx.cones(normal_cone(I, x), cone_sum(*(normal_cone(P, x) for P in instances)),
                  f"N({_fmt(x)}; intersection)", "sum of N(x; set_i)")
    return q


def check_rockafellar(instances, points, ctx: Ctx):
    _need(instances, SVMap)
    (F,) = instances
    n = F.n
    _dim(points, F.n + F.m)
    D = F.dom
    for p in points:
        x, y = p[:n], p[n:]
        rhs = ri_member(D, x)
        if rhs:
            Fx = value(F, x)
            rhs = not Fx.is_empty() and ri_member(Fx, y)
        ctx.member(p, ri_member(F.graph, p), rhs, "(x,y) in ri gph F", "x in ri dom F, y in ri F(x)")
    return _ALWAYS


def check_ri_range(instances, points, ctx: Ctx):
    _need(instances, SVMap)
    (F,) = instances
    _dim(points, F.n + F.m)
    R = F.rge
    hits = 0
    for p in points:
        premise = ri_member(F.graph, p)
        hits += premise
        ctx.implies(p, premise, ri_member(R, p[F.n:]), "(x,y) in ri gph F", "y in ri rge F")
    if not hits:
        ctx.notes.append("no sampled point in ri gph F; implication vacuous")
    return _ALWAYS


def _fns(instances, lo=1, hi=None):
    _need_many(instances, MaxAffineFn, lo, hi)
    n = instances[0].n
    if any(f.n != n for f in instances):
        raise MalformedInstance("all functions must share the input dimension")
    return n


def check_gem_ri(instances, points, ctx: Ctx):
    n = _fns(instances)
    m = len(instances)
    q = ctx.qualify(*(f.dom for f in instances))
    if not q.satisfied:
        return q
    H = gem(*instances).graph
    _dim(points, n + m)
    for p in points:
        x, lam = p[:n], p[n:]
        rhs = all(ri_member(f.dom, x) for f in instances) and \
            all(f(x) < l for f, l in zip(instances, lam))
        ctx.member(p, ri_member(H, p), rhs, "(x,lambda) in ri gph GEM",
                   "x in every ri dom f_i, f_i(x) < lambda_i")
    return q


def check_epi_ri(instances, points, ctx: Ctx):
    n = _fns(instances, 1, 1)
    (f,) = instances
    _dim(points, n + 1)
    for p in points:
        x, lam = p[:n], p[n]
        rhs = ri_member(f.dom, x) and f(x) < lam
        ctx.member(p, ri_member(f.epigraph, p), rhs, "(x,lambda) in ri epi f",
                   "x in ri dom f, f(x) < lambda")
    return _ALWAYS


def _dom_points(f_or_fs, points):
    fs = f_or_fs if isinstance(f_or_fs, (list, tuple)) else [f_or_fs]
    for x in points:
        for f in fs:
            if f(x) == INF:
                raise NotInDomain(f"point {_fmt(x)} is outside a function domain")


def check_epi_coderiv(instances, points, ctx: Ctx):
    n = _fns(instances, 1, 1)
    (f,) = instances
    _dim(points, n)
    _dom_points(f, points)
    alphas = [as_rat(a) for a in ctx.param("alphas", ["0", "1/2", "1", "3", "-1", "-1/3"])]
    E = epigraphical(f)
    for x in points:
        val = f(x)
        for a in alphas:
            lhs = coderivative(E, x, (val,), (a,)).uset
            rhs = scaled_subdiff(a, f, x) if a >= 0 else HPoly.empty(n)
            ctx.sets(lhs, rhs, f"D*E_f({_fmt(x)})({a})",
                     f"{a} (.) subdiff f({_fmt(x)})" if a >= 0 else "empty set")
    return _ALWAYS


def check_gem_coderiv(instances, points, ctx: Ctx):
    n = _fns(instances)
    m = len(instances)
    q = ctx.qualify(*(f.dom for f in instances))
    if not q.satisfied:
        return q
    _dim(points, n)
    _dom_points(instances, points)
    alphas = _vectors(ctx, "alphas", m)
    F = gem(*instances)
    for x in points:
        ybar = tuple(f(x) for f in instances)
        for a in alphas:
            lhs = coderivative(F, x, ybar, a).uset
            if any(t < 0 for t in a):
                rhs = HPoly.empty(n)
            else:
                rhs = minkowski_sum(*(scaled_subdiff(t, f, x) for t, f in zip(a, instances)))
            ctx.sets(lhs, rhs, f"D*GEM({_fmt(x)})({_fmt(a)})", "sum of alpha_i (.) subdiff f_i")
    return q


def check_ovf_subdiff(instances, points, ctx: Ctx):
    _need(instances, SVMap, MaxAffineFn)
    F, phi = instances
    if phi.n != F.m:
        raise MalformedInstance("phi must be defined on the output space of F")
    mu = OptimalValueFn(F, phi)
    q = ctx.qualify(F.graph, product(HPoly.universe(F.n), phi.dom))
    if not q.satisfied:
        return q
    _dim(points, F.n)
    for x in points:
        if mu(x) == INF:
            raise NotInDomain(f"point {_fmt(x)} is outside dom mu")
        lhs = mu.subdiff(x)
        for ybar in _samples(argmin_set(F, phi, x), ctx, default=2):
            rhs = coderiv_union_over(F, x, ybar, subdiff(phi, ybar))
            ctx.sets(lhs, rhs, f"subdiff mu({_fmt(x)})",
                     f"union of D*F({_fmt(x)},{_fmt(ybar)})(v) over v in subdiff phi")
    return q


def _gamma_hull_lift(gamma: HPoly, parts):
    """``{sum_i g_i C_i | g in gamma}`` for polytopes ``C_i`` and ``gamma`` in
    the nonnegative orthant, through the homogenisation of each ``C_i``."""
    n = parts[0].dim
    m = len(parts)
    # variables: u (n), g (m), then per i: u_i (n)
    width = n + m + m * n
    ineqs, eqs = [], []
    for a, b in gamma.ineqs:
        ineqs.append((zeros(n) + a + zeros(m * n), b))
    for c, d in gamma.eqs:
        eqs.append((zeros(n) + c + zeros(m * n), d))
    for i, C in enumerate(parts):
        o = n + m + i * n
        for a, b in C.ineqs:  # a.u_i <= g_i b
            row = [ZERO] * width
            row[o:o + n] = a
            row[n + i] = -b
            ineqs.append((tuple(row), ZERO))
        for c, d in C.eqs:
            row = [ZERO] * width
            row[o:o + n] = c
            row[n + i] = -d
            eqs.append((tuple(row), ZERO))
        row = [ZERO] * width
        row[n + i] = -ONE
        ineqs.append((tuple(row), ZERO))
    for k in range(n):
        row = [ZERO] * width
        row[k] = ONE
        for i in range(m):
            row[n + m + i * n + k] = -ONE
        eqs.append((tuple(row), ZERO))
    return eliminate(HPoly(width, tuple(ineqs), tuple(eqs)), range(n))


def composite_rhs(fs, phi: MaxAffineFn, x):
    """``{sum_i g_i subdiff f_i(x) | g in subdiff phi(ybar)}`` with ``ybar = f(x)``.

    When the subdifferential of phi is the hull of its active gradients the
    set is the convex hull of finitely many Minkowski sums (Balas lift);
    otherwise (``ybar`` on the boundary of dom phi) the homogenised lift is used.
    """
    ybar = tuple(f(x) for f in fs)
    parts = [subdiff(f, x) for f in fs]
    N = normal_cone(phi.dom, ybar)
    if N.is_trivial():
        sums = []
        for k in phi.active_pieces(ybar):
            g = phi.pieces[k][0]
            sums.append(minkowski_sum(*(scaled_subdiff(t, f, x) for t, f in zip(g, fs))))
        return disjunctive_hull(*sums), "Balas hull"
    return _gamma_hull_lift(subdiff(phi, ybar), parts), "homogenised lift"


def check_composite_subdiff(instances, points, ctx: Ctx):
    if len(instances) < 2:
        raise MalformedInstance("expected f_1, ..., f_m followed by phi")
    fs, phi = list(instances[:-1]), instances[-1]
    n = _fns(fs)
    if not isinstance(phi, MaxAffineFn) or phi.n != len(fs):
        raise MalformedInstance("phi must be a max-affine function on R^m, m = number of f_i")
    for f in fs:
        if f.dom.ineqs or f.dom.eqs:
            if point_outside(f.dom, HPoly.universe(n)) is not None:
                raise MalformedInstance("every f_i must be real-valued (dom f_i = R^n)")
    if any(t < 0 for a, _ in phi.pieces for t in a) or phi.dom.eqs \
            or any(t < 0 for a, _ in phi.dom.ineqs for t in a):
        raise MalformedInstance("phi must be nondecreasing componentwise "
                                "(nonnegative gradients, domain closed downward)")
    F = gem(*fs)
    q = ctx.qualify(F.graph, product(HPoly.universe(n), phi.dom))
    if not q.satisfied:
        return q
    g = OptimalValueFn(F, phi)
    _dim(points, n)
    for x in points:
        ybar = tuple(f(x) for f in fs)
        if phi(ybar) == INF:
            raise NotInDomain(f"point {_fmt(x)} is outside dom g")
        ctx.member(x, g(x) == phi(ybar), True, "mu(x) = phi(f(x))", "true")
        rhs, how = composite_rhs(fs, phi, x)
        ctx.sets(g.subdiff(x), rhs, f"subdiff g({_fmt(x)})", f"gamma-weighted subgradient sums ({how})")
    return q


def check_sum_rule(instances, points, ctx: Ctx):
    _need(instances, SVMap, SVMap)
    F1, F2 = instances
    if (F1.n, F1.m) != (F2.n, F2.m):
        raise MalformedInstance("summands must share (n, m)")
    q = ctx.qualify(F1.dom, F2.dom)
    if not q.satisfied:
        return q
    n, m = F1.n, F1.m
    _dim(points, n + m)
    vs = _vectors(ctx, "vs", m)
    S = map_sum(F1, F2)
    for p in points:
        x, y = p[:n], p[n:]
        decs = _samples(decomposition_set(F1, F2, x, y), ctx)
        for v in vs:
            lhs = coderivative(S, x, y, v).uset
            for d in decs:
                y1, y2 = d[:m], d[m:]
                rhs = minkowski_sum(coderivative(F1, x, y1, v).uset, coderivative(F2, x, y2, v).uset)
                ctx.sets(lhs, rhs, f"D*(F1+F2)({_fmt(p)})({_fmt(v)})",
                         f"D*F1(x,{_fmt(y1)})(v) + D*F2(x,{_fmt(y2)})(v)")
    ctx.notes.append("equality checked per decomposition, which implies the intersection form")
    return q


def check_subdiff_sum(instances, points, ctx: Ctx):
    n = _fns(instances, 2, 2)
    f1, f2 = instances
    q = ctx.qualify(f1.dom, f2.dom)
    if not q.satisfied:
        return q
    _dim(points, n)
    _dom_points(instances, points)
    h = fn_sum(f1, f2)
    for x in points:
        ctx.sets(subdiff(h, x), minkowski_sum(subdiff(f1, x), subdiff(f2, x)),
                 f"subdiff (f1+f2)({_fmt(x)})", "subdiff f1 + subdiff f2")
    return q


def check_chain_rule(instances, points, ctx: Ctx):
    _need(instances, SVMap, SVMap)
    F, G = instances
    if F.m != G.n:
        raise MalformedInstance("F output dimension must equal G input dimension")
    q = ctx.qualify(F.rge, G.dom)
    if not q.satisfied:
        return q
    n = F.n
    _dim(points, n + G.m)
    ws = _vectors(ctx, "ws", G.m)
    GF = compose(G, F)
    for p in points:
        x, z = p[:n], p[n:]
        ybars = _samples(intermediate_set(F, G, x, z), ctx)
        for w in ws:
            lhs = coderivative(GF, x, z, w).uset
            for ybar in ybars:
                ctx.sets(lhs, coderiv_chain(F, G, x, ybar, z, w),
                         f"D*(G o F)({_fmt(p)})({_fmt(w)})",
                         f"D*F(x,{_fmt(ybar)}) o D*G({_fmt(ybar)},z)(w)")
    return q


def check_preimage_nc(instances, points, ctx: Ctx):
    _need(instances, SVMap, HPoly)
    F, theta = instances
    if theta.dim != F.m:
        raise MalformedInstance("Theta must live in the output space of F")
    q = ctx.qualify(F.rge, theta)
    if not q.satisfied:
        return q
    _dim(points, F.n)
    P = preimage(F, theta)
    for x in points:
        if not P.contains_point(x):
            raise MalformedInstance(f"point {_fmt(x)} is not in the preimage")
        lhs = cone_hrep(normal_cone(P, x))
        for ybar in _samples(intersect(value(F, x), theta), ctx, default=2):
            rhs = coderiv_union_over(F, x, ybar, cone_hrep(normal_cone(theta, ybar)))
            ctx.sets(lhs, rhs, f"N({_fmt(x)}; preimage)", f"D*F(x,{_fmt(ybar)})(N(y; Theta))")
    return q


def check_sublevel_nc(instances, points, ctx: Ctx):
    n = _fns(instances, 1, 1)
    (f,) = instances
    if "level" not in ctx.params:
        raise MalformedInstance("params.level is required")
    level = as_rat(ctx.params["level"])
    _dim(points, n)
    for x in points:
        if f(x) != level:
            raise MalformedInstance(f"f({_fmt(x)}) = {f(x)} differs from the level {level}")
    q = ctx.qualify(f.epigraph, _upper_halfline_lift(n, level))
    if not q.satisfied:
        return q
    L = sublevel_set(f, level)
    E = epigraphical(f)
    halfline = HPoly(1, (((-ONE,), ZERO),))
    for x in points:
        ctx.sets(cone_hrep(normal_cone(L, x)), coderiv_union_over(E, x, (level,), halfline),
                 f"N({_fmt(x)}; sublevel set)", "union over alpha >= 0 of alpha (.) subdiff f(x)")
    return q


CHECKS: dict[TheoremId, Callable] = {
    TheoremId.RI_PROPS: check_ri_props,
    TheoremId.SEPARATION: check_separation,
    TheoremId.NC_INTERSECTION: check_nc_intersection,
    TheoremId.ROCKAFELLAR: check_rockafellar,
    TheoremId.RI_RANGE: check_ri_range,
    TheoremId.GEM_RI: check_gem_ri,
    TheoremId.EPI_RI: check_epi_ri,
    TheoremId.EPI_CODERIV: check_epi_coderiv,
    TheoremId.GEM_CODERIV: check_gem_coderiv,
    TheoremId.OVF_SUBDIFF: check_ovf_subdiff,
    TheoremId.COMPOSITE_SUBDIFF: check_composite_subdiff,
    TheoremId.SUM_RULE: check_sum_rule,
    TheoremId.SUBDIFF_SUM: check_subdiff_sum,
    TheoremId.CHAIN_RULE: check_chain_rule,
    TheoremId.PREIMAGE_NC: check_preimage_nc,
    TheoremId.SUBLEVEL_NC: check_sublevel_nc,
}


def check_theorem(theorem, instances, points=(), params=None, *, corrupt=False,
                  seed=None, trial=None, procedure=None) -> Verdict:
    """Run the check for ``theorem`` on explicit data and return a Verdict.

    ``NotInGraph``/``NotInDomain`` and ``MalformedInstance`` propagate as
    exceptions; they describe bad input, not a failed identity.
    """
    tid = theorem if isinstance(theorem, TheoremId) else TheoremId.parse(theorem)
    params = dict(params or {})
    points = [tuple(as_rat(t) for t in p) for p in points]
    digest = instance_digest(tid, instances, points, params)
    ctx = Ctx(params, corrupt=corrupt)
    proc = procedure or CHECKS[tid]
    try:
        qual = proc(list(instances), points, ctx)
        outcome = Outcome(EQUAL) if qual.satisfied else Outcome(SKIPPED)
    except _Mismatch as m:
        qual = ctx.qual or _ALWAYS
        outcome = m.outcome
    return Verdict(tid, qual, outcome, digest, seed, trial, ctx.checks, tuple(ctx.notes))
