"""Per-theorem trial builders: random instance plus the points and
parameters the matching check expects.  ``qualified=False`` asks for an
instance whose qualification condition fails (validated before returning)."""
from __future__ import annotations

from fractions import Fraction

from ..errors import ImproperValue
from ..functions import MaxAffineFn, fn_sum
from ..maps import OptimalValueFn, SVMap, decomposition_set, gem, intermediate_set, preimage, value
from ..polyhedra import HPoly, embed_at, intersect, product, ri_intersect_witness, ri_point, sample_points
from ..rational import ONE, ZERO, add, zeros
from .generators import _ATTEMPTS, Gen, GenerationFailed, _dedup_points, mid, set_family, touching_rows
from .verdict import TheoremId

ALPHAS = ["0", "1/2", "1", "3", "-1", "-1/3"]


def _retry(build):
    for _ in range(_ATTEMPTS):
        out = build()
        if out is not None:
            return out
    raise GenerationFailed("trial builder exhausted its attempts")


def _qual(*sets):
    return ri_intersect_witness(*sets) is not None


def _rich(sets, count, seed):
    """Does some set yield ``count`` distinct sampled points?"""
    return any(len(set(sample_points(S, count, seed=seed))) >= count for S in sets)


def _graph_points(gen: Gen, F: SVMap):
    """Points in and around gph F: samples, ri mixtures, perturbations and
    (ri dom point, boundary or ri value) pairs.  At least 20 points."""
    n = F.n
    G = F.graph
    base = gen.sample(G, 10)
    g0 = ri_point(G)
    pts = list(base)
    pts += [mid(g0, p) for p in base[1:5]]
    pts += [gen.perturb(p) for p in base[:4]]
    D = F.dom
    xs = [ri_point(D)] + gen.boundary_points(D, 2)
    for x in xs:
        Fx = value(F, x)
        pts.append(x + ri_point(Fx))
        pts += [x + y for y in gen.boundary_points(Fx, 1)]
    return pts


def rockafellar(gen: Gen, n, m, qualified=True):
    F = gen.svmap(n, m)
    return [F], _graph_points(gen, F), {}


def separation(gen: Gen, n, m, qualified=True):
    P, Q = set_family(gen, n, 2, overlap=qualified)
    return [P, Q], [], {}


def nc_intersection(gen: Gen, n, m, qualified=True):
    k = gen.rng.choice((2, 3))
    polys = set_family(gen, n, k, overlap=qualified, apart=False)
    I = intersect(*polys)
    pts = [ri_point(I)] + gen.boundary_points(I, 3)
    return polys, _dedup_points(pts), {}


def _fn_points(gen: Gen, f: MaxAffineFn, count=3):
    pts = gen.kink_points(f.epigraph, f.n, count) + [ri_point(f.dom)] + gen.boundary_points(f.dom, 1)
    return _dedup_points(pts)


def epi_coderiv(gen: Gen, n, m, qualified=True):
    f = gen.fn(n)
    return [f], _fn_points(gen, f, 2), {"alphas": ALPHAS}


def epi_ri(gen: Gen, n, m, qualified=True):
    f = gen.fn(n)
    E = f.epigraph
    e0 = ri_point(E)
    pts = gen.sample(E, 8) + [mid(e0, p) for p in gen.sample(E, 4)[1:]]
    for x in [ri_point(f.dom)] + gen.boundary_points(f.dom, 2):
        v = f(x)
        pts += [x + (v,), x + (v + 1,), x + (v - Fraction(1, 2),)]
    pts += [gen.perturb(p) for p in pts[:4]]
    return [f], pts, {}


def _gem_fns(gen: Gen, n, m, qualified):
    if not qualified:
        m = max(m, 2)

    def build():
        z0 = gen.anchor(n)
        if qualified:
            fs = [gen.fn(n, z0) for _ in range(m)]
        else:
            up, down = touching_rows(gen, n, z0)
            fs = [gen.fn(n, z0, dom=True, extra=(up,)), gen.fn(n, z0, dom=True, extra=(down,))]
            fs += [gen.fn(n, z0) for _ in range(m - 2)]
        if _qual(*(f.dom for f in fs)) != qualified:
            return None
        return fs
    return _retry(build)


def gem_ri(gen: Gen, n, m, qualified=True):
    fs = _gem_fns(gen, n, m, qualified)
    H = gem(*fs).graph
    h0 = ri_point(H)
    pts = gen.sample(H, 8) + [mid(h0, p) for p in gen.sample(H, 4)[1:]]
    doms = intersect(*(f.dom for f in fs))
    xs = [ri_point(doms)] + gen.boundary_points(doms, 2)
    for x in xs:
        vals = tuple(f(x) for f in fs)
        pts += [x + vals, x + tuple(v + 1 for v in vals)]
        pts.append(x + tuple(v + (1 if i else 0) for i, v in enumerate(vals)))
    pts += [gen.perturb(p) for p in pts[:4]]
    return fs, pts, {}


def gem_coderiv(gen: Gen, n, m, qualified=True):
    fs = _gem_fns(gen, n, m, qualified)
    m = len(fs)
    H = gem(*fs).graph
    doms = intersect(*(f.dom for f in fs))
    pts = _dedup_points(gen.kink_points(H, n, 2) + [ri_point(doms)])
    choices = [ZERO, Fraction(1, 2), ONE, Fraction(2)]
    alphas = [tuple(gen.rng.choice(choices) for _ in range(m)) for _ in range(3)]
    alphas.append(tuple(-ONE if i == 0 else gen.rng.choice(choices) for i in range(m)))
    alphas.append((ZERO,) * m)
    return fs, pts, {"alphas": [[str(a) for a in v] for v in alphas]}


def ovf_subdiff(gen: Gen, n, m, qualified=True):
    def build():
        anchor = gen.anchor(n + m)
        y0 = anchor[n:]
        if qualified:
            F = gen.svmap(n, m, anchor)
            phi = gen.fn(m, y0)
        else:
            up, down = touching_rows(gen, m, y0, offset=n, width=n + m)
            F = gen.svmap(n, m, anchor, extra=(up,))
            phi = gen.fn(m, y0, dom=True, extra=((down[0][n:], down[1]),))
        try:
            mu = OptimalValueFn(F, phi)
        except ImproperValue:
            return None
        if _qual(F.graph, product(HPoly.universe(n), phi.dom)) != qualified:
            return None
        D = mu.dom
        xs = [ri_point(D)] + gen.boundary_points(D, 2) + [anchor[:n]]
        return [F, phi], _dedup_points(xs), {"samples": 2, "seed": gen.seed()}
    return _retry(build)


def composite_subdiff(gen: Gen, n, m, qualified=True):
    def build():
        if qualified:
            fs = [gen.fn(n, dom=False) for _ in range(m)]
            phi = gen.fn(m, dom=False, nonneg=True)
            xs = None
        else:
            fs = [gen.coercive_fn(n)] + [gen.fn(n, dom=False) for _ in range(m - 1)]
            res = fs[0].epigraph.minimize(zeros(n) + (ONE,))
            c = res.value
            row = ((ONE,) + zeros(m - 1), c)
            phi = gen.fn(m, dom=HPoly(m, (row,)), nonneg=True)
            xs = [res.point[:n]]
        F = gem(*fs)
        if _qual(F.graph, product(HPoly.universe(n), phi.dom)) != qualified:
            return None
        if xs is None:
            xs = _dedup_points(gen.kink_points(F.graph, n, 3))
        return fs + [phi], xs, {}
    return _retry(build)


def sum_rule(gen: Gen, n, m, qualified=True):
    def build():
        x0 = gen.anchor(n)
        a1, a2 = x0 + gen.anchor(m), x0 + gen.anchor(m)
        if qualified:
            F1, F2 = gen.svmap(n, m, a1), gen.svmap(n, m, a2)
        else:
            up, down = touching_rows(gen, n, x0, 0, n + m)
            F1, F2 = gen.svmap(n, m, a1, extra=(up,)), gen.svmap(n, m, a2, extra=(down,))
        if _qual(F1.dom, F2.dom) != qualified:
            return None
        D = intersect(F1.dom, F2.dom)
        pts = []
        for i, x in enumerate([ri_point(D), x0] + gen.boundary_points(D, 1)):
            V1, V2 = value(F1, x), value(F2, x)
            if i % 2 == 0:
                y1, y2 = ri_point(V1), ri_point(V2)
            else:
                y1, y2 = gen.boundary_points(V1, 1)[0], gen.boundary_points(V2, 1)[0]
            pts.append(x + add(y1, y2))
        pts = _dedup_points(pts)
        params = {"vs": [[str(t) for t in v] for v in gen.vectors(3, m)], "samples": 3, "seed": gen.seed()}
        if qualified and not _rich([decomposition_set(F1, F2, p[:n], p[n:]) for p in pts], 3, params["seed"]):
            return None  # want three distinct decompositions at some point
        return [F1, F2], pts, params
    return _retry(build)


def subdiff_sum(gen: Gen, n, m, qualified=True):
    def build():
        x0 = gen.anchor(n)
        if qualified:
            f1, f2 = gen.fn(n, x0), gen.fn(n, x0)
        else:
            up, down = touching_rows(gen, n, x0)
            f1 = gen.fn(n, x0, dom=True, extra=(up,))
            f2 = gen.fn(n, x0, dom=True, extra=(down,))
        if _qual(f1.dom, f2.dom) != qualified:
            return None
        h = fn_sum(f1, f2)
        pts = _dedup_points(gen.kink_points(h.epigraph, n, 2) + [x0, ri_point(h.dom)])
        return [f1, f2], pts, {}
    return _retry(build)


def chain_rule(gen: Gen, n, m, qualified=True, q=None):
    q = q or gen.rng.randint(1, 2)

    def build():
        x0, y0, z0 = gen.anchor(n), gen.anchor(m), gen.anchor(q)
        if qualified:
            F, G = gen.svmap(n, m, x0 + y0), gen.svmap(m, q, y0 + z0)
        else:
            up, down = touching_rows(gen, m, y0, n, n + m)
            F = gen.svmap(n, m, x0 + y0, extra=(up,))
            G = gen.svmap(m, q, y0 + z0, extra=((down[0][n:] + zeros(q), down[1]),))
        if _qual(F.rge, G.dom) != qualified:
            return None
        width = n + m + q
        L = intersect(embed_at(F.graph, range(n + m), width), embed_at(G.graph, range(n, width), width))
        lifted = [ri_point(L), x0 + y0 + z0] + gen.boundary_points(L, 1)
        pts = [p[:n] + p[n + m:] for p in lifted]
        pts = _dedup_points(pts)
        params = {"ws": [[str(t) for t in v] for v in gen.vectors(3, q)], "samples": 3, "seed": gen.seed()}
        if qualified and not _rich([intermediate_set(F, G, p[:n], p[n:]) for p in pts], 3, params["seed"]):
            return None  # want three distinct intermediate points at some point
        return [F, G], pts, params
    return _retry(build)


def preimage_nc(gen: Gen, n, m, qualified=True):
    def build():
        x0, y0 = gen.anchor(n), gen.anchor(m)
        if qualified:
            F = gen.svmap(n, m, x0 + y0)
            theta = gen.poly(m, y0, rows=gen.rng.randint(1, 4), tight=0.4)
        else:
            up, down = touching_rows(gen, m, y0, n, n + m)
            F = gen.svmap(n, m, x0 + y0, extra=(up,))
            theta = gen.poly(m, y0, rows=gen.rng.randint(1, 4), extra=((down[0][n:], down[1]),))
        if _qual(F.rge, theta) != qualified:
            return None
        P = preimage(F, theta)
        pts = _dedup_points([x0, ri_point(P)] + gen.boundary_points(P, 2))
        return [F, theta], pts, {"samples": 2, "seed": gen.seed()}
    return _retry(build)


def sublevel_nc(gen: Gen, n, m, qualified=True):
    def build():
        if qualified:
            f = gen.fn(n)
            low = f(ri_point(f.dom))
            cands = gen.kink_points(f.epigraph, n, 3) + gen.boundary_points(f.dom, 2)
            cands = [x for x in cands if f(x) > low]
            if not cands:
                return None
            x = gen.rng.choice(cands)
        else:
            f = gen.coercive_fn(n)
            res = f.epigraph.minimize(zeros(n) + (ONE,))
            x = res.point[:n]
        level = f(x)
        if _qual(f.epigraph, HPoly(n + 1, ((zeros(n) + (ONE,), level),))) != qualified:
            return None
        return [f], [x], {"level": str(level)}
    return _retry(build)


def ri_props(gen: Gen, n, m, qualified=True):
    P, Q = set_family(gen, n, 2, overlap=True)
    return [P, Q], gen.sample(P, 5), {"seed": gen.seed()}


BUILDERS = {
    TheoremId.RI_PROPS: ri_props,
    TheoremId.SEPARATION: separation,
    TheoremId.NC_INTERSECTION: nc_intersection,
    TheoremId.ROCKAFELLAR: rockafellar,
    TheoremId.RI_RANGE: rockafellar,
    TheoremId.GEM_RI: gem_ri,
    TheoremId.EPI_RI: epi_ri,
    TheoremId.EPI_CODERIV: epi_coderiv,
    TheoremId.GEM_CODERIV: gem_coderiv,
    TheoremId.OVF_SUBDIFF: ovf_subdiff,
    TheoremId.COMPOSITE_SUBDIFF: composite_subdiff,
    TheoremId.SUM_RULE: sum_rule,
    TheoremId.SUBDIFF_SUM: subdiff_sum,
    TheoremId.CHAIN_RULE: chain_rule,
    TheoremId.PREIMAGE_NC: preimage_nc,
    TheoremId.SUBLEVEL_NC: sublevel_nc,
}
