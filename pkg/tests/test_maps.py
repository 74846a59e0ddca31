"""Set-valued maps: graph views, constructions, coderivatives, optimal values."""
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycal import (HPoly, ImproperValue, MaxAffineFn, NotInGraph, SVMap, argmin_set, coderiv_chain,
                     coderiv_union_over, coderivative, compose, decomposition_set, dom, epigraphical, gem,
                     intermediate_set, inverse, map_sum, nc_oracle, optimal_value, preimage, ri_member,
                     rge, scaled_subdiff, set_equal, value)
from polycal.polyhedra import sample_points

from conftest import R, abs_fn, box, halves, inside, interval, maxaffine, polytopes, small

UP = HPoly(1, (((-1,), 0),))          # [0, inf)
DOWN = HPoly(1, (((1,), 0),))         # (-inf, 0]


def shifted_up():
    """F(x) = [x, inf)."""
    return SVMap(1, 1, HPoly(2, (((1, -1), 0),)))


def shifted_down():
    """F(x) = [-x, inf)."""
    return SVMap(1, 1, HPoly(2, (((-1, -1), 0),)))


def ray(lo):
    return HPoly(1, (((-1,), -Q(lo)),))


# -- graph views --------------------------------------------------------------

def test_views_examples():
    F = shifted_up()
    assert dom(F).is_empty() is False and set_equal(dom(F), HPoly.universe(1))
    assert set_equal(rge(F), HPoly.universe(1))
    assert set_equal(value(F, R(2)), ray(2))
    inv = inverse(SVMap.linear([[2]]))
    assert set_equal(inv(R(3)), HPoly.point(R(Q(3, 2))))
    G = SVMap(1, 1, HPoly(2, (((1, 0), 1), ((-1, 0), 0)), (((0, 1), 0),)))
    assert set_equal(dom(G), interval(0, 1)) and value(G, R(2)).is_empty()


@given(polytopes(dim=2))
def test_dom_of_inverse_is_range(pa):
    P, _ = pa
    F = SVMap(1, 1, P)
    assert set_equal(dom(inverse(F)), rge(F))


# -- constructions ------------------------------------------------------------

def test_map_sum_examples():
    S = map_sum(shifted_up(), shifted_down())
    for x in (R(-2), R(0), R(3)):
        assert set_equal(S(x), UP)
    F = shifted_up()
    Z = SVMap.linear([[0]])
    assert set_equal(map_sum(F, Z).graph, F.graph)
    A, B = SVMap.linear([[1, 2]]), SVMap.linear([[3, -1]])
    assert set_equal(map_sum(A, B).graph, SVMap.linear([[4, 1]]).graph)


def test_compose_examples():
    A, B = SVMap.linear([[1, 2], [0, 1]]), SVMap.linear([[3, -1]])
    assert set_equal(compose(B, A).graph, SVMap.linear([[3, 5]]).graph)
    F = shifted_up()
    assert set_equal(compose(SVMap.linear([[1]]), F).graph, F.graph)
    assert set_equal(compose(shifted_up(), shifted_up()).graph, F.graph)


def test_preimage_examples():
    E = epigraphical(abs_fn())
    assert set_equal(preimage(E, HPoly(1, (((1,), 1),))), interval(-1, 1))
    F = SVMap(1, 1, HPoly(2, (((1, 0), 1), ((-1, 0), 0), ((0, 1), 1))))
    assert set_equal(preimage(F, HPoly.universe(1)), dom(F))
    assert preimage(F, ray(5)).is_empty()


def test_gem_examples():
    assert set_equal(gem(abs_fn()).graph, abs_fn().epigraph)
    G = gem(abs_fn(), abs_fn())
    want = HPoly(3, (((1, -1, 0), 0), ((-1, -1, 0), 0), ((1, 0, -1), 0), ((-1, 0, -1), 0)))
    assert set_equal(G.graph, want)
    assert ri_member(G.graph, R(0, 1, 1)) and not ri_member(G.graph, R(0, 0, 1))


@given(st.lists(maxaffine(dim=1), min_size=1, max_size=3), st.integers(0, 30),
       st.sampled_from([Q(0), Q(1, 2), Q(1)]))
def test_gem_ri_membership(fas, seed, dl):
    fs = [f for f, _ in fas]
    G = gem(*fs)
    from polycal import intersect
    D = intersect(*(f.dom for f in fs))
    if D.is_empty():
        return
    for x in sample_points(D, 3, seed=seed):
        lams = tuple(f(x) + (dl if i % 2 == 0 else Q(1)) for i, f in enumerate(fs))
        expected = ri_member(D, x) and all(f(x) < l for f, l in zip(fs, lams))
        assert ri_member(G.graph, x + lams) == expected


# -- coderivatives ------------------------------------------------------------

def test_coderivative_of_abs_epigraph():
    E = epigraphical(abs_fn())
    assert set_equal(coderivative(E, R(0), R(0), R(1)).uset, interval(-1, 1))
    assert coderivative(E, R(0), R(0), R(-1)).uset.is_empty()


def test_coderivative_off_graph_raises():
    with pytest.raises(NotInGraph):
        coderivative(epigraphical(abs_fn()), R(0), R(-1), R(1))


def test_union_over_examples():
    E = epigraphical(abs_fn())
    assert set_equal(coderiv_union_over(E, R(0), R(0), HPoly.point(R(1))),
                     coderivative(E, R(0), R(0), R(1)).uset)
    assert coderiv_union_over(E, R(0), R(0), HPoly(1, (((1,), 0), ((-1,), -1)))).is_empty()
    assert set_equal(coderiv_union_over(E, R(0), R(0), interval(0, 1)), interval(-1, 1))


def test_chain_of_linear_maps_is_adjoint():
    A, B = SVMap.linear([[1, 2], [0, 1]]), SVMap.linear([[3, -1]])
    x = R(1, 1)
    y = (R(3, 1))
    z = R(8)
    C = coderiv_chain(A, B, x, y, z, R(2))
    # A^T B^T w = A^T (6, -2) = (6, 10)
    assert set_equal(C, HPoly.point(R(6, 10)))


@given(polytopes(dim=3), st.integers(1, 2), st.lists(halves, min_size=3, max_size=3), st.integers(0, 40))
def test_coderivative_membership_matches_oracle(pa, n, w, seed):
    P, _ = pa
    F = SVMap(n, 3 - n, P)
    for g in sample_points(P, 3, seed=seed):
        x, y = g[:n], g[n:]
        u, v = tuple(w[:n]), tuple(w[n:])
        res = coderivative(F, x, y, v)
        assert inside(res.uset, u) == nc_oracle(P, g, u + tuple(-t for t in v))


@given(maxaffine(), st.sampled_from([Q(0), Q(1, 2), Q(1), Q(3)]))
def test_epigraphical_coderivative(fa, alpha):
    f, x = fa
    E = epigraphical(f)
    got = coderivative(E, x, (f(x),), (alpha,)).uset
    assert set_equal(got, scaled_subdiff(alpha, f, x))
    assert coderivative(E, x, (f(x),), (-alpha - 1,)).uset.is_empty()


# -- decompositions and intermediate points -------------------------------------

def test_decomposition_examples():
    E = epigraphical(abs_fn())
    assert set_equal(decomposition_set(E, E, R(0), R(0)), HPoly.point(R(0, 0)))
    F = shifted_up()
    S = decomposition_set(F, F, R(0), R(2))
    assert set_equal(S, HPoly(2, (((-1, 0), 0), ((1, 0), 2)), (((1, 1), 2),)))
    with pytest.raises(NotInGraph):
        decomposition_set(E, E, R(0), R(-1))


def test_intermediate_examples():
    A, B = SVMap.linear([[2]]), SVMap.linear([[3]])
    assert set_equal(intermediate_set(A, B, R(1), R(6)), HPoly.point(R(2)))
    with pytest.raises(NotInGraph):
        intermediate_set(A, B, R(1), R(5))


# -- optimal value functions ----------------------------------------------------

def test_optimal_value_examples():
    F = shifted_up()
    phi = MaxAffineFn(1, (((1,), 0), ((0,), 0)))
    mu = optimal_value(F, phi)
    for x in (R(-2), R(0), R(Q(3, 2))):
        assert mu(x) == max(x[0], 0)
    G = SVMap(1, 1, HPoly(2, (((1, 0), 1), ((-1, 0), 0))))
    mu0 = optimal_value(G, MaxAffineFn.constant(1, 0))
    assert mu0(R(Q(1, 2))) == 0 and mu0(R(2)) == float("inf")
    with pytest.raises(ImproperValue):
        optimal_value(SVMap(1, 1, HPoly(2)), MaxAffineFn(1, (((1,), 0),)))


def test_argmin_examples():
    F = shifted_up()
    phi = MaxAffineFn(1, (((1,), 0), ((0,), 0)))
    assert set_equal(argmin_set(F, phi, R(-1)), interval(-1, 0))
    assert set_equal(argmin_set(F, phi, R(1)), HPoly.point(R(1)))
    G = SVMap(1, 1, HPoly(2, (((0, 1), 3), ((0, -1), 0))))
    c = MaxAffineFn.constant(1, 7, interval(1, 5))
    assert set_equal(argmin_set(G, c, R(0)), interval(1, 3))


def test_optimal_value_subdiff():
    F = shifted_up()
    mu = optimal_value(F, MaxAffineFn(1, (((1,), 0), ((0,), 0))))
    assert set_equal(mu.subdiff(R(0)), interval(0, 1))
    assert set_equal(mu.subdiff(R(-1)), HPoly.point(R(0)))


@given(polytopes(dim=2), maxaffine(dim=1, bounded_dom=True), st.integers(0, 20))
def test_optimal_value_by_brute_force(pa, fa, seed):
    P, _ = pa
    phi, _ = fa
    F = SVMap(1, 1, P)
    try:
        mu = optimal_value(F, phi)
    except ImproperValue:
        return
    from conftest import vertices
    for x in sample_points(dom(F), 3, seed=seed):
        S = value(F, x)
        from polycal import intersect
        feas = intersect(S, phi.dom)
        if feas.is_empty():
            assert mu(x) == float("inf")
            continue
        # phi restricted to a bounded interval: min over the breakpoints and ends
        cands = [v[0] for v in vertices(feas)]
        for (a1, b1) in phi.pieces:
            for (a2, b2) in phi.pieces:
                if a1[0] != a2[0]:
                    t = (b2 - b1) / (a1[0] - a2[0])
                    if inside(feas, (t,)):
                        cands.append(t)
        assert mu(x) == min(phi((t,)) for t in cands)
