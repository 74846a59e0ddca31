"""Max-affine functions: evaluation, epigraphs and subdifferentials."""
import math
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycal import (EmptySet, HPoly, MaxAffineFn, NegativeScalar, NotInDomain, cone_hrep, cones_equal,
                     disjunctive_hull, epigraph, eval_fn, fn_sum, minkowski_sum, normal_cone,
                     ri_member, scaled_subdiff, sd_oracle, set_equal, singular_subdiff, subdiff,
                     sublevel_set)
from polycal.cones import ConeGen
from polycal.functions import singular_subdiff_hrep
from polycal.polyhedra import intersect, sample_points, scale_set

from conftest import R, abs_fn, box, halves, inside, interval, maxaffine, small, vertices

HALFLINE = HPoly(1, (((-1,), 0),))


def zero_on_halfline():
    return MaxAffineFn.constant(1, 0, HALFLINE)


def sd_vertex_oracle(f, x, v):
    """Subgradient inequality at every vertex of the epigraph cut to a box
    around (x, f(x)); convexity makes the local test global."""
    fx = f(x)
    lo = [t - 2 for t in x] + [fx - 100]
    hi = [t + 2 for t in x] + [fx + 100]
    cut = intersect(f.epigraph, box(lo, hi))
    base = fx - sum(a * b for a, b in zip(v, x))
    return all(w[-1] - sum(a * b for a, b in zip(v, w[:-1])) >= base for w in vertices(cut))


# -- examples -----------------------------------------------------------------

def test_eval_examples():
    assert abs_fn()(R(-2)) == 2
    assert eval_fn(MaxAffineFn.constant(1, 0, HALFLINE), R(-1)) == math.inf
    assert MaxAffineFn(2, (((1, 0), 0), ((0, 1), 0)))(R(1, 3)) == 3


def test_empty_domain_rejected():
    with pytest.raises(EmptySet):
        MaxAffineFn(1, (((1,), 0),), HPoly(1, (((1,), 0), ((-1,), -1))))


def test_epigraph_examples():
    assert set_equal(epigraph(abs_fn()), HPoly(2, (((1, -1), 0), ((-1, -1), 0))))
    assert set_equal(epigraph(MaxAffineFn.constant(1, 0)), HPoly(2, (((0, -1), 0),)))
    E = epigraph(abs_fn())
    assert ri_member(E, R(0, 1)) and not ri_member(E, R(0, 0))


def test_subdiff_examples():
    assert set_equal(subdiff(abs_fn(), R(0)), interval(-1, 1))
    assert set_equal(subdiff(abs_fn(), R(1)), HPoly.point(R(1)))
    assert set_equal(subdiff(zero_on_halfline(), R(0)), HPoly(1, (((1,), 0),)))


def test_subdiff_outside_domain_raises():
    with pytest.raises(NotInDomain):
        subdiff(zero_on_halfline(), R(-1))


def test_singular_subdiff_examples():
    assert singular_subdiff(abs_fn(), R(0)).is_trivial()
    assert cones_equal(singular_subdiff(zero_on_halfline(), R(0)), ConeGen(1, (R(-1),)))
    f = MaxAffineFn(2, (((1, 0), 0), ((0, 1), 0)))
    assert singular_subdiff(f, R(0, 0)).is_trivial()


def test_scaled_subdiff_examples():
    assert set_equal(scaled_subdiff(2, abs_fn(), R(0)), interval(-2, 2))
    assert set_equal(scaled_subdiff(0, abs_fn(), R(0)), HPoly.point(R(0)))
    assert set_equal(scaled_subdiff(0, zero_on_halfline(), R(0)), HPoly(1, (((1,), 0),)))
    with pytest.raises(NegativeScalar):
        scaled_subdiff(-1, abs_fn(), R(0))


def test_sd_oracle_examples():
    assert sd_oracle(abs_fn(), R(0), R(Q(1, 2)))
    assert not sd_oracle(abs_fn(), R(0), R(2))
    assert sd_oracle(abs_fn(), R(3), R(1))


def test_sublevel_examples():
    assert set_equal(sublevel_set(abs_fn(), 1), interval(-1, 1))
    assert sublevel_set(abs_fn(), -1).is_empty()
    assert set_equal(sublevel_set(zero_on_halfline(), 5), HALFLINE)


def test_fn_sum_pointwise():
    f, g = abs_fn(), MaxAffineFn(1, (((2,), -1),), HALFLINE)
    h = fn_sum(f, g)
    for x in (R(-1), R(0), R(Q(1, 2)), R(3)):
        assert h(x) == (f(x) + g(x) if g(x) != math.inf else math.inf)


# -- properties ---------------------------------------------------------------

@given(maxaffine(), st.lists(halves, min_size=2, max_size=2))
def test_subdiff_matches_oracles(fa, v):
    f, x = fa
    v = tuple(v[:f.n])
    S = subdiff(f, x)
    got = inside(S, v)
    assert got == sd_oracle(f, x, v) == sd_vertex_oracle(f, x, v)


@given(maxaffine(), st.integers(0, 20))
def test_subdiff_direct_formula(fa, seed):
    f, x0 = fa
    for x in sample_points(f.dom, 2, seed=seed) + [x0]:
        grads = [HPoly.point(f.pieces[k][0]) for k in f.active_pieces(x)]
        rhs = minkowski_sum(disjunctive_hull(*grads), cone_hrep(normal_cone(f.dom, x)))
        assert set_equal(subdiff(f, x), rhs)


@given(maxaffine(), st.integers(0, 20))
def test_singular_subdiff_is_domain_normal_cone(fa, seed):
    f, x0 = fa
    for x in sample_points(f.dom, 2, seed=seed) + [x0]:
        H = cone_hrep(singular_subdiff(f, x))
        assert set_equal(H, cone_hrep(normal_cone(f.dom, x)))
        assert set_equal(H, singular_subdiff_hrep(f, x))


@given(maxaffine(), st.sampled_from([Q(1, 2), Q(2), Q(3)]), st.sampled_from([Q(1, 3), Q(1), Q(5, 2)]))
def test_scaled_subdiff_composes(fa, a, b):
    f, x = fa
    assert set_equal(scaled_subdiff(a * b, f, x), scale_set(a, scaled_subdiff(b, f, x)))


@given(maxaffine(), st.integers(0, 30), st.sampled_from([Q(0), Q(1, 2), Q(1), Q(-1, 2)]))
def test_epigraph_ri_membership(fa, seed, dl):
    f, _ = fa
    for x in sample_points(f.dom, 3, seed=seed):
        lam = f(x) + dl
        expected = ri_member(f.dom, x) and f(x) < lam
        assert ri_member(f.epigraph, x + (lam,)) == expected
