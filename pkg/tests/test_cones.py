"""Normal cones, cone algebra and proper separation."""
from fractions import Fraction as Q

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from polycal import (ConeGen, HPoly, PointNotInSet, cone_hrep, cone_member, cone_sum, cones_equal, nc_oracle,
                     normal_cone, proper_separation, ri_intersect_witness, ri_member, set_equal,
                     verify_separation)
from polycal.cones import cone_difference_witness, cone_is_subspace
from polycal.polyhedra import sample_points

from conftest import R, box, halves, inside, interval, polytopes, small, vertices


def nc_vertex_oracle(P, x, v):
    return all(sum(a * (w - t) for a, w, t in zip(v, vert, x)) <= 0 for vert in vertices(P))


# -- examples -----------------------------------------------------------------

def test_normal_cone_examples(unit_box):
    C = normal_cone(HPoly(2, (((1, 0), 0), ((0, 1), 0))), R(0, 0))
    assert cones_equal(C, ConeGen(2, (R(1, 0), R(0, 1))))
    assert normal_cone(unit_box, R(Q(1, 2), Q(1, 2))).is_trivial()
    assert cones_equal(normal_cone(unit_box, R(1, 1)), ConeGen(2, (R(1, 0), R(0, 1))))


def test_normal_cone_outside_raises(unit_box):
    with pytest.raises(PointNotInSet):
        normal_cone(unit_box, R(2, 2))


def test_cone_member_examples():
    C = ConeGen(2, (R(1, 0), R(0, 1)))
    assert cone_member(C, R(2, 3))
    assert not cone_member(C, R(-1, 0))
    assert cone_member(ConeGen(2), R(0, 0))


def test_nc_oracle_examples():
    assert nc_oracle(interval(0, 1), R(1), R(1))
    assert not nc_oracle(interval(0, 1), R(1), R(-1))
    assert nc_oracle(HPoly.universe(1), R(5), R(0))


def test_cone_hrep_examples():
    H = cone_hrep(ConeGen(2, (R(1, 0), R(0, 1))))
    assert set_equal(H, HPoly(2, (((-1, 0), 0), ((0, -1), 0))))
    assert set_equal(cone_hrep(ConeGen(2, (), (R(1, 0),))), HPoly(2, (), (((0, 1), 0),)))
    assert set_equal(cone_hrep(ConeGen(2)), HPoly.point(R(0, 0)))


def test_cone_sum_and_subspace_examples():
    S = cone_sum(ConeGen(2, (R(1, 0),)), ConeGen(2, (R(0, 1),)))
    assert cones_equal(S, ConeGen(2, (R(1, 0), R(0, 1))))
    assert cone_is_subspace(ConeGen(2))
    assert not cone_is_subspace(ConeGen(2, (R(1, 0),)))


def test_separation_examples():
    P, Qs = HPoly(1, (((1,), 0),)), HPoly(1, (((-1,), -1),))
    cert = proper_separation(P, Qs)
    assert cert.v[0] > 0 and cert.sup_first == 0 and cert.inf_second == cert.v[0]
    assert verify_separation(P, Qs, cert)
    B = box([0, 0], [1, 1])
    assert proper_separation(B, B) is None


def test_separation_flat_set_against_box():
    # P = [0,1] x {0} sits on the bottom face of the box; with P on the low
    # side the certificate points up, (0, t) with t > 0
    P = HPoly(2, (((1, 0), 1), ((-1, 0), 0)), (((0, 1), 0),))
    B = box([0, 0], [1, 1])
    cert = proper_separation(P, B)
    assert cert is not None and verify_separation(P, B, cert)
    assert cert.v[0] == 0 and cert.v[1] > 0
    cert = proper_separation(B, P)
    assert cert is not None and verify_separation(B, P, cert) and cert.v[1] < 0


# -- properties ---------------------------------------------------------------

@given(polytopes(), st.lists(small, min_size=2, max_size=2), st.integers(0, 50))
def test_normal_cone_matches_oracles(pa, v, seed):
    P, _ = pa
    v = tuple(v[:P.dim])
    for x in sample_points(P, 4, seed=seed) + vertices(P)[:2]:
        C = normal_cone(P, x)
        got = cone_member(C, v)
        assert got == nc_oracle(P, x, v) == nc_vertex_oracle(P, x, v)
        assert inside(cone_hrep(C), v) == got


@given(polytopes(), st.integers(0, 50))
def test_ri_iff_normal_cone_subspace(pa, seed):
    P, _ = pa
    for x in sample_points(P, 4, seed=seed):
        C = normal_cone(P, x)
        assert ri_member(P, x) == cone_is_subspace(C)
        if not ri_member(P, x):
            assert not C.is_trivial()


@given(polytopes(), polytopes(), st.lists(halves, min_size=2, max_size=2))
def test_separation_biconditional(pa, qa, shift):
    P, _ = pa
    Qp, _ = qa
    assume(P.dim == Qp.dim)
    s = tuple(shift[:P.dim])
    Qp = HPoly(Qp.dim, tuple((a, b + sum(x * y for x, y in zip(a, s))) for a, b in Qp.ineqs),
               tuple((c, d + sum(x * y for x, y in zip(c, s))) for c, d in Qp.eqs))
    cert = proper_separation(P, Qp)
    assert (cert is None) == (ri_intersect_witness(P, Qp) is not None)
    if cert is not None:
        assert verify_separation(P, Qp, cert)
        # re-derive both sides with the vertex oracle
        hi = max(sum(a * b for a, b in zip(cert.v, w)) for w in vertices(P))
        lo = min(sum(a * b for a, b in zip(cert.v, w)) for w in vertices(Qp))
        assert hi <= lo and hi == cert.sup_first and lo == cert.inf_second


@given(st.lists(st.lists(small, min_size=2, max_size=2), max_size=3),
       st.lists(st.lists(small, min_size=2, max_size=2), max_size=1),
       st.lists(small, min_size=2, max_size=2))
def test_cone_hrep_agrees_with_member(gens, lin, v):
    C = ConeGen(2, tuple(map(tuple, gens)), tuple(map(tuple, lin)))
    assert inside(cone_hrep(C), tuple(map(Q, v))) == cone_member(C, v)
    assert cone_difference_witness(C, C) is None
