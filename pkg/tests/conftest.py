"""Shared helpers: small constructors and a brute-force vertex oracle.

The oracle enumerates vertices of bounded polyhedra by solving every square
subsystem of active rows with its own Gaussian elimination, so it shares no
code with the LP kernel or Fourier-Motzkin elimination under test.
"""
from __future__ import annotations

import itertools
import sys
import os
from fractions import Fraction as Q

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from polycal import HPoly, MaxAffineFn

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("thorough", deadline=None, max_examples=400,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def R(*xs):
    return tuple(Q(x) for x in xs)


def interval(lo, hi):
    return HPoly(1, (((Q(1),), Q(hi)), ((Q(-1),), Q(-lo))))


def box(lo, hi):
    return HPoly.box(lo, hi)


def abs_fn():
    return MaxAffineFn(1, (((1,), 0), ((-1,), 0)))


# -- brute-force oracle -----------------------------------------------------

def solve_square(rows, rhs):
    """Unique solution of a square rational system, or None when singular."""
    n = len(rows)
    M = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if M[i][col] != 0), None)
        if piv is None:
            return None
        M[col], M[piv] = M[piv], M[col]
        p = M[col][col]
        M[col] = [v / p for v in M[col]]
        for i in range(n):
            if i != col and M[i][col] != 0:
                f = M[i][col]
                M[i] = [a - f * b for a, b in zip(M[i], M[col])]
    return tuple(M[i][n] for i in range(n))


def inside(P, x):
    return (all(sum(a * t for a, t in zip(r, x)) <= b for r, b in P.ineqs)
            and all(sum(c * t for c, t in zip(r, x)) == d for r, d in P.eqs))


def vertices(P):
    """All vertices of a bounded polyhedron (empty list when P is empty)."""
    n = P.dim
    if n == 0:
        return [()] if inside(P, ()) else []
    rows = list(P.ineqs) + list(P.eqs)
    out = set()
    for combo in itertools.combinations(range(len(rows)), n):
        x = solve_square([rows[i][0] for i in combo], [rows[i][1] for i in combo])
        if x is not None and inside(P, x):
            out.add(x)
    return sorted(out)


def support(P, c):
    vs = vertices(P)
    return max(sum(a * b for a, b in zip(c, v)) for v in vs)


# -- hypothesis strategies ----------------------------------------------------

small = st.integers(-3, 3).map(Q)
halves = st.builds(lambda p, q: Q(p, q), st.integers(-4, 4), st.sampled_from([1, 2]))


@st.composite
def polytopes(draw, dim=None, max_rows=4, radius=3):
    """A nonempty polytope: random rows through or beyond an anchor, boxed."""
    n = draw(st.integers(1, 2)) if dim is None else dim
    anchor = tuple(draw(halves) for _ in range(n))
    ineqs = []
    for _ in range(draw(st.integers(0, max_rows))):
        a = tuple(draw(small) for _ in range(n))
        if not any(a):
            continue
        slack = draw(st.sampled_from([Q(0), Q(0), Q(1, 2), Q(1), Q(2)]))
        ineqs.append((a, sum(x * y for x, y in zip(a, anchor)) + slack))
    eqs = []
    if n > 1 and draw(st.integers(0, 5)) == 0:
        c = tuple(draw(small) for _ in range(n))
        if any(c):
            eqs.append((c, sum(x * y for x, y in zip(c, anchor))))
    lo = [t - radius for t in anchor]
    hi = [t + radius for t in anchor]
    B = HPoly.box(lo, hi)
    return HPoly(n, tuple(ineqs) + B.ineqs, tuple(eqs)), anchor


@st.composite
def maxaffine(draw, dim=None, bounded_dom=False):
    n = draw(st.integers(1, 2)) if dim is None else dim
    k = draw(st.integers(1, 3))
    pieces = tuple((tuple(draw(small) for _ in range(n)), draw(halves)) for _ in range(k))
    if bounded_dom or draw(st.booleans()):
        D, anchor = draw(polytopes(n, max_rows=2))
    else:
        D, anchor = None, tuple(draw(halves) for _ in range(n))
    return MaxAffineFn(n, pieces, D), anchor


@pytest.fixture
def unit_box():
    return box([0, 0], [1, 1])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
