"""Exact linear programming over the rationals.

:func:`lp_solve` optimises a linear objective over ``{x | A x <= b, E x = e}``
with ``x`` free, using a two-phase simplex with Bland's rule.  Every answer
comes with something checkable: the optimal point, a Farkas certificate, or an
improving ray.

The pivot kernel is compiled (``polycal._kernel``) when available and falls
back to ``polycal._kernel_py``.  Set ``POLYCAL_PURE=1`` to force the fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch
from .rational import ZERO, as_rat, dot

if os.environ.get("POLYCAL_PURE"):
    from . import _kernel_py as _kernel
else:
    try:
        from . import _kernel  # type: ignore[attr-defined]
    except ImportError:  # pragma: no cover - depends on the build
        from . import _kernel_py as _kernel

KERNEL = "compiled" if _kernel.__name__.endswith("._kernel") else "python"

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"
_STATUS = {0: OPTIMAL, 1: INFEASIBLE, 2: UNBOUNDED}


@dataclass(frozen=True)
class LPResult:
    """Outcome of :func:`lp_solve`.

    ``certificate`` holds the Farkas multipliers (inequality rows first, then
    equality rows) when infeasible, and the improving ray when unbounded.
    """

    status: str
    point: tuple | None = None
    value: Fraction | None = None
    certificate: tuple | None = None

    @property
    def optimal(self) -> bool:
        return self.status == OPTIMAL

    @property
    def feasible(self) -> bool:
        return self.status != INFEASIBLE


def _rows(rows, dim):
    out = []
    for a, b in rows:
        if len(a) != dim:
            raise DimensionMismatch(f"row of length {len(a)} in a {dim}-dimensional system")
        out.append((tuple(as_rat(x) for x in a), as_rat(b)))
    return out


def lp_solve(objective: Sequence, ineqs: Sequence = (), eqs: Sequence = (), sense: str = "max",
             dim: int | None = None) -> LPResult:
    """Optimise ``objective . x`` over ``{x | a.x <= b for (a, b) in ineqs,
    c.x = d for (c, d) in eqs}``.

    ``sense`` is ``"max"`` or ``"min"``.  A zero objective gives a pure
    feasibility test.
    """
    if sense not in ("max", "min"):
        raise ValueError(f"sense must be 'max' or 'min', not {sense!r}")
    n = len(objective) if dim is None else dim
    if len(objective) != n:
        raise DimensionMismatch("objective length differs from dim")
    obj = tuple(as_rat(x) for x in objective)
    ineqs = _rows(ineqs, n)
    eqs = _rows(eqs, n)
    return _solve(obj, ineqs, eqs, sense == "max")


def _solve(obj, ineqs, eqs, maximize) -> LPResult:
    # x = xp - xm, one slack per inequality row
    n = len(obj)
    k = len(ineqs)
    zero = ZERO
    M = []
    r = []
    hint = []
    for i, (a, b) in enumerate(ineqs):
        row = list(a)
        row.extend(-x for x in a)
        s = [zero] * k
        s[i] = Fraction(1)
        row.extend(s)
        M.append(row)
        r.append(b)
        hint.append(2 * n + i)
    for c, d in eqs:
        row = list(c)
        row.extend(-x for x in c)
        row.extend([zero] * k)
        M.append(row)
        r.append(d)
        hint.append(-1)
    sgn = -1 if maximize else 1
    cost = [sgn * x for x in obj] + [-sgn * x for x in obj] + [zero] * k

    status, data = _kernel.simplex(M, r, cost, hint)
    if status == 1:
        return LPResult(INFEASIBLE, certificate=tuple(data))
    x = tuple(data[j] - data[n + j] for j in range(n))
    if status == 2:
        return LPResult(UNBOUNDED, certificate=x)
    return LPResult(OPTIMAL, point=x, value=dot(obj, x))


def verify(result: LPResult, objective, ineqs=(), eqs=(), sense="max") -> bool:
    """Re-check the invariants of an :class:`LPResult` from scratch."""
    obj = tuple(as_rat(x) for x in objective)
    ineqs = [(tuple(map(as_rat, a)), as_rat(b)) for a, b in ineqs]
    eqs = [(tuple(map(as_rat, c)), as_rat(d)) for c, d in eqs]
    n = len(obj)
    if result.status == OPTIMAL:
        x = result.point
        return (all(dot(a, x) <= b for a, b in ineqs)
                and all(dot(c, x) == d for c, d in eqs)
                and result.value == dot(obj, x))
    if result.status == INFEASIBLE:
        y = result.certificate
        rows = ineqs + eqs
        if len(y) != len(rows) or any(t < 0 for t in y[:len(ineqs)]):
            return False
        combo = [sum((t * a[j] for t, (a, _) in zip(y, rows)), ZERO) for j in range(n)]
        rhs = sum((t * b for t, (_, b) in zip(y, rows)), ZERO)
        return not any(combo) and rhs < 0
    d = result.certificate
    grow = dot(obj, d)
    return (all(dot(a, d) <= 0 for a, _ in ineqs)
            and all(dot(c, d) == 0 for c, _ in eqs)
            and (grow > 0 if sense == "max" else grow < 0))
