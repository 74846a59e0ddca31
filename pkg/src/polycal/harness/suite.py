"""Seeded multi-trial runs of the theorem checks."""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from ..formats import dumps
from .checks import CHECKS, check_theorem
from .generators import Gen, check_caps
from .trials import BUILDERS
from .verdict import QUALIFIED, TheoremId, Verdict

# theorems that only make sense with several mappings or functions
_GEM_IDS = {TheoremId.GEM_RI, TheoremId.GEM_CODERIV, TheoremId.COMPOSITE_SUBDIFF}


def trial_seed(seed: int, theorem: TheoremId, trial: int) -> int:
    """Split the master seed: sha256 of ``seed:theorem:trial``, first 8 bytes."""
    h = hashlib.sha256(f"{seed}:{theorem.value}:{trial}".encode()).digest()
    return int.from_bytes(h[:8], "big")


def build_trial(theorem: TheoremId, seed: int, trial: int, dims=None, density=0.5, qualified=True):
    """Deterministic (instances, points, params) for one trial."""
    rng = random.Random(trial_seed(seed, theorem, trial))
    gen = Gen(rng, density)
    if dims:
        check_caps(dims)
        n = dims[0]
        m = dims[1] if len(dims) > 1 else rng.randint(1, 2)
    else:
        n = rng.randint(1, 2)
        m = rng.randint(1, 3) if theorem in _GEM_IDS else rng.randint(1, 2)
    if theorem is TheoremId.SEPARATION:
        qualified = trial % 2 == 1  # alternate disjoint / overlapping relative interiors
    return BUILDERS[theorem](gen, n, m, qualified)


@dataclass(frozen=True)
class SuiteReport:
    verdicts: tuple

    @property
    def summary(self) -> dict:
        out = {"Equal": 0, "Mismatch": 0, "Skipped": 0}
        for v in self.verdicts:
            out[v.outcome.status] += 1
        return out

    @property
    def exit_status(self) -> int:
        return 1 if self.summary["Mismatch"] else 0

    def to_json(self) -> dict:
        return {"verdicts": [v.to_json() for v in self.verdicts], "summary": self.summary}

    def dumps(self) -> str:
        return dumps(self.to_json())


def run_suite(ids: Sequence, trials: int = 10, seed: int = 0, *, dims=None, density: float = 0.5,
              qualified: bool = True, checks: Mapping[TheoremId, Callable] | None = None,
              corrupt: bool = False) -> SuiteReport:
    """One verdict per (theorem, trial), ordered by theorem then trial index.

    ``qualified=False`` draws qualification-violated instances for the
    theorems that carry a qualification (others are generated as usual).
    ``checks`` overrides individual check procedures; ``corrupt`` runs every
    check with a deliberately wrong right-hand side (harness self-test).
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    verdicts = []
    for raw in ids:
        tid = raw if isinstance(raw, TheoremId) else TheoremId.parse(raw)
        want = qualified or tid not in QUALIFIED
        proc = (checks or {}).get(tid, CHECKS[tid])
        for t in range(trials):
            instances, points, params = build_trial(tid, seed, t, dims, density, want)
            verdicts.append(check_theorem(tid, instances, points, params, corrupt=corrupt,
                                          seed=seed, trial=t, procedure=proc))
    return SuiteReport(tuple(verdicts))
