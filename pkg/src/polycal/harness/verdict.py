"""Theorem identifiers and the verdict record produced by every check."""
from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass, field

from ..formats import dumps, param_doc, rats, to_doc


class TheoremId(str, enum.Enum):
    RI_PROPS = "RI_PROPS"
    SEPARATION = "SEPARATION"
    NC_INTERSECTION = "NC_INTERSECTION"
    ROCKAFELLAR = "ROCKAFELLAR"
    RI_RANGE = "RI_RANGE"
    GEM_RI = "GEM_RI"
    EPI_RI = "EPI_RI"
    EPI_CODERIV = "EPI_CODERIV"
    GEM_CODERIV = "GEM_CODERIV"
    OVF_SUBDIFF = "OVF_SUBDIFF"
    COMPOSITE_SUBDIFF = "COMPOSITE_SUBDIFF"
    SUM_RULE = "SUM_RULE"
    SUBDIFF_SUM = "SUBDIFF_SUM"
    CHAIN_RULE = "CHAIN_RULE"
    PREIMAGE_NC = "PREIMAGE_NC"
    SUBLEVEL_NC = "SUBLEVEL_NC"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        """Case-insensitive lookup; dashes are accepted for underscores."""
        key = text.strip().upper().replace("-", "_")
        try:
            return cls[key]
        except KeyError:
            raise ValueError(f"unknown theorem id {text!r}; choose from "
                             + ", ".join(t.value for t in cls)) from None


# theorems whose statement carries a relative-interior qualification
QUALIFIED = frozenset({
    TheoremId.NC_INTERSECTION, TheoremId.GEM_RI, TheoremId.GEM_CODERIV,
    TheoremId.OVF_SUBDIFF, TheoremId.COMPOSITE_SUBDIFF, TheoremId.SUM_RULE,
    TheoremId.SUBDIFF_SUM, TheoremId.CHAIN_RULE, TheoremId.PREIMAGE_NC,
    TheoremId.SUBLEVEL_NC,
})

SATISFIED = "Satisfied"
NOT_SATISFIED = "NotSatisfied"
EQUAL = "Equal"
MISMATCH = "Mismatch"
SKIPPED = "Skipped"


@dataclass(frozen=True)
class Qualification:
    """``witness`` is a common relative-interior point when satisfied, and a
    proper-separation vector of the sets involved when not."""

    status: str
    witness: tuple | None = None
    detail: str = ""

    @property
    def satisfied(self) -> bool:
        return self.status == SATISFIED

    def to_json(self) -> dict:
        d = {"status": self.status}
        if self.witness is not None:
            d["ri_point" if self.satisfied else "separator"] = rats(self.witness)
        if self.detail:
            d["detail"] = self.detail
        return d


@dataclass(frozen=True)
class Outcome:
    """``point`` (for a Mismatch) lies in exactly one side; ``side`` says which."""

    status: str
    lhs: str = ""
    rhs: str = ""
    point: tuple | None = None
    side: str = ""

    def to_json(self) -> dict:
        d = {"status": self.status}
        if self.status == MISMATCH:
            d.update(lhs=self.lhs, rhs=self.rhs, point=rats(self.point), side=self.side)
        return d


@dataclass(frozen=True)
class Verdict:
    theorem: TheoremId
    qualification: Qualification
    outcome: Outcome
    instance_digest: str
    seed: int | None = None
    trial: int | None = None
    checks: int = 0
    notes: tuple = field(default_factory=tuple)

    @property
    def equal(self) -> bool:
        return self.outcome.status == EQUAL

    @property
    def mismatch(self) -> bool:
        return self.outcome.status == MISMATCH

    @property
    def skipped(self) -> bool:
        return self.outcome.status == SKIPPED

    def to_json(self) -> dict:
        return {"theorem": self.theorem.value,
                "qualification": self.qualification.to_json(),
                "outcome": self.outcome.to_json(),
                "instance_digest": self.instance_digest,
                "seed": self.seed, "trial": self.trial,
                "checks": self.checks, "notes": list(self.notes)}


def instance_digest(theorem: TheoremId, instances, points, params) -> str:
    doc = {"theorem": theorem.value, "instances": [to_doc(i) for i in instances],
           "points": [rats(p) for p in points], "params": param_doc(params)}
    return hashlib.sha256(dumps(doc).encode("ascii")).hexdigest()
