# kfcert/core/data_models.py
"""
Pydantic result models returned by the combinatorial and spectral kernels.

Vertex sets are stored as sorted lists so that every model serializes to
stable JSON.
"""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Matching(BaseModel):
    """A set of pairwise disjoint edges, each stored as ``(u, v)`` with ``u < v``."""

    model_config = ConfigDict(frozen=True)

    pairs: List[Tuple[int, int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def pairs_are_disjoint(self) -> "Matching":
        seen = set()
        for u, v in self.pairs:
            if u == v or u in seen or v in seen:
                raise ValueError(f"pair ({u}, {v}) overlaps another pair or is a loop")
            seen.update((u, v))
        return self

    @property
    def size(self) -> int:
        return len(self.pairs)

    def covered(self) -> List[int]:
        return sorted(v for pair in self.pairs for v in pair)


class CriticalityReason(str, Enum):
    PARITY = "parity"
    WITNESS_FOUND = "witness_found"
    ALL_SUBSETS_PASS = "all_subsets_pass"


class CriticalityVerdict(BaseModel):
    """Outcome of the exact k-factor-criticality check."""

    is_critical: bool
    k: int
    reason: CriticalityReason
    witness: Optional[List[int]] = Field(
        default=None, description="S with |S| = k such that G - S has no perfect matching."
    )
    subsets_checked: int = 0

    @model_validator(mode="after")
    def reason_matches_outcome(self) -> "CriticalityVerdict":
        if self.reason == CriticalityReason.ALL_SUBSETS_PASS and not self.is_critical:
            raise ValueError("ALL_SUBSETS_PASS requires is_critical")
        if self.reason == CriticalityReason.WITNESS_FOUND:
            if self.is_critical or self.witness is None or len(self.witness) != self.k:
                raise ValueError("WITNESS_FOUND requires a k-vertex witness and is_critical=False")
        return self


class ConnectivityResult(BaseModel):
    kappa: int
    separator: Optional[List[int]] = Field(
        default=None, description="Minimum vertex cut; absent for complete graphs."
    )


class ClosureStep(BaseModel):
    """One joined pair and the degrees that justified it at join time."""

    u: int
    v: int
    d_u: int
    d_v: int


class ClosureTrace(BaseModel):
    l: int
    added: List[ClosureStep] = Field(default_factory=list)

    def to_json_lines(self) -> str:
        return "".join(step.model_dump_json() + "\n" for step in self.added)


class SpectralEstimate(BaseModel):
    rho: float
    residual: float
    iterations: int


class ThresholdVerdict(str, Enum):
    """Three-way comparison of a floating-point value against a real threshold."""

    ABOVE = "above"
    BELOW = "below"
    WITHIN_SLACK = "within_slack"


class CliqueResult(BaseModel):
    omega: int
    witness: List[int]


class Lemma2Report(BaseModel):
    """Criticality of G and of its (n+k-1)-closure side by side."""

    k: int
    closure_level: int
    graph_verdict: CriticalityVerdict
    closure_verdict: CriticalityVerdict
    closure_edges_added: int

    @property
    def equivalent(self) -> bool:
        return self.graph_verdict.is_critical == self.closure_verdict.is_critical


class Lemma8Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    BELOW_THRESHOLD = "below_threshold"
    HYPOTHESES_UNMET = "hypotheses_unmet"


class Lemma8Report(BaseModel):
    status: Lemma8Status
    edges: int
    threshold: Optional[int] = None
    omega: Optional[int] = None
    required_omega: Optional[int] = None
    unmet: List[str] = Field(default_factory=list)


class ClaimsReport(BaseModel):
    """Each structural property of the extremal family, checked separately."""

    clique_size_ok: bool
    low_degree_count_ok: bool
    low_degree_independent: bool
    common_neighborhood_ok: bool
    hub_universal: bool
    low_degree_vertices: List[int] = Field(default_factory=list)
    hub: List[int] = Field(default_factory=list)

    @property
    def all_hold(self) -> bool:
        return (
            self.clique_size_ok
            and self.low_degree_count_ok
            and self.low_degree_independent
            and self.common_neighborhood_ok
            and self.hub_universal
        )
