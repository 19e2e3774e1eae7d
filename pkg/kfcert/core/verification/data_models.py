# kfcert/core/verification/data_models.py
"""
Pydantic models for theorem reports and campaign reports.

These are the JSON documents written by ``kfcert verify-thm4``,
``kfcert verify-thm5`` and ``kfcert campaign``.
"""
from enum import Enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, Field, model_validator

from ..data_models import CriticalityVerdict, SpectralEstimate, ThresholdVerdict


class Theorem(str, Enum):
    THM4 = "thm4"  # edge-count condition
    THM5 = "thm5"  # spectral-radius condition


class Conclusion(str, Enum):
    CRITICAL = "critical"
    EXTREMAL_EXCEPTION = "extremal_exception"
    VIOLATION = "violation"
    HYPOTHESES_UNMET = "hypotheses_unmet"
    INDETERMINATE = "indeterminate"


class HypothesisCheck(BaseModel):
    """One named hypothesis with the concrete numbers it was decided on."""

    passed: bool
    value: Union[int, float, None] = None
    required: str = Field(description="Human-readable requirement, e.g. '> 109'.")


HYPOTHESIS_NAMES = ("parameters", "connectivity", "order", "parity", "threshold")


class TheoremReport(BaseModel):
    theorem: Theorem
    n: int
    t: int
    k: int
    edges: int
    hypotheses: Dict[str, HypothesisCheck]
    conclusion: Conclusion
    criticality: Optional[CriticalityVerdict] = None
    closure_edges_added: Optional[int] = None
    closure_graph6: Optional[str] = None
    spectral: Optional[SpectralEstimate] = None
    threshold_rho: Optional[float] = None
    spectral_verdict: Optional[ThresholdVerdict] = None
    note: Optional[str] = None

    @model_validator(mode="after")
    def violation_needs_all_hypotheses(self) -> "TheoremReport":
        missing = set(HYPOTHESIS_NAMES) - set(self.hypotheses)
        if missing:
            raise ValueError(f"report is missing hypothesis checks: {sorted(missing)}")
        if self.conclusion == Conclusion.VIOLATION and not self.hypotheses_hold:
            raise ValueError("VIOLATION requires every hypothesis to pass")
        return self

    @property
    def hypotheses_hold(self) -> bool:
        return all(check.passed for check in self.hypotheses.values())


class CellParams(BaseModel):
    n: int
    t: int
    k: int


class CellReport(BaseModel):
    params: CellParams
    samples: int
    cell_seed: int
    counts: Dict[Conclusion, int] = Field(default_factory=lambda: {c: 0 for c in Conclusion})
    seeds_of_exceptions: Dict[Conclusion, List[int]] = Field(default_factory=dict)
    extremal_conclusion: Optional[Conclusion] = Field(
        default=None, description="Verdict on the extremal graph itself, when it was included."
    )

    def record(self, conclusion: Conclusion, seed: Optional[int]) -> None:
        self.counts[conclusion] = self.counts.get(conclusion, 0) + 1
        if seed is not None and conclusion in (
            Conclusion.EXTREMAL_EXCEPTION,
            Conclusion.VIOLATION,
            Conclusion.INDETERMINATE,
        ):
            self.seeds_of_exceptions.setdefault(conclusion, []).append(seed)


class CampaignReport(BaseModel):
    theorem: Theorem
    seed: int
    grid: List[CellParams]
    cells: List[CellReport]

    @property
    def violations(self) -> int:
        return sum(cell.counts.get(Conclusion.VIOLATION, 0) for cell in self.cells)
