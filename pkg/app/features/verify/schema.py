"""
Verify Schema Definitions

Jobs, requests and pass/fail reports of the verification suites.
"""

from typing import Any, Literal, Optional

from pydantic import BaseModel, model_validator

SuiteName = Literal[
    "jacobi", "singular", "flags", "duality", "bgg", "projective-tilting", "separation", "shape"
]
RegimeName = Literal["generic", "rational", "kd1", "p1d1", "mirror", "all"]

SUITE_NAMES: tuple[str, ...] = (
    "jacobi", "singular", "flags", "duality", "bgg", "projective-tilting", "separation", "shape"
)
REGIME_NAMES: tuple[str, ...] = ("generic", "rational", "kd1", "p1d1", "mirror", "all")


class Failure(BaseModel):
    """One failed check."""

    weight: Optional[tuple[int, int, int]] = None
    expected: Any = None
    computed: Any = None
    detail: str


class Report(BaseModel):
    """Outcome of a suite; passed + failed always equals total."""

    suite: str
    total: int = 0
    passed: int = 0
    failed: int = 0
    failures: list[Failure] = []
    notes: list[str] = []

    @model_validator(mode="after")
    def check_counts(self) -> "Report":
        if self.passed + self.failed != self.total:
            raise ValueError(f"passed ({self.passed}) + failed ({self.failed}) != total ({self.total})")
        return self

    @classmethod
    def merge(cls, suite: str, reports: list["Report"]) -> "Report":
        return cls(
            suite=suite,
            total=sum(r.total for r in reports),
            passed=sum(r.passed for r in reports),
            failed=sum(r.failed for r in reports),
            failures=[f for r in reports for f in r.failures],
            notes=[n for r in reports for n in r.notes],
        )


class VerifyJob(BaseModel):
    """One suite run at one (parameter, block)."""

    suite: SuiteName
    zeta: str
    k: int
    index_range: int
    max_n: int
    height: int
    seed: int
    sample_size: int


class VerifyRequest(BaseModel):
    """Options of the verify command."""

    suite: SuiteName
    zeta: Optional[str] = None
    k: Optional[int] = None
    regime: RegimeName = "all"
    index_range: int
    max_n: int
    height: int
    seed: int
    workers: int = 1
