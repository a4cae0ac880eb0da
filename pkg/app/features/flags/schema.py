"""
Flags Schema Definitions

Regimes, module labels and sweep reports.
"""

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict

from app.features.weights.schema import Weight


class Regime(str, Enum):
    """Which family of closed forms governs a weight."""

    TYPICAL = "typical"
    GENERIC_B0 = "generic"
    RATIONAL = "rational"
    KD1 = "kd1"
    P1D1 = "p1d1"
    MIRROR = "mirror"


class ModuleLabel(BaseModel):
    """M, L, T or P at a rho-shifted weight."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["verma", "simple", "tilting", "projective"]
    weight: tuple[int, int, int]

    def render(self) -> str:
        letter = {"verma": "M", "simple": "L", "tilting": "T", "projective": "P"}[self.kind]
        return f"{letter}({Weight(*self.weight).render()})"


class SweepEntry(BaseModel):
    """Translation-functor reconstruction of one tilting flag."""

    weight: tuple[int, int, int]
    passed: bool
    seed: Optional[tuple[int, int, int]] = None
    module: Optional[str] = None
    seed_source: Literal["documented", "fallback", "none"] = "none"
    expected: dict[str, int] = {}
    computed: dict[str, int] = {}
    detail: Optional[str] = None


class SweepReport(BaseModel):
    """All weights of one (parameter, k, regime) sweep."""

    zeta: str
    k: int
    regime: Regime
    total: int
    passed: int
    failed: int
    documented_hits: int
    entries: list[SweepEntry] = []
