"""
Verma Schema Definitions

PBW monomials, Verma vectors and singular-vector reports.
"""

from dataclasses import dataclass, field as dc_field
from typing import Optional

from pydantic import BaseModel

from app.features.exactalg.schema import FieldElement
from app.features.weights.schema import Weight

# Negative root vectors in PBW order; odd slots carry exponent 0 or 1.
PBW_ORDER: tuple[str, ...] = ("f_2d", "f_pp", "f_pm", "f_mp", "f0", "f1", "f2")
ODD_SLOTS: frozenset[int] = frozenset({1, 2, 3, 4})
EVEN_SLOTS: tuple[int, ...] = (0, 5, 6)
SLOT_HEIGHTS: tuple[int, ...] = (4, 3, 2, 2, 1, 1, 1)

PBWMonomial = tuple[int, int, int, int, int, int, int]
UNIT: PBWMonomial = (0, 0, 0, 0, 0, 0, 0)


@dataclass
class VermaVector:
    """Homogeneous vector of the Verma module with highest-weight label f."""

    highest: Weight
    coeffs: dict[PBWMonomial, FieldElement] = dc_field(default_factory=dict)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def normalized(self) -> "VermaVector":
        """Scale so that the coefficient of the first monomial is 1."""
        if not self.coeffs:
            return self
        lead = self.coeffs[min(self.coeffs)]
        return VermaVector(self.highest, {m: c / lead for m, c in sorted(self.coeffs.items())})


class SingularCheck(BaseModel):
    """Outcome of checking one constructed vector."""

    highest: tuple[int, int, int]
    root: str
    n: Optional[int] = None
    nonzero: bool
    singular: bool
    in_singular_space: Optional[bool] = None


class ExpansionReport(BaseModel):
    """Comparison of the constructed 2delta vector with its closed form."""

    highest: tuple[int, int, int]
    n: int
    proportional: bool
    scalar: Optional[str] = None
    constructed_singular: bool
    oracle_singular: bool
    mismatched_monomials: list[str] = []
