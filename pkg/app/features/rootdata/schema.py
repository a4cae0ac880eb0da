"""
Root Data Schema Definitions

Basis elements, weights, bracket tables and Jacobi reports.
"""

from dataclasses import dataclass, field as dc_field
from typing import NamedTuple

from pydantic import BaseModel, Field as PydanticField

from app.features.exactalg.schema import Field, FieldElement

# label -> coefficient; zero coefficients are never stored
LinearCombination = dict[str, FieldElement]


class FormWeight(NamedTuple):
    """Coefficients of delta, eps1, eps2."""

    a: int | FieldElement
    b: int | FieldElement
    c: int | FieldElement


@dataclass(frozen=True)
class BasisElement:
    """One of the 17 basis vectors: a root vector or a Cartan element."""

    label: str
    parity: int
    weight: tuple[int, int, int]

    @property
    def is_cartan(self) -> bool:
        return self.weight == (0, 0, 0)


@dataclass(frozen=True)
class RootDatum:
    """Simple roots, positive roots, simple coroots and rho."""

    simple_roots: tuple[tuple[int, int, int], ...]
    even_positive: tuple[tuple[int, int, int], ...]
    odd_positive: tuple[tuple[int, int, int], ...]
    rho: tuple[int, int, int]
    # simple coroot i as Cartan label -> coefficient
    simple_coroots: tuple[LinearCombination, ...]


@dataclass
class StructureTable:
    """
    Complete bracket table over one field.

    ``brackets[(x, y)]`` is [x, y] as a linear combination of basis labels;
    every ordered pair of basis labels is present.
    """

    field: Field
    brackets: dict[tuple[str, str], LinearCombination] = dc_field(default_factory=dict)

    def bracket(self, x: str, y: str) -> LinearCombination:
        return self.brackets[(x, y)]


class JacobiFailure(BaseModel):
    """One ordered triple violating the super-Jacobi identity."""

    triple: tuple[str, str, str]
    residual: dict[str, str]


class JacobiReport(BaseModel):
    """Result of an exhaustive super-Jacobi check."""

    field: str
    total: int
    passed: int
    failed: int
    failures: list[JacobiFailure] = PydanticField(default_factory=list)


def _element(label: str, weight: tuple[int, int, int]) -> BasisElement:
    return BasisElement(label=label, parity=weight[0] % 2, weight=weight)


# Fixed basis order: positive root vectors, negative root vectors, Cartan.
BASIS: tuple[BasisElement, ...] = (
    _element("e0", (1, -1, -1)),
    _element("e1", (0, 2, 0)),
    _element("e2", (0, 0, 2)),
    _element("e_pm", (1, 1, -1)),
    _element("e_mp", (1, -1, 1)),
    _element("e_pp", (1, 1, 1)),
    _element("e_2d", (2, 0, 0)),
    _element("f0", (-1, 1, 1)),
    _element("f1", (0, -2, 0)),
    _element("f2", (0, 0, -2)),
    _element("f_pm", (-1, -1, 1)),
    _element("f_mp", (-1, 1, -1)),
    _element("f_pp", (-1, -1, -1)),
    _element("f_2d", (-2, 0, 0)),
    _element("h_2d", (0, 0, 0)),
    _element("h_2e1", (0, 0, 0)),
    _element("h_2e2", (0, 0, 0)),
)

LABELS: tuple[str, ...] = tuple(b.label for b in BASIS)
BY_LABEL: dict[str, BasisElement] = {b.label: b for b in BASIS}
BY_WEIGHT: dict[tuple[int, int, int], str] = {
    b.weight: b.label for b in BASIS if not b.is_cartan
}
CARTAN: tuple[str, ...] = ("h_2d", "h_2e1", "h_2e2")
RAISING: tuple[str, ...] = ("e0", "e1", "e2")
