"""
Weights Schema Definitions

Pydantic models for parameters, weights, atypical indices and block ids.
Following the feature layout: only data shapes and parsing, no combinatorics.
"""

from math import gcd
from typing import Literal, NamedTuple, Optional

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from app.core.exceptions import UsageException
from app.features.exactalg.schema import Field


class Parameter(BaseModel):
    """The parameter zeta: generic (transcendental) or a positive rational p/d."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["generic", "rational"]
    p: Optional[int] = None
    d: Optional[int] = None

    @model_validator(mode="after")
    def check_rational(self) -> "Parameter":
        if self.kind == "generic":
            if self.p is not None or self.d is not None:
                raise ValueError("generic parameter takes no p/d")
            return self
        if self.p is None or self.d is None:
            raise ValueError("rational parameter needs p and d")
        if self.p < 1 or self.d < 1:
            raise ValueError(
                "zeta must be a positive rational p/d; negative values are covered by the "
                "isomorphisms D(2|1;zeta) = D(2|1;zeta^-1) = D(2|1;-1-zeta)"
            )
        if gcd(self.p, self.d) != 1:
            raise ValueError(f"p/d = {self.p}/{self.d} is not in lowest terms")
        return self

    @classmethod
    def generic(cls) -> "Parameter":
        return cls(kind="generic")

    @classmethod
    def rational(cls, p: int, d: int) -> "Parameter":
        return cls(kind="rational", p=p, d=d)

    @classmethod
    def parse(cls, text: str) -> "Parameter":
        """
        Parse "generic", "p/d" or "p".

        Raises:
            UsageException: If the text is not of that form
            ValidationError: If p/d is not a positive fraction in lowest terms
        """
        text = text.strip()
        if text == "generic":
            return cls.generic()
        numerator, _, denominator = text.partition("/")
        try:
            p = int(numerator)
            d = int(denominator) if denominator else 1
        except ValueError:
            raise UsageException(f"Cannot parse zeta '{text}': expected 'generic' or 'p/d'")
        return cls.rational(p, d)

    @property
    def is_generic(self) -> bool:
        return self.kind == "generic"

    def field(self) -> Field:
        return Field.generic() if self.is_generic else Field.rational(self.p, self.d)

    def __str__(self) -> str:
        return "generic" if self.is_generic else f"{self.p}/{self.d}"


class Weight(NamedTuple):
    """Rho-shifted weight label (x, y, z)."""

    x: int
    y: int
    z: int

    @classmethod
    def parse(cls, text: str) -> "Weight":
        parts = text.strip().split(",")
        if len(parts) != 3:
            raise UsageException(f"Cannot parse weight '{text}': expected 'x,y,z'")
        try:
            return cls(*(int(part) for part in parts))
        except ValueError:
            raise UsageException(f"Cannot parse weight '{text}': coordinates must be integers")

    def __neg__(self) -> "Weight":
        return Weight(-self.x, -self.y, -self.z)

    def shift(self, gamma: tuple[int, int, int]) -> "Weight":
        return Weight(self.x + gamma[0], self.y + gamma[1], self.z + gamma[2])

    def render(self) -> str:
        return f"{self.x},{self.y},{self.z}"


class AtypicalIndex(BaseModel):
    """Coordinates (k, n, signs) of an atypical weight; 'o' marks a zero coordinate."""

    model_config = ConfigDict(frozen=True)

    k: int
    n: int
    signs: str

    @field_validator("signs")
    @classmethod
    def check_signs(cls, value: str) -> str:
        if len(value) != 3 or any(ch not in "+-o" for ch in value):
            raise ValueError(f"signs must be three characters from '+', '-', 'o', got '{value}'")
        return value

    @field_validator("k")
    @classmethod
    def check_k(cls, value: int) -> int:
        if value < 0:
            raise ValueError("k must be a natural number")
        return value


class BlockId(BaseModel):
    """Atypical block B_k or the typical block of a Weyl orbit."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["typical", "atypical"]
    k: Optional[int] = None
    orbit: Optional[tuple[int, int, int]] = None

    @classmethod
    def atypical(cls, k: int) -> "BlockId":
        return cls(kind="atypical", k=k)

    @classmethod
    def typical(cls, orbit: tuple[int, int, int]) -> "BlockId":
        return cls(kind="typical", orbit=orbit)
