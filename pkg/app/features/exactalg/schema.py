"""
Exact Arithmetic Schema Definitions

Field descriptors and sparse matrices shared by every feature.
Only data shapes and coercions, no elimination logic.
"""

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import lcm
from typing import Literal, Union

from app.core.exceptions import ModeMismatchException, UsageException
from app.features.exactalg.ratfunc import RationalFunction

FieldElement = Union[Fraction, RationalFunction]


@dataclass(frozen=True)
class Field:
    """
    Scalar field of one computation.

    Generic mode works in Q(zeta); rational mode works in Q with
    zeta specialized to p/d.
    """

    mode: Literal["generic", "rational"]
    p: int | None = None
    d: int | None = None

    @classmethod
    def generic(cls) -> "Field":
        return cls("generic")

    @classmethod
    def rational(cls, p: int, d: int) -> "Field":
        return cls("rational", p, d)

    @property
    def is_generic(self) -> bool:
        return self.mode == "generic"

    def zero(self) -> FieldElement:
        return self.coerce(0)

    def one(self) -> FieldElement:
        return self.coerce(1)

    def zeta(self) -> FieldElement:
        if self.is_generic:
            return RationalFunction.zeta()
        return Fraction(self.p, self.d)

    def coerce(self, value: int | Fraction | RationalFunction) -> FieldElement:
        """
        Convert an integer, rational or rational function into this field.

        Generic rational functions are specialized when the field is rational;
        a rational value is never silently promoted from another field's data.
        """
        if isinstance(value, RationalFunction):
            return value if self.is_generic else value.specialize(self.p, self.d)
        if isinstance(value, (int, Fraction)):
            if self.is_generic:
                return RationalFunction.constant(value)
            return Fraction(value)
        raise ModeMismatchException(f"Cannot coerce {value!r} into {self.mode} field")

    def render(self, value: FieldElement) -> str:
        if isinstance(value, RationalFunction):
            return value.render()
        return str(value)

    def parse(self, text: str) -> FieldElement:
        """Inverse of render for this field."""
        if not self.is_generic:
            return Fraction(text)

        from sympy import Poly, Symbol, fraction, sympify, together

        zeta = Symbol("zeta")
        try:
            expr = together(sympify(text, locals={"zeta": zeta}))
        except Exception as e:
            raise UsageException(f"Cannot parse field element '{text}': {e}")

        num_expr, den_expr = fraction(expr)
        num = Poly(num_expr, zeta).all_coeffs()
        den = Poly(den_expr, zeta).all_coeffs()

        scale = lcm(*(Fraction(str(c)).denominator for c in list(num) + list(den)))
        return RationalFunction.from_coeffs(
            [int(Fraction(str(c)) * scale) for c in num],
            [int(Fraction(str(c)) * scale) for c in den],
        )

    def describe(self) -> str:
        return "generic" if self.is_generic else f"{self.p}/{self.d}"


@dataclass
class SparseMatrix:
    """Sparse matrix over a Field; zero entries are never stored."""

    rows: int
    cols: int
    field: Field
    entries: dict[tuple[int, int], FieldElement] = dc_field(default_factory=dict)

    def set(self, row: int, col: int, value: FieldElement) -> None:
        if value:
            self.entries[(row, col)] = value
        else:
            self.entries.pop((row, col), None)

    def as_row_dicts(self) -> dict[int, dict[int, FieldElement]]:
        rows: dict[int, dict[int, FieldElement]] = {}
        for (i, j), value in self.entries.items():
            rows.setdefault(i, {})[j] = value
        return rows
