"""
Rational functions in one variable zeta with integer coefficients.

Coefficients are stored densely, highest degree first, in the layout
used by sympy's dense polynomial toolkit (``dup_*`` functions).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from sympy import QQ, ZZ
from sympy.polys.densearith import dup_add, dup_mul, dup_neg, dup_sub
from sympy.polys.densebasic import dup_LC, dup_strip
from sympy.polys.densetools import dup_eval
from sympy.polys.euclidtools import dup_inner_gcd

from app.core.exceptions import (
    DivisionByZeroException,
    ModeMismatchException,
    PoleException,
)

Coeffs = tuple[int, ...]


def _content(coeffs: Sequence[int]) -> int:
    g = 0
    for c in coeffs:
        g = gcd(g, int(c))
    return g


def _render_poly(coeffs: Coeffs) -> str:
    from sympy import Poly, Symbol, sstr

    return sstr(Poly(list(coeffs) or [0], Symbol("zeta")).as_expr())


def _normalize(num: Sequence[int], den: Sequence[int]) -> tuple[Coeffs, Coeffs]:
    """
    Bring a numerator/denominator pair to canonical form.

    Canonical form: gcd(num, den) = 1 as polynomials, the content across
    both is 1 and the leading coefficient of den is positive.
    """
    num = dup_strip([ZZ(c) for c in num])
    den = dup_strip([ZZ(c) for c in den])

    if not den:
        raise DivisionByZeroException("Rational function with zero denominator")
    if not num:
        return (), (1,)

    _, num, den = dup_inner_gcd(num, den, ZZ)

    content = gcd(_content(num), _content(den))
    if content > 1:
        num = [c // content for c in num]
        den = [c // content for c in den]

    if dup_LC(den, ZZ) < 0:
        num, den = dup_neg(num, ZZ), dup_neg(den, ZZ)

    return tuple(int(c) for c in num), tuple(int(c) for c in den)


@dataclass(frozen=True, eq=False)
class RationalFunction:
    """An element of Q(zeta), always held in canonical form."""

    num: Coeffs
    den: Coeffs = (1,)

    @classmethod
    def from_coeffs(cls, num: Sequence[int], den: Sequence[int] = (1,)) -> "RationalFunction":
        n, d = _normalize(num, den)
        return cls(n, d)

    @classmethod
    def constant(cls, value: int | Fraction) -> "RationalFunction":
        value = Fraction(value)
        return cls.from_coeffs([value.numerator], [value.denominator])

    @classmethod
    def zeta(cls) -> "RationalFunction":
        return cls((1, 0), (1,))

    # Arithmetic

    def _coerce(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, bool) or not isinstance(other, int):
            if isinstance(other, Fraction):
                raise ModeMismatchException(
                    f"Cannot mix rational-function {self} with rational {other}"
                )
            return NotImplemented
        return RationalFunction.constant(other)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        num = dup_add(
            dup_mul(list(self.num), list(other.den), ZZ),
            dup_mul(list(other.num), list(self.den), ZZ),
            ZZ,
        )
        return RationalFunction.from_coeffs(num, dup_mul(list(self.den), list(other.den), ZZ))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        num = dup_sub(
            dup_mul(list(self.num), list(other.den), ZZ),
            dup_mul(list(other.num), list(self.den), ZZ),
            ZZ,
        )
        return RationalFunction.from_coeffs(num, dup_mul(list(self.den), list(other.den), ZZ))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction.from_coeffs(
            dup_mul(list(self.num), list(other.num), ZZ),
            dup_mul(list(self.den), list(other.den), ZZ),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other:
            raise DivisionByZeroException(f"Division of {self} by zero")
        return RationalFunction.from_coeffs(
            dup_mul(list(self.num), list(other.den), ZZ),
            dup_mul(list(self.den), list(other.num), ZZ),
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(tuple(-c for c in self.num), self.den)

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            if not self:
                raise DivisionByZeroException("Zero raised to a negative power")
            base = RationalFunction.from_coeffs(self.den, self.num)
            exponent = -exponent
        else:
            base = self
        result = RationalFunction.constant(1)
        for _ in range(exponent):
            result = result * base
        return result

    def __bool__(self) -> bool:
        return bool(self.num)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = RationalFunction.constant(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        if self.den == (1,) and len(self.num) <= 1:
            return hash(self.num[0] if self.num else 0)
        return hash((self.num, self.den))

    # Evaluation and display

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def specialize(self, p: int, d: int) -> Fraction:
        """
        Evaluate at zeta = p/d exactly.

        Args:
            p: Positive numerator of the specialization point
            d: Positive denominator of the specialization point

        Returns:
            Fraction: Exact value

        Raises:
            PoleException: If the denominator vanishes at p/d
        """
        point = QQ(p, d)
        den_value = dup_eval([QQ(c) for c in self.den], point, QQ)
        if not den_value:
            raise PoleException(
                f"Denominator {_render_poly(self.den)} vanishes at zeta={p}/{d}"
            )
        num_value = dup_eval([QQ(c) for c in self.num], point, QQ)
        value = num_value / den_value
        return Fraction(int(QQ.numer(value)), int(QQ.denom(value)))

    def render(self) -> str:
        numerator = _render_poly(self.num)
        if self.den == (1,):
            return numerator
        return f"({numerator})/({_render_poly(self.den)})"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RationalFunction({self.render()})"
