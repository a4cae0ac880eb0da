"""
Exact Arithmetic Service

Mode-checked field operations and specialization of rational functions.
"""

from fractions import Fraction

from app.core.exceptions import DivisionByZeroException, ModeMismatchException
from app.features.exactalg.ratfunc import RationalFunction
from app.features.exactalg.schema import FieldElement


def _check_same_mode(a: FieldElement, b: FieldElement) -> None:
    if isinstance(a, RationalFunction) != isinstance(b, RationalFunction):
        raise ModeMismatchException(
            f"Operands {a!r} and {b!r} belong to different field modes"
        )


def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_mode(a, b)
    return a + b


def field_sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_mode(a, b)
    return a - b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same_mode(a, b)
    return a * b


def field_div(a: FieldElement, b: FieldElement) -> FieldElement:
    """
    Divide two field elements of the same mode.

    Args:
        a: Dividend
        b: Divisor

    Returns:
        FieldElement: Exact quotient in canonical form

    Raises:
        ModeMismatchException: If a and b are in different modes
        DivisionByZeroException: If b is zero
    """
    _check_same_mode(a, b)
    if not b:
        raise DivisionByZeroException(f"Division of {a} by zero")
    return a / b


def specialize(x: RationalFunction, p: int, d: int) -> Fraction:
    """
    Evaluate a rational function at zeta = p/d.

    Args:
        x: Generic-mode element
        p: Positive numerator
        d: Positive denominator, coprime to p

    Returns:
        Fraction: Exact value at p/d

    Raises:
        ModeMismatchException: If x is already a rational number
        PoleException: If the denominator of x vanishes at p/d
    """
    if not isinstance(x, RationalFunction):
        raise ModeMismatchException(f"Only generic elements can be specialized, got {x!r}")
    return x.specialize(p, d)
