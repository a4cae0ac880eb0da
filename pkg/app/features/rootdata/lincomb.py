"""
Linear combinations of basis labels.

Helpers shared by the bracket bootstrap, the Jacobi check and the
Verma module engine. Zero coefficients are always dropped.
"""

from typing import Iterable

from app.features.exactalg.schema import FieldElement
from app.features.rootdata.schema import LinearCombination


def combo_add(u: LinearCombination, v: LinearCombination, scale: FieldElement | int = 1) -> LinearCombination:
    """Return u + scale * v."""
    result = dict(u)
    for label, coeff in v.items():
        value = result[label] + scale * coeff if label in result else scale * coeff
        if value:
            result[label] = value
        else:
            result.pop(label, None)
    return result


def combo_scale(u: LinearCombination, scale: FieldElement | int) -> LinearCombination:
    if not scale:
        return {}
    return {label: scale * coeff for label, coeff in u.items()}


def combo_sum(parts: Iterable[LinearCombination]) -> LinearCombination:
    result: LinearCombination = {}
    for part in parts:
        result = combo_add(result, part)
    return result


def single_term(u: LinearCombination) -> tuple[str, FieldElement] | None:
    if len(u) != 1:
        return None
    (label, coeff), = u.items()
    return label, coeff
