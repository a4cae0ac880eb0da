"""
Weights Service

Rho-shift, atypicality, atypical coordinates, block classification,
Weyl orbits and the two central-character separators.
"""

from fractions import Fraction
from itertools import product

from app.core.exceptions import HypothesisException, NotAtypicalException
from app.features.exactalg.schema import FieldElement
from app.features.rootdata.service import ODD_POSITIVE, RHO, bilinear_form
from app.features.weights.schema import AtypicalIndex, BlockId, Parameter, Weight

SIGN_CHARS = {1: "+", -1: "-"}


def rho_shift(weight: tuple[int, int, int]) -> Weight:
    """lambda -> lambda + rho"""
    return Weight(*(a + r for a, r in zip(weight, RHO)))


def rho_unshift(f: Weight) -> tuple[int, int, int]:
    """f -> f - rho, the highest weight of the Verma module labelled f."""
    return tuple(a - r for a, r in zip(f, RHO))


def height(weight: tuple[int, int, int]) -> Fraction:
    """Sum of simple-root coefficients: 2a + (b + c)/2."""
    return 2 * weight[0] + Fraction(weight[1] + weight[2], 2)


def _sign_char(value: int) -> str:
    if value == 0:
        return "o"
    return "+" if value > 0 else "-"


def _sign_value(char: str) -> int:
    return {"+": 1, "-": -1, "o": 0}[char]


def is_atypical(param: Parameter, f: Weight) -> bool:
    """
    Atypicality of a rho-shifted weight.

    Generic zeta: |x| = |y| = |z|. Rational p/d: d(x +- y) + p(x +- z) = 0
    for some choice of signs.
    """
    x, y, z = f
    if param.is_generic:
        return abs(x) == abs(y) == abs(z)
    p, d = param.p, param.d
    return any(d * (x + s1 * y) + p * (x + s2 * z) == 0 for s1, s2 in product((1, -1), repeat=2))


def _index_candidates(param: Parameter, f: Weight) -> list[tuple[int, int]]:
    x, y, z = f
    if abs(x) == abs(y) == abs(z):
        return [(0, abs(x))]
    if param.is_generic:
        return []

    p, d = param.p, param.d
    found = set()
    for n in {x, -x}:
        for kp in {abs(y) - n, -abs(y) - n}:
            if kp <= 0 or kp % p:
                continue
            k = kp // p
            if abs(n - k * d) == abs(z):
                found.add((k, n))
    return sorted(found)


def atypical_index(param: Parameter, f: Weight) -> AtypicalIndex:
    """
    Coordinates (k, n, signs) with f = f_{k;n}^{signs}.

    Args:
        param: Parameter zeta
        f: Atypical rho-shifted weight

    Returns:
        AtypicalIndex: 'o' exactly at the zero coordinates; k = 0 uses n = |x|

    Raises:
        NotAtypicalException: If f is typical
    """
    candidates = _index_candidates(param, f)
    if not candidates:
        raise NotAtypicalException(f"Weight {f.render()} is typical for zeta={param}")
    k, n = candidates[0]
    signs = "".join(_sign_char(c) for c in f)
    return AtypicalIndex(k=k, n=n, signs=signs)


def decode(param: Parameter, k: int, n: int, signs: str) -> Weight:
    """
    f_{k;n}^{signs} = (s1|n|, s2|n + kp|, s3|n - kd|).

    A sign character may be '+' or '-' at a zero coordinate (both readings
    of a degenerate position give the same weight); 'o' is only accepted
    where the coordinate is zero.
    """
    if param.is_generic and k != 0:
        raise HypothesisException(f"Block B_{k} does not exist for generic zeta")
    kp = 0 if param.is_generic else k * param.p
    kd = 0 if param.is_generic else k * param.d
    magnitudes = (abs(n), abs(n + kp), abs(n - kd))

    coords = []
    for char, magnitude in zip(signs, magnitudes):
        if char == "o" and magnitude:
            raise HypothesisException(f"Sign 'o' at nonzero coordinate in f_{{{k};{n}}}^{signs}")
        coords.append(_sign_value(char) * magnitude if char != "o" else 0)
    return Weight(*coords)


def classify_block(param: Parameter, f: Weight) -> BlockId:
    candidates = _index_candidates(param, f)
    if candidates:
        return BlockId.atypical(candidates[0][0])
    return BlockId.typical(tuple(abs(c) for c in f))


def weyl_orbit(f: Weight) -> set[Weight]:
    """All coordinate sign flips of f."""
    return {
        Weight(s1 * f.x, s2 * f.y, s3 * f.z) for s1, s2, s3 in product((1, -1), repeat=3)
    }


def casimir(param: Parameter, weight: tuple[int, int, int]) -> FieldElement:
    """
    Casimir eigenvalue on the Verma module of highest weight lambda.

    c = (lambda + rho, lambda + rho) = -(1+zeta) a^2 + b^2 + zeta c^2 in
    rho-shifted coordinates (a, b, c); equals k^2 (p^2 + pd) on B_k.
    """
    shifted = rho_shift(weight)
    return bilinear_form(shifted, shifted, param.field())


def hc_p_value(param: Parameter, weight: tuple[int, int, int]) -> FieldElement:
    """Product of the pairings of lambda + rho with the four positive odd roots."""
    field = param.field()
    shifted = rho_shift(weight)
    value = field.one()
    for gamma in ODD_POSITIVE:
        value = value * bilinear_form(shifted, gamma, field)
    return value


def mirror(f: Weight) -> Weight:
    """Dynkin diagram symmetry: swap the eps1 and eps2 coordinates."""
    return Weight(f.x, f.z, f.y)


def mirror_parameter(param: Parameter) -> Parameter:
    """zeta -> 1/zeta, the parameter seen through the mirror."""
    if param.is_generic:
        return param
    return Parameter.rational(param.d, param.p)


def sign_patterns(param: Parameter, k: int, n: int) -> list[str]:
    """All sign strings admissible at index (k, n)."""
    kp = 0 if param.is_generic else k * param.p
    kd = 0 if param.is_generic else k * param.d
    magnitudes = (abs(n), abs(n + kp), abs(n - kd))
    choices = [("o",) if m == 0 else ("+", "-") for m in magnitudes]
    return ["".join(chars) for chars in product(*choices)]


def enumerate_block(param: Parameter, k: int, index_range: int) -> list[Weight]:
    """
    Weights of WT_k with |index| <= index_range, every admissible sign pattern.

    WT_0 uses indices 0..index_range.
    """
    if param.is_generic and k != 0:
        raise HypothesisException(f"Block B_{k} does not exist for generic zeta")
    indices = range(0, index_range + 1) if k == 0 else range(-index_range, index_range + 1)
    weights = {
        decode(param, k, n, signs)
        for n in indices
        for signs in sign_patterns(param, k, n)
    }
    return sorted(weights)
