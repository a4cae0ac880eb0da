"""
Flags Service

Regime dispatch over the closed-form tables, projective flags by duality,
composition factors by BGG reciprocity (closed form and scan), simple
characters by triangular inversion, and the projective-tilting test.
"""

from collections import Counter
from functools import lru_cache
from typing import Optional

from app.core.exceptions import HypothesisException
from app.core.logging import get_logger
from app.core.settings import settings
from app.features.characters.schema import TruncatedCharacter, VermaFlag
from app.features.characters.service import (
    typical_composition_factors,
    typical_tilting_flag,
    verma_character,
)
from app.features.flags import tables
from app.features.flags.schema import Regime
from app.features.weights.schema import AtypicalIndex, Parameter, Weight
from app.features.weights.service import (
    atypical_index,
    decode,
    height,
    is_atypical,
    mirror,
    mirror_parameter,
    rho_unshift,
    sign_patterns,
    weyl_orbit,
)

logger = get_logger(__name__)


def regime_of(param: Parameter, f: Weight) -> Regime:
    """
    Regime governing f.

    Typical weights, then B_0 (and every atypical weight for generic zeta),
    then B_k by the sizes of kp and kd.
    """
    if not is_atypical(param, f):
        return Regime.TYPICAL
    index = atypical_index(param, f)
    if param.is_generic or index.k == 0:
        return Regime.GENERIC_B0
    p, d, k = param.p, param.d, index.k
    if k >= 2 or (p >= 2 and d >= 2):
        return Regime.RATIONAL
    if d == 1 and p >= 2:
        return Regime.KD1
    if p == 1 and d >= 2:
        return Regime.MIRROR
    return Regime.P1D1


def _env(param: Parameter, index: AtypicalIndex) -> dict[str, int]:
    kp = 0 if param.is_generic else index.k * param.p
    kd = 0 if param.is_generic else index.k * param.d
    m = index.n
    return {"m": m, "s": 1 if m > 0 else -1, "kp": kp, "kd": kd}


def _realize(param: Parameter, index: AtypicalIndex, text: str) -> VermaFlag:
    env = _env(param, index)
    counts: Counter = Counter()
    for mult, expr, signs in tables.parse_terms(text):
        counts[decode(param, index.k, tables.resolve_index(expr, env), signs)] += mult
    return VermaFlag.of(counts)


def _lookup(family: dict[str, dict[str, str]], key: str, signs: str) -> Optional[str]:
    return family.get(key, {}).get(signs)


def _generic_tilting_text(index: AtypicalIndex) -> str:
    table = tables.GENERIC_TILTING.get((index.n, index.signs))
    return table or tables.regular_tilting(index.signs)


Row = tuple[str, str]

TILTING_FAMILIES = {
    "rational": tables.RATIONAL_TILTING,
    "kd1": tables.KD1_TILTING,
    "p1d1": tables.P1D1_TILTING,
}


def _rational_tilting_row(index: AtypicalIndex, env: dict[str, int]) -> Optional[Row]:
    m, kp, kd, signs = index.n, env["kp"], env["kd"], index.signs
    special = {0: "0", -kp: "-kp", kd: "kd"}
    if m in special:
        return "rational", special[m]
    if signs[0] == "-":
        if m == 1 - kp:
            return "rational", "1-kp"
        if m == kd - 1:
            return "rational", "kd-1"
    else:
        if m in (1, -1):
            return "rational", "pm1"
        if m == -1 - kp:
            return "rational", "-1-kp"
        if m == kd + 1:
            return "rational", "kd+1"
    return None


def _kd1_tilting_row(index: AtypicalIndex, env: dict[str, int]) -> Optional[Row]:
    m, kp, signs = index.n, env["kp"], index.signs
    if m in (0, 1):
        return "kd1", str(m)
    if m == 2 and signs[0] == "+":
        return "kd1", "2"
    if m == -kp:
        return "rational", "-kp"
    if signs[0] == "-" and m == 1 - kp:
        return "rational", "1-kp"
    if signs[0] == "+" and m == -1:
        return "rational", "pm1"
    if signs[0] == "+" and m == -1 - kp:
        return "rational", "-1-kp"
    return None


def _p1d1_tilting_row(index: AtypicalIndex) -> Optional[Row]:
    m, signs = index.n, index.signs
    if m in (0, -1):
        return "p1d1", str(m)
    if m == 1:
        return "kd1", "1"
    if m == 2 and signs[0] == "+":
        return "kd1", "2"
    if m == -2 and signs[0] == "+":
        return "p1d1", "-2"
    return None


def _tilting_row(param: Parameter, index: AtypicalIndex, regime: Regime) -> Optional[Row]:
    """Table row of a rational-parameter head, or None for the regular pattern."""
    if regime is Regime.RATIONAL:
        return _rational_tilting_row(index, _env(param, index))
    if regime is Regime.KD1:
        return _kd1_tilting_row(index, _env(param, index))
    return _p1d1_tilting_row(index)


@lru_cache(maxsize=4096)
def tilting_flag(param: Parameter, f: Weight) -> VermaFlag:
    """
    Verma flag of the tilting module T_f.

    Args:
        param: Parameter zeta
        f: Rho-shifted weight

    Returns:
        VermaFlag: Closed-form flag of the regime matching f
    """
    f = Weight(*f)
    regime = regime_of(param, f)
    if regime is Regime.TYPICAL:
        return typical_tilting_flag(param, f)
    if regime is Regime.MIRROR:
        return tilting_flag(mirror_parameter(param), mirror(f)).mirrored()

    index = atypical_index(param, f)
    if regime is Regime.GENERIC_B0:
        text = _generic_tilting_text(index)
    else:
        row = _tilting_row(param, index, regime)
        if row is None:
            text = tables.regular_tilting(index.signs)
        else:
            text = TILTING_FAMILIES[row[0]][row[1]][index.signs]
    return _realize(param, index, text)


def translation_split(param: Parameter, f: Weight) -> VermaFlag:
    """
    Tilting summands besides T_f in the translation of T_f's documented seed.

    Empty for every head outside ``tables.TRANSLATION_SPLITS``. B_0 heads
    read the "generic" rows for generic zeta, where the seed goes through
    L121, and the "b0" rows otherwise.
    """
    f = Weight(*f)
    regime = regime_of(param, f)
    if regime is Regime.TYPICAL:
        return VermaFlag.of({})
    if regime is Regime.MIRROR:
        return translation_split(mirror_parameter(param), mirror(f)).mirrored()

    index = atypical_index(param, f)
    if regime is Regime.GENERIC_B0:
        row = ("generic" if param.is_generic else "b0", str(index.n))
    else:
        row = _tilting_row(param, index, regime)
    text = None if row is None else _lookup(tables.TRANSLATION_SPLITS.get(row[0], {}), row[1], index.signs)
    return _realize(param, index, text) if text else VermaFlag.of({})


def projective_flag(param: Parameter, f: Weight) -> VermaFlag:
    """(P_f : M_g) = (T_-f : M_-g)."""
    return tilting_flag(param, -Weight(*f)).negated()


def _generic_composition_text(index: AtypicalIndex) -> str:
    table = tables.GENERIC_COMPOSITION.get((index.n, index.signs))
    if table:
        return table
    text = tables.regular_composition(index.signs)
    if index.n == 2 and index.signs == "+++":
        text += " + 1:-++"
    return text


def _rational_composition_text(index: AtypicalIndex, env: dict[str, int]) -> str:
    m, kp, kd, signs = index.n, env["kp"], env["kd"], index.signs
    family = tables.RATIONAL_COMPOSITION
    for key, value in (("0", 0), ("kd", kd), ("-kp", -kp), ("kd-1", kd - 1), ("kd+1", kd + 1),
                       ("1-kp", 1 - kp), ("-1-kp", -1 - kp)):
        if m == value:
            return _lookup(family, key, signs) or tables.regular_composition(signs)
    return tables.regular_composition(signs)


def _kd1_composition_text(index: AtypicalIndex, env: dict[str, int]) -> str:
    m, kp, signs = index.n, env["kp"], index.signs
    family = tables.RATIONAL_COMPOSITION
    if m == 0:
        return tables.KD1_COMPOSITION["0"][signs]
    for key, value in (("kd", 1), ("-kp", -kp), ("kd+1", 2), ("1-kp", 1 - kp), ("-1-kp", -1 - kp)):
        if m == value:
            return _lookup(family, key, signs) or tables.regular_composition(signs)
    return tables.regular_composition(signs)


def _p1d1_composition_text(index: AtypicalIndex) -> str:
    m, signs = index.n, index.signs
    family = tables.RATIONAL_COMPOSITION
    if m == 0:
        return tables.P1D1_COMPOSITION["0"][signs]
    for key, value in (("kd", 1), ("-kp", -1), ("kd+1", 2), ("-1-kp", -2)):
        if m == value:
            return _lookup(family, key, signs) or tables.regular_composition(signs)
    return tables.regular_composition(signs)


@lru_cache(maxsize=4096)
def composition_factors(param: Parameter, f: Weight) -> VermaFlag:
    """
    Composition series of M_f as a multiset of simple labels, from the tables.

    Returns:
        VermaFlag: Label g with multiplicity [M_f : L_g]
    """
    f = Weight(*f)
    regime = regime_of(param, f)
    if regime is Regime.TYPICAL:
        return typical_composition_factors(param, f)
    if regime is Regime.MIRROR:
        return composition_factors(mirror_parameter(param), mirror(f)).mirrored()

    index = atypical_index(param, f)
    env = _env(param, index)
    if regime is Regime.GENERIC_B0:
        text = _generic_composition_text(index)
    elif regime is Regime.RATIONAL:
        text = _rational_composition_text(index, env)
    elif regime is Regime.KD1:
        text = _kd1_composition_text(index, env)
    else:
        text = _p1d1_composition_text(index)
    return _realize(param, index, text)


def scan_candidates(param: Parameter, f: Weight, radius: int) -> list[Weight]:
    """Weights of f's block whose index lies within radius of f's, every sign pattern."""
    if not is_atypical(param, f):
        return sorted(weyl_orbit(f))
    index = atypical_index(param, f)
    low, high = index.n - radius, index.n + radius
    if index.k == 0:
        low = max(0, low)
    found = {
        decode(param, index.k, m, signs)
        for m in range(low, high + 1)
        for signs in sign_patterns(param, index.k, m)
    }
    return sorted(found)


def composition_factors_scan(param: Parameter, f: Weight, radius: Optional[int] = None) -> VermaFlag:
    """[M_f : L_g] = (P_g : M_f) over the candidate window around f."""
    radius = settings.scan_radius if radius is None else radius
    f = Weight(*f)
    counts = {}
    for g in scan_candidates(param, f, radius):
        mult = projective_flag(param, g).multiplicity(f)
        if mult:
            counts[g] = mult
    return VermaFlag.of(counts)


def composition(param: Parameter, f: Weight, method: str = "closed") -> VermaFlag:
    if method == "scan":
        return composition_factors_scan(param, f)
    return composition_factors(param, f)


@lru_cache(maxsize=2048)
def _simple_counts(param: Parameter, f: Weight, max_height: int) -> tuple[tuple[tuple[int, int, int], int], ...]:
    top = height(rho_unshift(f))
    total = Counter(verma_character(f, max_height).as_dict())
    for g, mult in composition_factors(param, f):
        if g == f:
            continue
        offset = top - height(rho_unshift(g))
        if offset <= 0:
            raise HypothesisException(f"Composition factor {g.render()} of M_{f.render()} is not below it")
        if offset > max_height:
            continue
        for weight, coeff in _simple_counts(param, g, int(max_height - offset)):
            total[weight] -= mult * coeff
    return tuple(sorted((w, c) for w, c in total.items() if c))


def simple_character(param: Parameter, f: Weight, max_height: int) -> TruncatedCharacter:
    """
    Character of L_f truncated at max_height, by inverting [M : L].

    ch L_f = ch M_f - sum over g != f of [M_f : L_g] ch L_g, where factors
    lying deeper than the window contribute nothing.
    """
    f = Weight(*f)
    return TruncatedCharacter.of(rho_unshift(f), max_height, dict(_simple_counts(param, f, max_height)))


def is_projective_tilting(param: Parameter, f: Weight) -> Optional[Weight]:
    """
    Label g with T_f = P_g, or None for typical f and when no such g exists.

    P_g has M_g at the bottom of its flag, so every weight of the flag of T_f
    is a candidate; each one is compared flag against flag.
    """
    f = Weight(*f)
    if not is_atypical(param, f):
        return None
    flag = tilting_flag(param, f)
    for g in flag.support:
        if projective_flag(param, g) == flag:
            return g
    return None


def decompose_into_tiltings(param: Parameter, flag: VermaFlag) -> Optional[VermaFlag]:
    """
    Write a Verma flag as a sum of tilting flags.

    Repeatedly removes the tilting flag headed by the highest remaining
    weight (ties broken lexicographically).

    Returns:
        VermaFlag: Tilting labels with multiplicity, or None when some
        multiplicity would turn negative
    """
    remainder = flag
    summands: Counter = Counter()
    while remainder:
        if not remainder.is_effective:
            return None
        head, mult = max(remainder, key=lambda item: (height(rho_unshift(item[0])), tuple(item[0])))
        summands[head] += mult
        remainder = remainder.minus(tilting_flag(param, head).scaled(mult))
    return VermaFlag.of(summands)
