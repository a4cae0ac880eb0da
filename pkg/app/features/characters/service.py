"""
Characters Service

Truncated Verma characters, flag expansion, tensoring with a finite
dimensional module at flag level and projection onto a block. The
translation functor E = pr_b(- (x) V) is modelled on flags only.
"""

from collections import Counter
from fractions import Fraction
from itertools import product

from app.core.exceptions import HypothesisException
from app.core.logging import get_logger
from app.features.characters.schema import TruncatedCharacter, VermaFlag
from app.features.rootdata.service import EVEN_POSITIVE, ODD_POSITIVE
from app.features.weights.schema import BlockId, Parameter, Weight
from app.features.weights.service import classify_block, height, is_atypical, rho_unshift

logger = get_logger(__name__)

Triple = tuple[int, int, int]


def verma_character(f: Weight, max_height: int) -> TruncatedCharacter:
    """
    Character of M_f down to max_height below its highest weight f - rho.

    Expands prod over odd positive roots (1 + e^-beta) times prod over even
    positive roots 1 / (1 - e^-alpha).

    Args:
        f: Rho-shifted highest-weight label
        max_height: Truncation depth in root height

    Returns:
        TruncatedCharacter: Coefficients indexed by actual weights
    """
    if max_height < 0:
        raise HypothesisException(f"Truncation height must be nonnegative, got {max_height}")

    anchor = rho_unshift(f)
    even_heights = [int(height(alpha)) for alpha in EVEN_POSITIVE]
    coefficients: Counter = Counter()

    for odd in product((0, 1), repeat=len(ODD_POSITIVE)):
        depth = [sum(e * beta[i] for e, beta in zip(odd, ODD_POSITIVE)) for i in range(3)]
        odd_height = int(height(tuple(depth)))
        if odd_height > max_height:
            continue
        budget = max_height - odd_height
        for a in range(budget // even_heights[0] + 1):
            for b in range(budget - a * even_heights[0] + 1):
                for c in range(budget - a * even_heights[0] - b + 1):
                    lowered = (depth[0] + 2 * a, depth[1] + 2 * b, depth[2] + 2 * c)
                    coefficients[tuple(x - y for x, y in zip(anchor, lowered))] += 1

    return TruncatedCharacter.of(anchor, max_height, coefficients)


def tensor_flag(flag: VermaFlag, module: list[Triple]) -> VermaFlag:
    """
    Flag of (Verma flag) (x) V, where V is given by its weights with multiplicity.

    M_nu (x) V has a flag by the M_{nu + gamma}, gamma running over the weights of V.
    """
    result: Counter = Counter()
    for f, m in flag:
        for gamma in module:
            result[f.shift(gamma)] += m
    return VermaFlag.of(result)


def project_to_block(param: Parameter, flag: VermaFlag, block: BlockId) -> VermaFlag:
    return VermaFlag.of({f: m for f, m in flag if classify_block(param, f) == block})


def translation_construct(param: Parameter, seed: VermaFlag, module: list[Triple], block: BlockId) -> VermaFlag:
    """
    Flag of E(seed) for the translation functor E = pr_block(- (x) module).

    Args:
        param: Parameter zeta
        seed: Verma flag of the module being translated
        module: Weights with multiplicity of the finite-dimensional module
        block: Target block

    Returns:
        VermaFlag: Projection of the tensored flag onto block
    """
    return project_to_block(param, tensor_flag(seed, module), block)


def _anchor_key(f: Weight) -> tuple:
    return (height(rho_unshift(f)), tuple(f))


def character_of_flag(flag: VermaFlag, max_height: int) -> TruncatedCharacter:
    """
    Sum of the Verma characters of a flag, truncated below its highest member.

    Members lying deeper than max_height below the anchor contribute nothing.
    """
    if not flag:
        return TruncatedCharacter.of((0, 0, 0), max_height, {})

    top = max(flag.support, key=_anchor_key)
    anchor = rho_unshift(top)
    anchor_height = height(anchor)

    total: Counter = Counter()
    for f, m in flag:
        offset = anchor_height - height(rho_unshift(f))
        if offset > max_height:
            continue
        part = verma_character(f, int(Fraction(max_height) - offset))
        for weight, coeff in part.coefficients:
            total[weight] += m * coeff
    return TruncatedCharacter.of(anchor, max_height, total)


def _sl2_factors(c: int) -> tuple[int, ...]:
    return (c, -c) if c > 0 else (c,)


def typical_tilting_flag(param: Parameter, f: Weight) -> VermaFlag:
    """
    Tilting flag in a typical block.

    The block is equivalent to the principal block of a sum of copies of sl2,
    one per nonzero coordinate: T_c = M_c + M_-c for c > 0 and T_c = M_c
    otherwise, multiplied over coordinates.

    Raises:
        HypothesisException: If f is atypical
    """
    if is_atypical(param, f):
        raise HypothesisException(f"{f.render()} is atypical")
    return VermaFlag.of([Weight(*w) for w in product(*(_sl2_factors(c) for c in f))])


def typical_composition_factors(param: Parameter, f: Weight) -> VermaFlag:
    """
    Composition factors of M_f in a typical block, as labels of simples.

    In sl2, M_c has factors L_c and L_-c when c > 0 and is simple otherwise.
    """
    if is_atypical(param, f):
        raise HypothesisException(f"{f.render()} is atypical")
    return VermaFlag.of([Weight(*w) for w in product(*(_sl2_factors(c) for c in f))])
