"""
Explicit singular vectors.

Odd reflections: for an odd positive root gamma with (f, gamma) = 0 the
vector of weight (f - rho) - gamma is written down directly from the
bracket table. Even reflections: powers of a simple f for 2eps1 and
2eps2, and for 2delta the vector obtained by raising f_2d^{n+2} v+ with
the four odd e's. The six-term closed form of the 2delta vector is only
used as a comparison in ``expansion_check``.
"""

from app.core.exceptions import HypothesisException
from app.core.logging import get_logger
from app.core.settings import settings
from app.features.exactalg.linalg import rank
from app.features.exactalg.schema import Field, FieldElement, SparseMatrix
from app.features.rootdata.lincomb import combo_add
from app.features.rootdata.schema import BY_WEIGHT, LinearCombination
from app.features.rootdata.service import EVEN_POSITIVE, ODD_POSITIVE, bilinear_form
from app.features.verma.schema import PBW_ORDER, UNIT, ExpansionReport, SingularCheck, VermaVector
from app.features.verma.service import VermaModule, get_verma_module, monomial_height, render_monomial
from app.features.weights.schema import Weight

logger = get_logger(__name__)

Triple = tuple[int, int, int]

ALPHA0, PLUS_MINUS, MINUS_PLUS, PLUS_PLUS = ODD_POSITIVE
TWO_DELTA, TWO_EPS1, TWO_EPS2 = EVEN_POSITIVE

# raising word applied to f_2d^{n+2} v+, leftmost letter acts last
TWO_DELTA_WORD = ["e0", "e_pm", "e_pp", "e_mp"]


def root_name(gamma: Triple) -> str:
    """Label of the positive root vector of gamma."""
    return BY_WEIGHT[gamma]


def _module(field: Field, f: Weight, window: int | None) -> VermaModule:
    return get_verma_module(field, f, settings.verma_window if window is None else window)


def _apply_combo(module: VermaModule, combo: LinearCombination, v: VermaVector) -> VermaVector:
    """Act on v by a linear combination of basis elements."""
    coeffs: dict = {}
    for label, coeff in combo.items():
        coeffs = combo_add(coeffs, module.act(label, v).coeffs, coeff)
    return module.vector(coeffs)


def _add(module: VermaModule, *terms: tuple[FieldElement | int, VermaVector]) -> VermaVector:
    coeffs: dict = {}
    for scale, v in terms:
        coeffs = combo_add(coeffs, v.coeffs, scale)
    return module.vector(coeffs)


def odd_reflection_vector(field: Field, f: Weight, gamma: Triple, window: int | None = None) -> VermaVector:
    """
    Singular vector of weight (f - rho) - gamma for an odd positive root gamma.

    The coefficients B and C are the eps1 and eps2 coordinates of the highest
    weight f - rho.

    Args:
        field: Scalar field
        f: Rho-shifted highest-weight label
        gamma: Odd positive root
        window: Truncation window (defaults to settings.verma_window)

    Raises:
        HypothesisException: If gamma is not odd positive or (f, gamma) != 0
    """
    if gamma not in ODD_POSITIVE:
        raise HypothesisException(f"{gamma} is not an odd positive root")
    if bilinear_form(f, gamma, field):
        raise HypothesisException(f"(f, gamma) != 0 for f={tuple(f)}, gamma={gamma}")

    module = _module(field, f, window)
    table = module.table
    v = module.highest_vector()
    b = field.coerce(module.top[1])
    c = field.coerce(module.top[2])

    if gamma == ALPHA0:
        return module.apply_word(["f0"], v)

    if gamma == PLUS_MINUS:
        return _add(
            module,
            (1, module.apply_word(["f0", "f1"], v)),
            (b, _apply_combo(module, table.bracket("f0", "f1"), v)),
        )

    if gamma == MINUS_PLUS:
        return _add(
            module,
            (1, module.apply_word(["f0", "f2"], v)),
            (c, _apply_combo(module, table.bracket("f0", "f2"), v)),
        )

    f0_f1 = table.bracket("f0", "f1")
    f0_f2 = table.bracket("f0", "f2")
    f1_f0_f2: LinearCombination = {}
    for label, coeff in f0_f2.items():
        f1_f0_f2 = combo_add(f1_f0_f2, table.bracket("f1", label), coeff)

    return _add(
        module,
        (1, module.apply_word(["f0", "f1", "f2"], v)),
        (b, module.act("f2", _apply_combo(module, f0_f1, v))),
        (c, module.act("f1", _apply_combo(module, f0_f2, v))),
        (-(b + c + b * c), _apply_combo(module, f1_f0_f2, v)),
    )


def even_reflection_vector(field: Field, f: Weight, gamma: Triple, window: int | None = None) -> VermaVector:
    """
    Singular vector of weight (f - rho) - n*gamma for an even positive root gamma.

    n is the matching coordinate of f. For 2eps1 and 2eps2 the vector is
    f1^n v+ or f2^n v+; for 2delta it is e0 e_pm e_pp e_mp f_2d^{n+2} v+.

    Raises:
        HypothesisException: If n is negative or gamma is not even positive
    """
    if gamma not in EVEN_POSITIVE:
        raise HypothesisException(f"{gamma} is not an even positive root")
    n = f[EVEN_POSITIVE.index(gamma)]
    if n < 0:
        raise HypothesisException(f"<f, h_gamma> = {n} is not a nonnegative integer")

    module = _module(field, f, window)
    if gamma != TWO_DELTA:
        slot = PBW_ORDER.index("f1" if gamma == TWO_EPS1 else "f2")
        mono = list(UNIT)
        mono[slot] = n
        return module.vector({tuple(mono): field.one()})

    start = module.apply_word(["f_2d"] * (n + 2))
    return module.apply_word(TWO_DELTA_WORD, start)


def reflection_vector(field: Field, f: Weight, gamma: Triple, window: int | None = None) -> VermaVector:
    if gamma in ODD_POSITIVE:
        return odd_reflection_vector(field, f, gamma, window)
    return even_reflection_vector(field, f, gamma, window)


def in_span(field: Field, vectors: list[VermaVector], v: VermaVector) -> bool:
    """True iff v lies in the span of vectors (all of one weight)."""
    monos = sorted({m for u in [*vectors, v] for m in u.coeffs})
    index = {m: j for j, m in enumerate(monos)}

    def stacked(rows: list[VermaVector]) -> SparseMatrix:
        matrix = SparseMatrix(rows=len(rows), cols=len(monos), field=field)
        for i, u in enumerate(rows):
            for m, coeff in u.coeffs.items():
                matrix.set(i, index[m], coeff)
        return matrix

    return rank(stacked([*vectors, v])) == rank(stacked(vectors))


def check_reflection(
    field: Field, f: Weight, gamma: Triple, window: int | None = None, max_space_height: int | None = None
) -> SingularCheck:
    """
    Construct the reflection vector and compare it with the brute-force singular space.

    The singular space is only solved for when the depth of the vector is at
    most max_space_height; otherwise in_singular_space is left unset.
    """
    module = _module(field, f, window)
    v = reflection_vector(field, f, gamma, window)
    n = f[EVEN_POSITIVE.index(gamma)] if gamma in EVEN_POSITIVE else None

    in_space = None
    if v:
        mono = next(iter(v.coeffs))
        if max_space_height is None or monomial_height(mono) <= max_space_height:
            space = module.singular_space(module.monomial_weight(mono))
            in_space = in_span(field, space, v)
    return SingularCheck(
        highest=tuple(f),
        root=root_name(gamma),
        n=n,
        nonzero=bool(v),
        singular=module.is_singular(v),
        in_singular_space=in_space if v else False,
    )


def two_delta_closed_form(field: Field, f: Weight, window: int | None = None) -> VermaVector:
    """
    Six-term expansion of the 2delta singular vector in PBW words.

    With n = x and b, c the eps coordinates of f, put
        2beta  = n(1+zeta) + b + zeta c
        2theta = n(1+zeta) + b - zeta c
        2eta   = n(1+zeta) - 2 zeta + b - zeta c
    and sum
        - beta theta f_2d^n
        + n(1+zeta) beta f_pm f_mp f_2d^{n-1}
        + n(1+zeta) eta f_pp f0 f_2d^{n-1}
        + n(1+zeta) f1 f0 f_mp f_2d^{n-1}
        - n zeta(1+zeta) f2 f0 f_pm f_2d^{n-1}
        - (1+zeta)^2 n(n-1) f_pp f0 f_pm f_mp f_2d^{n-2}
    applied to v+. The coefficients assume the composite root vectors of
    the bracket table: f_pm = [f0, f1], f_mp = [f0, f2],
    f_pp = [[f1, f0], f2] and f_2d = [f_pm, f_mp].
    """
    n, b, c = f
    if n < 1:
        raise HypothesisException(f"closed form needs n >= 1, got {n}")

    module = _module(field, f, window)
    zeta = field.zeta()
    one_zeta = 1 + zeta
    half = field.coerce(1) / 2
    lead = n * one_zeta

    beta = (lead + b + zeta * c) * half
    theta = (lead + b - zeta * c) * half
    eta = (lead - 2 * zeta + b - zeta * c) * half

    tail = ["f_2d"] * (n - 1)
    terms = [
        (-(beta * theta), module.apply_word(["f_2d"] * n)),
        (lead * beta, module.apply_word(["f_pm", "f_mp", *tail])),
        (lead * eta, module.apply_word(["f_pp", "f0", *tail])),
        (lead, module.apply_word(["f1", "f0", "f_mp", *tail])),
        (-(lead * zeta), module.apply_word(["f2", "f0", "f_pm", *tail])),
    ]
    if n >= 2:
        terms.append(
            (-one_zeta * one_zeta * n * (n - 1), module.apply_word(["f_pp", "f0", "f_pm", "f_mp", *tail[1:]]))
        )
    return _add(module, *terms)


def expansion_check(field: Field, f: Weight, window: int | None = None) -> ExpansionReport:
    """
    Compare the straightened 2delta vector with its closed form.

    Both vectors are checked for singularity; a disagreement is reported
    monomial by monomial after normalizing each vector.
    """
    module = _module(field, f, window)
    constructed = even_reflection_vector(field, f, TWO_DELTA, window)
    oracle = two_delta_closed_form(field, f, window)

    left = constructed.normalized()
    right = oracle.normalized()
    mismatched = sorted(
        render_monomial(m)
        for m in set(left.coeffs) | set(right.coeffs)
        if left.coeffs.get(m, 0) != right.coeffs.get(m, 0)
    )

    proportional = bool(constructed) and bool(oracle) and not mismatched
    scalar = None
    if proportional:
        lead = min(constructed.coeffs)
        scalar = field.render(constructed.coeffs[lead] / oracle.coeffs[lead])
    logger.debug(f"2delta expansion at f={tuple(f)}: proportional={proportional}, scalar={scalar}")

    return ExpansionReport(
        highest=tuple(f),
        n=f[0],
        proportional=proportional,
        scalar=scalar,
        constructed_singular=module.is_singular(constructed),
        oracle_singular=module.is_singular(oracle),
        mismatched_monomials=mismatched,
    )
