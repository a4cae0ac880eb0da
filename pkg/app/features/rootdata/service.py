"""
Root Data Service

Root datum, bilinear form, coroot pairings, cached bracket tables,
the exhaustive super-Jacobi check and the weights of the finite-dimensional
modules used as translation functors.
"""

from collections import Counter
from functools import lru_cache
from itertools import product

from app.core.exceptions import HypothesisException, UnknownModuleException
from app.core.logging import get_logger
from app.features.exactalg.schema import Field, FieldElement
from app.features.rootdata.bootstrap import build_structure_table, simple_coroots, super_sign
from app.features.rootdata.lincomb import combo_add
from app.features.rootdata.schema import (
    BY_LABEL,
    CARTAN,
    LABELS,
    FormWeight,
    JacobiFailure,
    JacobiReport,
    LinearCombination,
    RootDatum,
    StructureTable,
)

logger = get_logger(__name__)

Triple = tuple[int, int, int]

EVEN_POSITIVE: tuple[Triple, ...] = ((2, 0, 0), (0, 2, 0), (0, 0, 2))
ODD_POSITIVE: tuple[Triple, ...] = ((1, -1, -1), (1, 1, -1), (1, -1, 1), (1, 1, 1))
RHO: Triple = (-1, 1, 1)


def root_datum(field: Field) -> RootDatum:
    """Root datum with rho recomputed from the half-sums of positive roots."""
    rho0 = tuple(sum(r[i] for r in EVEN_POSITIVE) // 2 for i in range(3))
    rho1 = tuple(sum(r[i] for r in ODD_POSITIVE) // 2 for i in range(3))
    rho = tuple(a - b for a, b in zip(rho0, rho1))
    if rho != RHO:
        raise HypothesisException(f"rho recomputed as {rho}, expected {RHO}")

    return RootDatum(
        simple_roots=((1, -1, -1), (0, 2, 0), (0, 0, 2)),
        even_positive=EVEN_POSITIVE,
        odd_positive=ODD_POSITIVE,
        rho=RHO,
        simple_coroots=simple_coroots(field),
    )


def bilinear_form(mu: FormWeight | Triple, nu: FormWeight | Triple, field: Field) -> FieldElement:
    """(mu, nu) with (delta, delta) = -(1+zeta), (eps1, eps1) = 1, (eps2, eps2) = zeta."""
    zeta = field.zeta()
    a1, b1, c1 = (field.coerce(v) if isinstance(v, int) else v for v in mu)
    a2, b2, c2 = (field.coerce(v) if isinstance(v, int) else v for v in nu)
    return -(1 + zeta) * a1 * a2 + b1 * b2 + zeta * c1 * c2


def coroot_pairing(weight: FormWeight | Triple, gamma: Triple) -> int | FieldElement:
    """
    Pairing of a weight with the coroot of a positive even root.

    Args:
        weight: Coefficients (a, b, c) of delta, eps1, eps2
        gamma: One of 2delta, 2eps1, 2eps2

    Returns:
        The coefficient of delta, eps1 or eps2 respectively

    Raises:
        HypothesisException: If gamma is not a positive even root
    """
    if gamma not in EVEN_POSITIVE:
        raise HypothesisException(f"{gamma} is not a positive even root")
    return weight[EVEN_POSITIVE.index(gamma)]


@lru_cache(maxsize=None)
def get_structure_table(field: Field) -> StructureTable:
    """Bracket table over field, built once per field."""
    return build_structure_table(field)


def bracket_combos(table: StructureTable, u: LinearCombination, v: LinearCombination) -> LinearCombination:
    result: LinearCombination = {}
    for x, cx in u.items():
        for y, cy in v.items():
            result = combo_add(result, table.bracket(x, y), cx * cy)
    return result


def check_jacobi(table: StructureTable) -> JacobiReport:
    """
    Evaluate the super-Jacobi identity on all 17^3 ordered triples.

    J(x, y, z) = [x, [y, z]] - [[x, y], z] - (-1)^{|x||y|} [y, [x, z]]

    Args:
        table: Bracket table to check

    Returns:
        JacobiReport: Counts and the failing triples with their residuals
    """
    failures: list[JacobiFailure] = []
    one = table.field.one()

    for x, y, z in product(LABELS, repeat=3):
        vx, vy, vz = {x: one}, {y: one}, {z: one}
        residual = bracket_combos(table, vx, table.bracket(y, z))
        residual = combo_add(residual, bracket_combos(table, table.bracket(x, y), vz), -1)
        residual = combo_add(residual, bracket_combos(table, vy, table.bracket(x, z)), -super_sign(x, y))
        if residual:
            failures.append(
                JacobiFailure(
                    triple=(x, y, z),
                    residual={k: table.field.render(v) for k, v in residual.items()},
                )
            )

    total = len(LABELS) ** 3
    report = JacobiReport(
        field=table.field.describe(),
        total=total,
        passed=total - len(failures),
        failed=len(failures),
        failures=failures,
    )

    if failures:
        logger.warning(f"⚠️ Super-Jacobi fails on {len(failures)} triples ({report.field})")
    else:
        logger.info(f"✅ Super-Jacobi holds on all {total} triples ({report.field})")
    return report


def check_emergent_relations(table: StructureTable) -> list[str]:
    """
    Relations that are consequences of the table rather than inputs.

    Checks that odd root vectors square to zero, that the simple coroots
    reproduce the Cartan matrix and that [e_2d, f_2d] = -h_2d. The sign is
    forced by f_2d = [[f0, f1], [f0, f2]] together with
    e_2d = (1+zeta)^-2 [[e0, e1], [e0, e2]].

    Returns:
        list: Human-readable description of every violated relation
    """
    field = table.field
    zeta = field.zeta()
    issues = []

    for label in LABELS:
        element = BY_LABEL[label]
        if element.parity and table.bracket(label, label):
            issues.append(f"[{label}, {label}] is nonzero")

    expected_rows = (
        (0, 1, zeta),
        (-1, 2, 0),
        (-1, 0, 2),
    )
    simple = ("e0", "e1", "e2")
    for i, row in enumerate(expected_rows):
        coroot = table.bracket(f"e{i}", f"f{i}")
        for j, expected in enumerate(row):
            weight = BY_LABEL[simple[j]].weight
            value = sum(
                (coeff * weight[CARTAN.index(h)] for h, coeff in coroot.items()),
                field.zero(),
            )
            target = field.coerce(expected) if isinstance(expected, int) else expected
            if value != target:
                issues.append(f"<alpha_{j}, alpha_{i}^v> = {field.render(value)}")

    if table.bracket("e_2d", "f_2d") != {"h_2d": -field.one()}:
        issues.append("[e_2d, f_2d] != -h_2d")

    return issues


def specialize_table(table: StructureTable, p: int, d: int) -> StructureTable:
    """Map every coefficient of a generic table to zeta = p/d."""
    target = Field.rational(p, d)
    brackets = {}
    for key, combo in table.brackets.items():
        specialized = {label: target.coerce(coeff) for label, coeff in combo.items()}
        brackets[key] = {label: c for label, c in specialized.items() if c}
    return StructureTable(field=target, brackets=brackets)


def adjoint_weights() -> list[Triple]:
    return sorted(BY_LABEL[label].weight for label in LABELS)


def l121_weights() -> list[Triple]:
    weights: list[Triple] = []
    for s1, s2 in product((1, -1), repeat=2):
        weights.append((2 * s1, s2, 0))
        weights.append((s1, 0, s2))
        weights.append((s1, 0, s2))
        weights.append((0, s1, 2 * s2))
    for s1, s2, s3 in product((1, -1), repeat=3):
        weights.append((s1, 2 * s2, s3))
    for s in (1, -1):
        weights.append((0, 3 * s, 0))
    weights.extend([(0, 1, 0)] * 3 + [(0, -1, 0)] * 3)
    return sorted(weights)


def quasinatural_weights(p: int) -> list[Triple]:
    if p < 1:
        raise UnknownModuleException(f"quasinatural({p})")
    weights: list[Triple] = []
    for i in range(p):
        weights.append((1, p - 1 - 2 * i, 0))
        weights.append((-1, p - 1 - 2 * i, 0))
    for j in range(p + 1):
        weights.append((0, p - 2 * j, 1))
        weights.append((0, p - 2 * j, -1))
    return sorted(weights)


def module_weights(name: str) -> list[Triple]:
    """
    Weights, with multiplicity, of a finite-dimensional module.

    Args:
        name: "adjoint", "L121" or "quasinatural(p)"

    Returns:
        list: Sorted integer weights (delta, eps1, eps2), repeated by multiplicity

    Raises:
        UnknownModuleException: For any other name
    """
    if name == "adjoint":
        return adjoint_weights()
    if name == "L121":
        return l121_weights()
    if name.startswith("quasinatural(") and name.endswith(")"):
        try:
            p = int(name[len("quasinatural("):-1])
        except ValueError:
            raise UnknownModuleException(name)
        return quasinatural_weights(p)
    raise UnknownModuleException(name)


def weight_multiplicities(weights: list[Triple]) -> Counter:
    return Counter(weights)
