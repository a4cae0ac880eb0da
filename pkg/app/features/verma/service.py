"""
Verma Module Service

Truncated Verma modules M_f over one field. Vectors are combinations of
PBW monomials in the negative root vectors applied to the highest weight
vector; the action of a basis element is computed by straightening

    x y rest = (-1)^{|x||y|} y (x rest) + [x, y] rest

against the bracket table, with memoization per (element, monomial).
"""

from functools import lru_cache
from itertools import product

from app.core.exceptions import WindowOverflowException
from app.core.logging import get_logger
from app.core.settings import settings
from app.features.exactalg.linalg import nullspace, rref
from app.features.exactalg.schema import Field, FieldElement, SparseMatrix
from app.features.rootdata.bootstrap import cartan_pairing, super_sign
from app.features.rootdata.lincomb import combo_add
from app.features.rootdata.schema import BY_LABEL, CARTAN, RAISING, StructureTable
from app.features.rootdata.service import get_structure_table
from app.features.verma.schema import (
    ODD_SLOTS,
    PBW_ORDER,
    SLOT_HEIGHTS,
    UNIT,
    PBWMonomial,
    VermaVector,
)
from app.features.weights.schema import Weight
from app.features.weights.service import height, rho_unshift

logger = get_logger(__name__)

Triple = tuple[int, int, int]
MonoCombo = dict[PBWMonomial, FieldElement]

SLOT_OF: dict[str, int] = {label: i for i, label in enumerate(PBW_ORDER)}
# positive root of each PBW slot
SLOT_ROOTS: tuple[Triple, ...] = tuple(
    tuple(-c for c in BY_LABEL[label].weight) for label in PBW_ORDER
)


def monomial_height(mono: PBWMonomial) -> int:
    return sum(e * h for e, h in zip(mono, SLOT_HEIGHTS))


def render_monomial(mono: PBWMonomial) -> str:
    parts = []
    for label, e in zip(PBW_ORDER, mono):
        if e == 1:
            parts.append(label)
        elif e > 1:
            parts.append(f"{label}^{e}")
    return " ".join(parts) or "1"


class VermaModule:
    """
    Verma module M_f truncated at a height window below its highest weight.

    Args:
        field: Scalar field of the computation
        highest: Rho-shifted label f; the highest weight is f - rho
        window: Maximum PBW height of any vector that may be formed
    """

    def __init__(self, field: Field, highest: Weight, window: int | None = None):
        self.field = field
        self.highest = highest
        self.window = settings.verma_window if window is None else window
        self.table: StructureTable = get_structure_table(field)
        self.top: Triple = rho_unshift(highest)
        self._cache: dict[tuple[str, PBWMonomial], MonoCombo] = {}

    # Weights

    def monomial_weight(self, mono: PBWMonomial) -> Triple:
        return tuple(
            self.top[i] - sum(e * root[i] for e, root in zip(mono, SLOT_ROOTS)) for i in range(3)
        )

    def vector(self, coeffs: MonoCombo) -> VermaVector:
        return VermaVector(self.highest, {m: c for m, c in coeffs.items() if c})

    def highest_vector(self) -> VermaVector:
        return self.vector({UNIT: self.field.one()})

    # Basis

    def weight_space_basis(self, weight: Triple) -> list[PBWMonomial]:
        """
        All PBW monomials of the given actual weight, in descending order.

        Raises:
            WindowOverflowException: If the weight lies below the window
        """
        depth = tuple(a - b for a, b in zip(self.top, weight))
        depth_height = height(depth)
        if depth_height < 0 or depth_height.denominator != 1:
            return []
        if depth_height > self.window:
            raise WindowOverflowException(int(depth_height), self.window)

        basis = []
        for odd in product((0, 1), repeat=len(ODD_SLOTS)):
            remainder = list(depth)
            for slot, e in zip(sorted(ODD_SLOTS), odd):
                if e:
                    remainder = [r - s for r, s in zip(remainder, SLOT_ROOTS[slot])]
            if any(r < 0 or r % 2 for r in remainder):
                continue
            a, b, c = (r // 2 for r in remainder)
            basis.append((a, *odd, b, c))
        return sorted(basis, reverse=True)

    # Action

    def _act_mono(self, x: str, mono: PBWMonomial) -> MonoCombo:
        key = (x, mono)
        cached = self._cache.get(key)
        if cached is not None:
            return cached

        result = self._straighten(x, mono)
        self._cache[key] = result
        return result

    def _straighten(self, x: str, mono: PBWMonomial) -> MonoCombo:
        if x in CARTAN:
            value = cartan_pairing(self.monomial_weight(mono), x)
            return {mono: self.field.coerce(value)} if value else {}

        slot = SLOT_OF.get(x)
        if mono == UNIT:
            if slot is None:
                return {}
            unit = list(UNIT)
            unit[slot] = 1
            return {tuple(unit): self.field.one()}

        first = next(i for i, e in enumerate(mono) if e)
        if slot is not None and slot <= first:
            if slot == first and slot in ODD_SLOTS:
                return {}
            raised = list(mono)
            raised[slot] += 1
            return {tuple(raised): self.field.one()}

        y = PBW_ORDER[first]
        rest = list(mono)
        rest[first] -= 1
        rest = tuple(rest)

        result: MonoCombo = {}
        moved = self._act_combo(y, self._act_mono(x, rest))
        result = combo_add(result, moved, super_sign(x, y))
        for z, coeff in self.table.bracket(x, y).items():
            result = combo_add(result, self._act_mono(z, rest), coeff)
        return result

    def _act_combo(self, x: str, combo: MonoCombo) -> MonoCombo:
        result: MonoCombo = {}
        for mono, coeff in combo.items():
            result = combo_add(result, self._act_mono(x, mono), coeff)
        return result

    def act(self, x: str, v: VermaVector) -> VermaVector:
        """
        Action of a basis element on a homogeneous vector.

        Raises:
            WindowOverflowException: If the result would leave the window
        """
        if not v.coeffs:
            return self.vector({})
        source_height = monomial_height(next(iter(v.coeffs)))
        target_height = source_height - int(height(BY_LABEL[x].weight))
        if target_height > self.window:
            raise WindowOverflowException(target_height, self.window)
        return self.vector(self._act_combo(x, v.coeffs))

    def apply_word(self, word: list[str], v: VermaVector | None = None) -> VermaVector:
        """Apply x_1 x_2 ... x_k to v (default v+), rightmost letter first."""
        v = self.highest_vector() if v is None else v
        for x in reversed(word):
            v = self.act(x, v)
        return v

    # Singular vectors

    def is_singular(self, v: VermaVector) -> bool:
        return bool(v) and all(not self.act(e, v) for e in RAISING)

    def singular_space(self, weight: Triple) -> list[VermaVector]:
        """
        Basis of the vectors of the given weight killed by e0, e1, e2.

        Each vector is normalized so its first PBW coefficient is 1.
        """
        basis = self.weight_space_basis(weight)
        if not basis:
            return []

        rows: dict[tuple[str, PBWMonomial], int] = {}
        matrix = SparseMatrix(rows=0, cols=len(basis), field=self.field)
        for col, mono in enumerate(basis):
            for e in RAISING:
                for target, coeff in self._act_mono(e, mono).items():
                    row = rows.setdefault((e, target), len(rows))
                    matrix.set(row, col, coeff)
        matrix.rows = len(rows)

        kernel = nullspace(matrix)
        return [self.vector({basis[j]: c for j, c in vec.items()}) for vec in kernel]

    # Simple quotient

    def _weights_at_depth(self, depth: int) -> list[Triple]:
        roots = [BY_LABEL[e].weight for e in RAISING]
        weights = []
        for i in range(depth + 1):
            for j in range(depth - i + 1):
                counts = (i, j, depth - i - j)
                weights.append(
                    tuple(self.top[x] - sum(n * root[x] for n, root in zip(counts, roots)) for x in range(3))
                )
        return weights

    def simple_dimensions(self, max_height: int) -> dict[Triple, int]:
        """
        Weight multiplicities of the simple quotient L_f, down to max_height.

        A vector of M_f lies in the maximal submodule iff no word in e0, e1,
        e2 brings it back to a nonzero multiple of v+. The functionals
        "coefficient of v+ after a raising word" on a weight space are the
        pullbacks along e0, e1, e2 of those one step higher, and dim L_mu
        is the rank of their span.

        Returns:
            dict: Actual weight -> dimension, zero weights omitted
        """
        zero = self.field.zero()
        functionals: dict[Triple, list[MonoCombo]] = {self.top: [{UNIT: self.field.one()}]}
        dims = {self.top: 1}

        for depth in range(1, max_height + 1):
            for weight in self._weights_at_depth(depth):
                basis = self.weight_space_basis(weight)
                if not basis:
                    continue

                matrix = SparseMatrix(rows=0, cols=len(basis), field=self.field)
                for e in RAISING:
                    upper = tuple(w + r for w, r in zip(weight, BY_LABEL[e].weight))
                    pulled = functionals.get(upper)
                    if not pulled:
                        continue
                    images = [self._act_mono(e, mono) for mono in basis]
                    for phi in pulled:
                        for col, image in enumerate(images):
                            value = zero
                            for target, coeff in image.items():
                                if target in phi:
                                    value = value + phi[target] * coeff
                            matrix.set(matrix.rows, col, value)
                        matrix.rows += 1

                reduced, pivots, _ = rref(matrix)
                if pivots:
                    functionals[weight] = [{basis[j]: c for j, c in row.items()} for row in reduced.values()]
                    dims[weight] = len(pivots)
        return dims


@lru_cache(maxsize=256)
def get_verma_module(field: Field, highest: Weight, window: int) -> VermaModule:
    return VermaModule(field, highest, window)


def weight_space_basis(field: Field, highest: Weight, weight: Triple, window: int) -> list[PBWMonomial]:
    return get_verma_module(field, highest, window).weight_space_basis(weight)


def act(field: Field, x: str, v: VermaVector, window: int) -> VermaVector:
    return get_verma_module(field, v.highest, window).act(x, v)


def singular_space(field: Field, highest: Weight, weight: Triple, window: int) -> list[VermaVector]:
    return get_verma_module(field, highest, window).singular_space(weight)


def verify_singular(field: Field, v: VermaVector, window: int) -> bool:
    """True iff v is nonzero and annihilated by e0, e1, e2."""
    return get_verma_module(field, v.highest, window).is_singular(v)
