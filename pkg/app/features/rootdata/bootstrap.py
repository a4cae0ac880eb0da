"""
Bracket table bootstrap.

Seeds the Cartan action, the Chevalley relations [e_i, f_j] and the
composite root vector definitions, then closes the table under the
super-Jacobi identity. A bracket [y, z] = c*w with a single non-Cartan
term w defines w = c^-1 [y, z], so that for any x

    [w, x] = c^-1 ([y, [z, x]] - (-1)^{|y||z|} [z, [y, x]]).

Every assignment is checked against every available definition.
"""

from app.core.exceptions import ClosureException
from app.core.logging import get_logger
from app.features.exactalg.schema import Field, FieldElement
from app.features.rootdata.lincomb import combo_add, combo_scale, single_term
from app.features.rootdata.schema import (
    BY_LABEL,
    BY_WEIGHT,
    CARTAN,
    LABELS,
    LinearCombination,
    StructureTable,
)

logger = get_logger(__name__)

Definition = tuple[str, str, FieldElement]


def super_sign(x: str, y: str) -> int:
    """(-1)^{|x||y|}"""
    return -1 if BY_LABEL[x].parity and BY_LABEL[y].parity else 1


def cartan_pairing(weight: tuple[int, int, int], h: str) -> int:
    return weight[CARTAN.index(h)]


def simple_coroots(field: Field) -> tuple[LinearCombination, ...]:
    """alpha_0^v, alpha_1^v, alpha_2^v as combinations of h_2d, h_2e1, h_2e2."""
    zeta = field.zeta()
    half = field.coerce(1) / 2
    return (
        {"h_2d": (1 + zeta) * half, "h_2e1": half, "h_2e2": zeta * half},
        {"h_2e1": field.one()},
        {"h_2e2": field.one()},
    )


class _TableBuilder:
    """Fixed-point closure of the bracket table over one field."""

    def __init__(self, field: Field):
        self.field = field
        self.known: dict[tuple[str, str], LinearCombination] = {}
        self.definitions: dict[str, list[Definition]] = {}

    # Assignment

    def _assign(self, x: str, y: str, value: LinearCombination) -> None:
        partner = combo_scale(value, -super_sign(x, y))
        for (a, b), combo in (((x, y), value), ((y, x), partner)):
            existing = self.known.get((a, b))
            if existing is not None:
                if existing != combo:
                    raise ClosureException(
                        f"Inconsistent bracket [{a}, {b}]: {self._render(existing)} vs {self._render(combo)}"
                    )
                continue
            self.known[(a, b)] = combo
            term = single_term(combo)
            if term and not BY_LABEL[term[0]].is_cartan and term[0] not in (a, b):
                self.definitions.setdefault(term[0], []).append((a, b, term[1]))

    def _render(self, combo: LinearCombination) -> str:
        return " + ".join(f"({self.field.render(c)}) {label}" for label, c in combo.items()) or "0"

    # Seeds

    def _seed(self) -> None:
        field = self.field
        zeta = field.zeta()

        for h in CARTAN:
            for x in LABELS:
                pairing = cartan_pairing(BY_LABEL[x].weight, h)
                self._assign(h, x, {x: field.coerce(pairing)} if pairing else {})

        for x in LABELS:
            for y in LABELS:
                if (x, y) in self.known:
                    continue
                total = tuple(u + v for u, v in zip(BY_LABEL[x].weight, BY_LABEL[y].weight))
                if total != (0, 0, 0) and total not in BY_WEIGHT:
                    self._assign(x, y, {})

        for i, coroot in enumerate(simple_coroots(field)):
            self._assign(f"e{i}", f"f{i}", dict(coroot))

        one = field.one()
        self._assign("e0", "e1", {"e_pm": one})
        self._assign("e2", "e0", {"e_mp": one})
        self._assign("e_pm", "e2", {"e_pp": one})
        self._assign("e_pm", "e_mp", {"e_2d": -((1 + zeta) ** 2)})
        self._assign("f0", "f1", {"f_pm": one})
        self._assign("f0", "f2", {"f_mp": one})
        self._assign("f_pm", "f2", {"f_pp": -one})
        self._assign("f_pm", "f_mp", {"f_2d": one})

    # Derivation

    def _bracket_with(self, a: str, combo: LinearCombination) -> LinearCombination | None:
        result: LinearCombination = {}
        for label, coeff in combo.items():
            value = self.known.get((a, label))
            if value is None:
                return None
            result = combo_add(result, value, coeff)
        return result

    def _expand(self, definition: Definition, x: str) -> LinearCombination | None:
        """[w, x] from the definition [y, z] = c*w."""
        y, z, c = definition
        zx = self.known.get((z, x))
        yx = self.known.get((y, x))
        if zx is None or yx is None:
            return None
        first = self._bracket_with(y, zx)
        second = self._bracket_with(z, yx)
        if first is None or second is None:
            return None
        return combo_scale(combo_add(first, second, -super_sign(y, z)), c ** -1)

    def _derive(self, x: str, y: str) -> LinearCombination | None:
        candidates: list[tuple[Definition, LinearCombination]] = []
        for definition in self.definitions.get(x, []):
            value = self._expand(definition, y)
            if value is not None:
                candidates.append((definition, value))
        for definition in self.definitions.get(y, []):
            value = self._expand(definition, x)
            if value is not None:
                candidates.append((definition, combo_scale(value, -super_sign(x, y))))

        if not candidates:
            return None

        reference = candidates[0][1]
        for definition, value in candidates[1:]:
            if value != reference:
                raise ClosureException(
                    f"Definitions disagree on [{x}, {y}] (via [{definition[0]}, {definition[1]}]): "
                    f"{self._render(reference)} vs {self._render(value)}"
                )
        return reference

    def run(self, reverse: bool = False) -> StructureTable:
        self._seed()

        pending = [(x, y) for x in LABELS for y in LABELS if (x, y) not in self.known]
        if reverse:
            pending.reverse()

        rounds = 0
        while pending:
            rounds += 1
            remaining = []
            for x, y in pending:
                if (x, y) in self.known:
                    continue
                value = self._derive(x, y)
                if value is None:
                    remaining.append((x, y))
                else:
                    self._assign(x, y, value)
            if len(remaining) == len(pending):
                raise ClosureException(
                    f"Closure stalled with {len(remaining)} undetermined brackets, e.g. [{remaining[0][0]}, {remaining[0][1]}]"
                )
            pending = remaining

        self._check_definitions()
        logger.debug(f"Bracket closure finished in {rounds} rounds ({self.field.describe()})")
        return StructureTable(field=self.field, brackets=dict(self.known))

    def _check_definitions(self) -> None:
        for w, definitions in self.definitions.items():
            for definition in definitions:
                for x in LABELS:
                    if self._expand(definition, x) != self.known[(w, x)]:
                        raise ClosureException(
                            f"Definition [{definition[0]}, {definition[1]}] of {w} fails against {x}"
                        )


def build_structure_table(field: Field) -> StructureTable:
    """
    Build the complete 17x17 bracket table over a field.

    The closure is run in two different pair orders and the results
    must coincide.

    Args:
        field: Generic or rational field

    Returns:
        StructureTable: Complete bracket table

    Raises:
        ClosureException: If a bracket cannot be determined or is inconsistent
    """
    forward = _TableBuilder(field).run()
    backward = _TableBuilder(field).run(reverse=True)

    if forward.brackets != backward.brackets:
        diff = next(k for k in forward.brackets if forward.brackets[k] != backward.brackets[k])
        raise ClosureException(f"Bracket [{diff[0]}, {diff[1]}] depends on closure order")

    logger.info(f"✅ Structure table built over {field.describe()} field")
    return forward
