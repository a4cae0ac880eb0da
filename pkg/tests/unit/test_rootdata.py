from fractions import Fraction

import pytest

from app.core.exceptions import HypothesisException, UnknownModuleException
from app.features.exactalg.ratfunc import RationalFunction
from app.features.exactalg.schema import Field
from app.features.rootdata.repo import dump_table, load_table
from app.features.rootdata.schema import LABELS, StructureTable
from app.features.rootdata.service import (
    RHO,
    bilinear_form,
    check_emergent_relations,
    check_jacobi,
    coroot_pairing,
    get_structure_table,
    module_weights,
    root_datum,
    specialize_table,
    weight_multiplicities,
)

zeta = RationalFunction.zeta()


class TestRootDatum:
    def test_rho(self, generic_field):
        assert root_datum(generic_field).rho == RHO == (-1, 1, 1)

    def test_bilinear_form(self, generic_field):
        assert bilinear_form((1, 0, 0), (1, 0, 0), generic_field) == -(1 + zeta)
        assert bilinear_form((1, -1, -1), (1, -1, -1), generic_field) == 0
        assert bilinear_form((0, 2, 0), (0, 2, 0), generic_field) == 4

    def test_bilinear_form_rational(self, rational_field):
        assert bilinear_form((0, 0, 1), (0, 0, 1), rational_field) == Fraction(3, 2)

    def test_coroot_pairing(self):
        assert coroot_pairing((2, 0, 0), (2, 0, 0)) == 2
        assert coroot_pairing((0, 0, 0), (0, 2, 0)) == 0
        with pytest.raises(HypothesisException):
            coroot_pairing((1, 1, 1), (1, -1, -1))


class TestStructureTable:
    def test_chevalley_brackets(self, generic_field):
        table = get_structure_table(generic_field)
        assert table.bracket("e0", "f0") == {
            "h_2d": (1 + zeta) / 2,
            "h_2e1": RationalFunction.constant(Fraction(1, 2)),
            "h_2e2": zeta / 2,
        }
        assert table.bracket("e_2d", "f_2d") == {"h_2d": -generic_field.one()}
        assert table.bracket("e1", "e2") == {}

    def test_every_pair_present(self, generic_field):
        table = get_structure_table(generic_field)
        assert len(table.brackets) == len(LABELS) ** 2

    @pytest.mark.parametrize("field", [Field.generic(), Field.rational(1, 1), Field.rational(3, 2)])
    def test_jacobi_holds(self, field):
        report = check_jacobi(get_structure_table(field))
        assert report.total == 17**3
        assert report.failed == 0

    def test_jacobi_detects_perturbation(self, rational_field):
        table = get_structure_table(rational_field)
        brackets = {key: dict(value) for key, value in table.brackets.items()}
        brackets[("e0", "f0")]["h_2e1"] += 1
        report = check_jacobi(StructureTable(field=rational_field, brackets=brackets))
        assert report.failed >= 1

    def test_emergent_relations(self, generic_field, rational_field):
        assert check_emergent_relations(get_structure_table(generic_field)) == []
        assert check_emergent_relations(get_structure_table(rational_field)) == []

    def test_specialization_matches_direct_build(self, generic_field):
        specialized = specialize_table(get_structure_table(generic_field), 3, 2)
        direct = get_structure_table(Field.rational(3, 2))
        assert specialized.brackets == direct.brackets

    def test_dump_reload(self, generic_field):
        table = get_structure_table(generic_field)
        text = dump_table(table)
        assert dump_table(load_table(text)) == text
        assert load_table(text).brackets == table.brackets


class TestModuleWeights:
    def test_adjoint(self):
        weights = module_weights("adjoint")
        assert len(weights) == 17
        assert weight_multiplicities(weights)[(0, 0, 0)] == 3

    def test_l121(self):
        counts = weight_multiplicities(module_weights("L121"))
        assert sum(counts.values()) == 32
        for weight in [(1, 0, 1), (1, 0, -1), (-1, 0, 1), (-1, 0, -1)]:
            assert counts[weight] == 2

    def test_quasinatural_one(self):
        assert sorted(module_weights("quasinatural(1)")) == sorted(
            [(1, 0, 0), (-1, 0, 0), (0, 1, 1), (0, 1, -1), (0, -1, 1), (0, -1, -1)]
        )

    def test_quasinatural_dimension(self):
        assert len(module_weights("quasinatural(3)")) == 14

    def test_unknown_module(self):
        with pytest.raises(UnknownModuleException):
            module_weights("natural")
