from fractions import Fraction

import pytest
from pydantic import ValidationError

from app.core.exceptions import HypothesisException, NotAtypicalException, UsageException
from app.features.weights.bruhat import bruhat_leq, covers
from app.features.weights.schema import BlockId, Parameter, Weight
from app.features.weights.service import (
    atypical_index,
    casimir,
    classify_block,
    decode,
    enumerate_block,
    hc_p_value,
    is_atypical,
    mirror,
    mirror_parameter,
    rho_shift,
    rho_unshift,
    weyl_orbit,
)


class TestParsing:
    def test_parse_parameter(self):
        assert Parameter.parse("generic").is_generic
        assert Parameter.parse("3/2") == Parameter.rational(3, 2)
        assert Parameter.parse("2") == Parameter.rational(2, 1)

    def test_parameter_must_be_reduced(self):
        with pytest.raises(ValidationError):
            Parameter.parse("4/2")

    def test_parameter_must_be_positive(self):
        with pytest.raises(ValidationError):
            Parameter.parse("-1/2")

    def test_parameter_garbage(self):
        with pytest.raises(UsageException):
            Parameter.parse("zeta")

    def test_parse_weight(self):
        assert Weight.parse("1,-2,3") == Weight(1, -2, 3)
        with pytest.raises(UsageException):
            Weight.parse("1,2")


class TestRhoShift:
    def test_zero_weight(self):
        assert rho_shift((0, 0, 0)) == Weight(-1, 1, 1)

    def test_adjoint_head(self):
        assert rho_shift((2, 0, 0)) == Weight(1, 1, 1)

    def test_round_trip(self):
        assert rho_unshift(rho_shift((5, -3, 2))) == (5, -3, 2)


class TestAtypicality:
    def test_generic(self, generic):
        assert is_atypical(generic, Weight(2, 2, 2))
        assert is_atypical(generic, Weight(-1, 1, -1))
        assert not is_atypical(generic, Weight(1, 1, 0))

    def test_rational(self, three_halves):
        assert is_atypical(three_halves, Weight(2, 5, 0))
        assert not is_atypical(Parameter.rational(2, 1), Weight(0, 2, 0))

    def test_index_n_equals_kd(self, three_halves):
        index = atypical_index(three_halves, Weight(2, 5, 0))
        assert (index.k, index.n, index.signs) == (1, 2, "++o")

    def test_index_n_zero(self):
        index = atypical_index(Parameter.rational(2, 1), Weight(0, 2, 1))
        assert (index.k, index.n, index.signs) == (1, 0, "o++")

    def test_index_of_zero_weight(self, generic):
        index = atypical_index(generic, Weight(0, 0, 0))
        assert (index.k, index.n, index.signs) == (0, 0, "ooo")

    def test_typical_weight_has_no_index(self, generic):
        with pytest.raises(NotAtypicalException):
            atypical_index(generic, Weight(1, 1, 0))

    def test_decode_inverts_index(self, three_halves):
        for f in enumerate_block(three_halves, 1, 4):
            index = atypical_index(three_halves, f)
            assert decode(three_halves, index.k, index.n, index.signs) == f

    def test_decode_rejects_o_at_nonzero(self, three_halves):
        with pytest.raises(HypothesisException):
            decode(three_halves, 1, 1, "o++")


class TestBlocks:
    def test_typical_block(self, generic):
        assert classify_block(generic, Weight(1, 1, 0)) == BlockId.typical((1, 1, 0))

    def test_atypical_block(self):
        assert classify_block(Parameter.rational(2, 1), Weight(0, 2, 1)) == BlockId.atypical(1)

    @pytest.mark.parametrize("n", [0, 1, 2, 5])
    def test_antidominant_family(self, generic, n):
        assert classify_block(generic, Weight(-n, -n, -n)) == BlockId.atypical(0)

    def test_enumerate_generic(self, generic):
        weights = enumerate_block(generic, 0, 1)
        assert len(weights) == 9
        assert weights == sorted(weights)

    def test_generic_has_no_higher_blocks(self, generic):
        with pytest.raises(HypothesisException):
            enumerate_block(generic, 1, 3)

    def test_weyl_orbit_sizes(self):
        assert len(weyl_orbit(Weight(1, 2, 3))) == 8
        assert len(weyl_orbit(Weight(0, 2, 3))) == 4
        assert weyl_orbit(Weight(0, 0, 0)) == {Weight(0, 0, 0)}


class TestCentralCharacters:
    def test_casimir_of_zero_label(self, generic):
        assert casimir(generic, rho_unshift(Weight(0, 0, 0))) == 0

    def test_casimir_constant_on_block(self):
        param = Parameter.rational(2, 1)
        for f in enumerate_block(param, 1, 4):
            assert casimir(param, rho_unshift(f)) == 6

    def test_casimir_separates_blocks(self, three_halves):
        values = {casimir(three_halves, rho_unshift(enumerate_block(three_halves, k, 0)[0])) for k in range(4)}
        assert values == {Fraction(15 * k * k) for k in range(4)}

    def test_hc_p_value(self, generic):
        assert hc_p_value(generic, rho_unshift(Weight(1, 1, 1))) == 0
        assert hc_p_value(Parameter.rational(2, 1), rho_unshift(Weight(0, 2, 0))) != 0


class TestMirror:
    def test_mirror(self):
        assert mirror(Weight(1, 2, 3)) == Weight(1, 3, 2)
        assert mirror_parameter(Parameter.rational(1, 2)) == Parameter.rational(2, 1)

    def test_mirror_preserves_atypicality(self):
        param = Parameter.rational(1, 2)
        for f in enumerate_block(param, 1, 3):
            assert is_atypical(mirror_parameter(param), mirror(f))


class TestBruhat:
    def test_sign_raise(self, generic):
        assert bruhat_leq(generic, Weight(-1, 1, 1), Weight(1, 1, 1))

    def test_family_shift(self, generic):
        assert Weight(2, 2, 2) in covers(generic, Weight(1, 1, 1))
        assert bruhat_leq(generic, Weight(1, 1, 1), Weight(2, 2, 2))

    def test_antisymmetry(self, generic):
        assert not bruhat_leq(generic, Weight(2, 2, 2), Weight(1, 1, 1))
