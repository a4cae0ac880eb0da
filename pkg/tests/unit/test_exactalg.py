from fractions import Fraction

import pytest

from app.core.exceptions import DivisionByZeroException, ModeMismatchException, PoleException
from app.features.exactalg.linalg import nullspace, rank
from app.features.exactalg.ratfunc import RationalFunction
from app.features.exactalg.schema import Field, SparseMatrix
from app.features.exactalg.service import field_add, field_div, field_mul, specialize

zeta = RationalFunction.zeta()


class TestRationalFunction:
    def test_canonical_form_cancels_common_factor(self):
        # (zeta^2 - 1) / (zeta - 1) = zeta + 1
        x = RationalFunction.from_coeffs([1, 0, -1], [1, -1])
        assert x == zeta + 1
        assert x.den == (1,)

    def test_denominator_leading_coefficient_positive(self):
        x = RationalFunction.from_coeffs([1], [-2, 0])
        assert x.den[0] > 0
        assert x == RationalFunction.from_coeffs([-1], [2, 0])

    def test_arithmetic_identity(self):
        left = (zeta + 1) * (zeta - 1) / (zeta - 1)
        assert left == zeta + 1
        assert (zeta / zeta) == 1

    def test_specialize(self):
        x = (zeta + 1) / (zeta * 2)
        assert x.specialize(3, 2) == Fraction(5, 6)

    def test_specialize_at_pole(self):
        x = 1 / (zeta - 1)
        with pytest.raises(PoleException):
            x.specialize(1, 1)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroException):
            zeta / RationalFunction.constant(0)

    def test_mixing_with_fraction_is_rejected(self):
        with pytest.raises(ModeMismatchException):
            zeta + Fraction(1, 2)


class TestFieldOps:
    def test_mode_mismatch(self):
        with pytest.raises(ModeMismatchException):
            field_add(zeta, Fraction(1))

    def test_rational_division_by_zero(self):
        with pytest.raises(DivisionByZeroException):
            field_div(Fraction(1), Fraction(0))

    def test_field_mul(self):
        assert field_mul(Fraction(2, 3), Fraction(3, 4)) == Fraction(1, 2)

    def test_specialize_requires_generic_element(self):
        with pytest.raises(ModeMismatchException):
            specialize(Fraction(1), 1, 1)

    def test_coerce_specializes_in_rational_field(self, rational_field):
        assert rational_field.coerce(zeta + 1) == Fraction(5, 2)

    def test_render_parse_inverse(self, generic_field):
        x = (zeta * zeta + 1) / (zeta * 2 - 3)
        assert generic_field.parse(generic_field.render(x)) == x


class TestLinearAlgebra:
    def test_rank_and_kernel(self, rational_field):
        m = SparseMatrix(2, 3, rational_field)
        m.set(0, 0, Fraction(1))
        m.set(0, 1, Fraction(2))
        m.set(1, 0, Fraction(2))
        m.set(1, 1, Fraction(4))
        assert rank(m) == 1
        kernel = nullspace(m)
        assert len(kernel) == 2
        for vector in kernel:
            assert vector[min(vector)] == 1
            assert vector.get(0, 0) + 2 * vector.get(1, 0) == 0

    def test_trivial_kernel(self, generic_field):
        m = SparseMatrix(2, 2, generic_field)
        m.set(0, 0, generic_field.one())
        m.set(1, 1, zeta)
        assert nullspace(m) == []

    def test_generic_kernel(self, generic_field):
        m = SparseMatrix(1, 2, generic_field)
        m.set(0, 0, zeta)
        m.set(0, 1, zeta + 1)
        (vector,) = nullspace(m)
        assert vector[0] == 1
        assert vector[1] == -zeta / (zeta + 1)
