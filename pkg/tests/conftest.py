"""Shared fixtures for the unit and integration tests."""

import pytest

from app.features.exactalg.schema import Field
from app.features.weights.schema import Parameter


@pytest.fixture
def generic() -> Parameter:
    return Parameter.generic()


@pytest.fixture
def three_halves() -> Parameter:
    return Parameter.rational(3, 2)


@pytest.fixture
def generic_field() -> Field:
    return Field.generic()


@pytest.fixture
def rational_field() -> Field:
    return Field.rational(3, 2)
