from fractions import Fraction

import pytest
from hypothesis import given

from hessenberg_unitaries.construction import (Mode,
                                               ParamVector,
                                               build,
                                               squared_entry)
from hessenberg_unitaries.core.errors import ParameterError
from tests import strategies


@given(strategies.exact_parameter_vectors)
def test_basic(parameters: ParamVector) -> None:
    size = parameters.size

    result = squared_entry(size, 1, size, parameters)

    assert isinstance(result, Fraction)
    assert 0 <= result <= 1


@given(strategies.exact_parameter_vectors)
def test_rows_norms(parameters: ParamVector) -> None:
    size = parameters.size

    assert all(sum(squared_entry(size, row, column, parameters)
                   for column in range(1, size + 1)) == 1
               for row in range(1, size + 1))


@given(strategies.exact_parameter_vectors)
def test_columns_norms(parameters: ParamVector) -> None:
    size = parameters.size

    assert all(sum(squared_entry(size, row, column, parameters)
                   for row in range(1, size + 1)) == 1
               for column in range(1, size + 1))


@given(strategies.exact_parameter_vectors)
def test_hessenberg_structure(parameters: ParamVector) -> None:
    size = parameters.size

    assert all(squared_entry(size, row, column, parameters) == 0
               for row in range(1, size + 1)
               for column in range(1, row - 1))
    assert all(squared_entry(size, row, row - 1, parameters)
               == parameters.values[size - row]
               for row in range(2, size + 1))


@given(strategies.float_parameter_vectors)
def test_floats(parameters: ParamVector) -> None:
    size = parameters.size

    matrix = build(parameters, Mode.FLOAT)

    assert all(matrix.entries[row - 1, column - 1] ** 2
               == pytest.approx(squared_entry(size, row, column, parameters),
                                abs=1e-12)
               for row in range(1, size + 1)
               for column in range(1, size + 1))


def test_displayed_entries() -> None:
    assert squared_entry(3, 1, 2, [Fraction(1, 2),
                                   Fraction(2, 3)]) == Fraction(1, 3)
    assert squared_entry(5, 2, 3, [Fraction(1, 2), Fraction(1, 3),
                                   Fraction(1, 5), Fraction(1, 7)]) == (
            (1 - Fraction(1, 7)) * (1 - Fraction(1, 3)) * Fraction(1, 5)
    )
    assert squared_entry(4, 3, 2, [Fraction(1, 2), Fraction(1, 3),
                                   Fraction(1, 5)]) == Fraction(1, 3)
    assert all(squared_entry(size, size, size, [0] * (size - 1)) == 1
               for size in range(2, 8))


@given(strategies.exact_parameter_vectors)
def test_invalid_indices(parameters: ParamVector) -> None:
    size = parameters.size

    with pytest.raises(ValueError):
        squared_entry(size, 0, 1, parameters)
    with pytest.raises(ValueError):
        squared_entry(size, 1, size + 1, parameters)


@given(strategies.exact_parameter_vectors)
def test_invalid_parameters_count(parameters: ParamVector) -> None:
    with pytest.raises(ParameterError):
        squared_entry(parameters.size + 1, 1, 1, parameters)


def test_out_of_range_parameters() -> None:
    with pytest.raises(ParameterError):
        squared_entry(3, 1, 1, [Fraction(1, 2), Fraction(3, 2)])
