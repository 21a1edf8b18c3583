from fractions import Fraction

import numpy
import pytest
from hypothesis import given

from hessenberg_unitaries.construction import (HessenbergUnitary,
                                               Mode,
                                               ParamVector,
                                               build)
from hessenberg_unitaries.core.constants import VerificationMode
from hessenberg_unitaries.core.errors import ParameterError
from hessenberg_unitaries.radicals import Radical
from hessenberg_unitaries.verification import (VerifyReport,
                                               verify_exact,
                                               verify_exact_matrix,
                                               verify_float)
from tests import strategies
from tests.utils import to_rationals


@given(strategies.exact_parameter_vectors)
def test_basic(parameters: ParamVector) -> None:
    result = verify_exact(parameters)

    assert isinstance(result, VerifyReport)
    assert result.mode is VerificationMode.EXACT
    assert result.max_residual is None


@given(strategies.exact_parameter_vectors)
def test_properties(parameters: ParamVector) -> None:
    result = verify_exact(parameters)

    assert result.passed
    assert result.passed is verify_float(build(parameters, Mode.EXACT),
                                         1e-12).passed


def test_suite(generator: numpy.random.Generator) -> None:
    for index in range(50):
        size = 2 + index % 9

        result = verify_exact(to_rationals(generator, size - 1))

        assert result.passed, result.failures


@pytest.mark.parametrize('values', [[Fraction(1, 2), Fraction(2, 3)],
                                    [Fraction(1, 3), Fraction(1, 7),
                                     Fraction(2, 5), Fraction(9, 11)],
                                    [1]])
def test_displayed_parameters(values: list) -> None:
    assert verify_exact(values).passed


@given(strategies.exact_matrices)
def test_matrices(matrix: HessenbergUnitary) -> None:
    assert verify_exact_matrix(matrix).passed
    assert verify_exact_matrix(matrix.entries).passed


def test_violation() -> None:
    rows = [list(row)
            for row in build([Fraction(1, 2), Fraction(2, 3)],
                             Mode.EXACT).entries]
    rows[0][0] = Radical(1, Fraction(1, 2))

    result = verify_exact_matrix(rows)

    assert not result.passed
    assert {(failure.kind, failure.pair)
            for failure in result.failures} >= {('rows', (1, 1)),
                                                ('columns', (1, 1))}
    assert all(isinstance(failure.witness, str)
               for failure in result.failures)


def test_invalid_arguments() -> None:
    with pytest.raises(ParameterError):
        verify_exact([0.5])
    with pytest.raises(ValueError):
        verify_exact_matrix(build([0.5]))
    with pytest.raises(ValueError):
        verify_exact_matrix([[1.]])
