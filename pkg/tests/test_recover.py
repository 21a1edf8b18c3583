from fractions import Fraction
from itertools import product
from typing import (List,
                    Tuple)

import numpy
import pytest
from hypothesis import given

from hessenberg_unitaries.construction import (HessenbergUnitary,
                                               Mode,
                                               ParamVector,
                                               build)
from hessenberg_unitaries.core.errors import (NotHessenberg,
                                              NotUnitary,
                                              ParameterError)
from hessenberg_unitaries.core.recovery import (solve_signs,
                                                to_blocks)
from hessenberg_unitaries.inversion import (EquivalenceTransform,
                                            RecoveryResult,
                                            recover)
from tests import strategies
from tests.utils import (ExactRows,
                         GRID,
                         max_deviation,
                         to_exact_rows,
                         to_permutations_pairs,
                         to_sign_vectors)

CASE = (Fraction(1, 2), Fraction(2, 3))


@given(strategies.exact_matrices)
def test_basic(matrix: HessenbergUnitary) -> None:
    result = recover(matrix)

    assert isinstance(result, RecoveryResult)
    assert isinstance(result.parameters, ParamVector)
    assert isinstance(result.transform, EquivalenceTransform)
    assert result.exact


@given(strategies.exact_matrices)
def test_properties(matrix: HessenbergUnitary) -> None:
    result = recover(matrix)

    assert result.parameters == matrix.parameters
    assert result.transform.is_identity()
    assert all(start < end for start, end in result.blocks)
    assert result.blocks[0][0] == 0
    assert result.blocks[-1][1] == matrix.size


@given(strategies.exact_matrices, strategies.signs_lists,
       strategies.signs_lists)
def test_signed(matrix: HessenbergUnitary,
                row_signs: List[int],
                col_signs: List[int]) -> None:
    target = EquivalenceTransform(row_signs[:matrix.size],
                                  col_signs[:matrix.size],
                                  range(matrix.size),
                                  range(matrix.size)).apply_exact(
            matrix.entries)

    result = recover(target)

    assert result.parameters == matrix.parameters
    assert result.transform.apply_exact(
            build(result.parameters, Mode.EXACT).entries) == target


def test_displayed_matrix() -> None:
    matrix = build(CASE, Mode.EXACT)

    result = recover(matrix)

    assert result.parameters.values == CASE
    assert result.transform == EquivalenceTransform.identity(3)
    assert result.blocks == ((0, 3),)


def test_displayed_floating_matrix() -> None:
    result = recover(build(CASE).to_array())

    assert result.parameters.values == pytest.approx((0.5, 2 / 3),
                                                     abs=1e-12)
    assert result.transform.is_identity()


def test_identity() -> None:
    result = recover(numpy.eye(4))

    assert result.parameters.values == (0., 0., 0.)
    assert result.transform.is_identity()
    assert result.exact
    assert result.blocks == ((0, 1), (1, 2), (2, 3), (3, 4))


def test_sign_flip() -> None:
    result = recover([[-1., 0.], [0., 1.]])

    assert result.parameters.values == (0.,)
    assert result.transform.row_signs == (-1, 1)
    assert result.transform.col_signs == (1, 1)


def test_negated_rows() -> None:
    values = (0.3, 0.5, 0.7)
    target = EquivalenceTransform((-1, -1, 1, 1), (1, 1, 1, 1), range(4),
                                  range(4)).apply(build(values).entries)

    result = recover(target)

    assert result.parameters.values == pytest.approx(values,
                                                     abs=1e-12)
    assert result.transform.row_signs == (-1, -1, 1, 1)
    assert result.transform.col_signs == (1, 1, 1, 1)


def test_reflection() -> None:
    result = recover(numpy.diag([1., 1., -1.]))

    assert result.transform.row_signs == (1, 1, -1)
    assert result.transform.col_signs == (1, 1, 1)
    assert result.transform.row_perm == result.transform.col_perm == (0, 1,
                                                                        2)


def test_column_swap() -> None:
    target = EquivalenceTransform((1, 1, 1), (1, 1, 1), (0, 1, 2),
                                  (0, 2, 1)).apply_exact(
            build(CASE, Mode.EXACT).entries
    )

    result = recover(target)

    assert result.parameters.values == CASE
    assert result.transform.row_perm == result.transform.col_perm == (0, 1,
                                                                        2)
    assert not result.transform.is_identity()
    assert_reconstructs(target)


def test_floating_round_trip(generator: numpy.random.Generator) -> None:
    for index in range(200):
        size = 2 + index % 15
        matrix = build(generator.uniform(0., 1., size - 1).tolist())
        signs = EquivalenceTransform(next_signs(generator, size),
                                     next_signs(generator, size),
                                     range(size), range(size))
        target = signs.apply_unchecked(matrix.to_array())

        result = recover(target, 1e-9)

        assert max_deviation(result.transform.apply_unchecked(
                build(result.parameters).to_array()), target) <= 1e-9
        assert max_deviation(numpy.array(result.parameters.values),
                             numpy.array(matrix.parameters.values)) <= 1e-9


def test_interior_round_trip(generator: numpy.random.Generator) -> None:
    for index in range(200):
        size = 2 + index % 31
        values = generator.uniform(0.01, 0.99, size - 1).tolist()

        result = recover(build(values))

        assert result.transform.is_identity()
        assert max_deviation(numpy.array(result.parameters.values),
                             numpy.array(values)) <= 1e-10


@pytest.mark.parametrize('size', [2, 3])
def test_equivalent_matrices(size: int) -> None:
    for values in product(GRID, repeat=size - 1):
        rows = build(values, Mode.EXACT).entries
        for row_perm, col_perm in to_permutations_pairs(size):
            try:
                EquivalenceTransform((1,) * size, (1,) * size, row_perm,
                                     col_perm).apply_exact(rows)
            except NotHessenberg:
                continue
            for row_signs, col_signs in product(to_sign_vectors(size),
                                                repeat=2):
                target = EquivalenceTransform(row_signs, col_signs,
                                              row_perm,
                                              col_perm).apply_exact(rows)

                assert_reconstructs(target)


def test_vanishing_subdiagonal() -> None:
    rows = to_exact_rows(['1 0 0',
                          '0 sqrt(1/2) sqrt(1/2)',
                          '0 -sqrt(1/2) sqrt(1/2)'])

    result = recover(rows)

    assert result.parameters.values == (Fraction(1, 2), 0)
    assert result.blocks == ((0, 1), (1, 3))


def test_not_unitary() -> None:
    with pytest.raises(NotUnitary):
        recover([[1., 1.], [0., 1.]])
    with pytest.raises(NotUnitary):
        recover(to_exact_rows(['1 sqrt(1/2)',
                               '0 1']))


def test_not_hessenberg() -> None:
    with pytest.raises(NotHessenberg):
        recover([[0., 1., 0.], [0., 0., 1.], [1., 0., 0.]])
    with pytest.raises(NotHessenberg):
        recover(to_exact_rows(['0 1 0',
                               '0 0 1',
                               '1 0 0']))


def test_invalid_shape() -> None:
    with pytest.raises(ParameterError):
        recover([[1.]])
    with pytest.raises(ParameterError):
        recover([[1., 0.], [0.]])


def test_inconsistent_signs() -> None:
    assert solve_signs([[1, 1], [1, 1]], [[1, 1], [1, -1]]) is None
    assert solve_signs([[1, 0], [0, -1]],
                       [[1, 0], [0, 1]]) == EquivalenceTransform(
            (1, -1), (1, 1), (0, 1), (0, 1))


def test_blocks() -> None:
    assert to_blocks([]) == [(0, 1)]
    assert to_blocks([False, False]) == [(0, 3)]
    assert to_blocks([True, False, True]) == [(0, 1), (1, 3), (3, 4)]


def assert_reconstructs(target: ExactRows) -> None:
    result = recover(target)

    assert result.exact
    assert result.transform.apply_exact(
            build(result.parameters, Mode.EXACT).entries) == target


def next_signs(generator: numpy.random.Generator,
               size: int) -> Tuple[int, ...]:
    return tuple(int(sign) for sign in generator.choice((-1, 1), size))
