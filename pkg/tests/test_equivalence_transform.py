import numpy
import pytest
from hypothesis import given

from hessenberg_unitaries.construction import (HessenbergUnitary,
                                               Mode,
                                               build)
from hessenberg_unitaries.core.errors import NotHessenberg
from hessenberg_unitaries.inversion import EquivalenceTransform
from tests import strategies
from tests.utils import to_sign_vectors

TRANSFORMS = [EquivalenceTransform((1, -1, 1), (-1, 1, 1), (0, 1, 2),
                                   (0, 1, 2)),
              EquivalenceTransform((1, 1, -1), (1, 1, 1), (1, 0, 2),
                                   (2, 0, 1)),
              EquivalenceTransform((-1, -1, 1), (1, -1, -1), (2, 1, 0),
                                   (1, 2, 0))]


@given(strategies.float_matrices)
def test_identity(matrix: HessenbergUnitary) -> None:
    transform = EquivalenceTransform.identity(matrix.size)

    assert transform.is_identity()
    assert numpy.array_equal(transform.apply(matrix.entries),
                             matrix.entries)


@given(strategies.exact_matrices)
def test_exact_identity(matrix: HessenbergUnitary) -> None:
    transform = EquivalenceTransform.identity(matrix.size)

    assert transform.apply_exact(matrix.entries) == matrix.entries


@pytest.mark.parametrize('first', TRANSFORMS)
@pytest.mark.parametrize('second', TRANSFORMS)
def test_compose(first: EquivalenceTransform,
                 second: EquivalenceTransform) -> None:
    matrix = numpy.arange(1., 10.).reshape(3, 3)

    assert numpy.array_equal(
            first.compose(second).apply_unchecked(matrix),
            first.apply_unchecked(second.apply_unchecked(matrix)))


@pytest.mark.parametrize('transform', TRANSFORMS)
def test_inverse(transform: EquivalenceTransform) -> None:
    matrix = numpy.arange(1., 10.).reshape(3, 3)

    assert transform.compose(transform.inverse()).is_identity()
    assert transform.inverse().compose(transform).is_identity()
    assert numpy.array_equal(transform.inverse().apply_unchecked(
            transform.apply_unchecked(matrix)), matrix)
    assert transform.inverse().inverse() == transform


def test_signs() -> None:
    rows = build((1, 1), Mode.EXACT).entries
    for signs in to_sign_vectors(3):
        transform = EquivalenceTransform(signs, signs, range(3), range(3))

        assert (transform.apply_exact(transform.apply_exact(rows))
                == rows)


def test_breaking_hessenberg_pattern() -> None:
    transform = EquivalenceTransform((1, 1, 1), (1, 1, 1), (2, 1, 0),
                                     (0, 1, 2))

    with pytest.raises(NotHessenberg):
        transform.apply(build((0.5, 0.5)).entries)
    with pytest.raises(NotHessenberg):
        transform.apply_exact(build((0, 0), Mode.EXACT).entries)


def test_invalid_arguments() -> None:
    with pytest.raises(ValueError):
        EquivalenceTransform((1, 1), (1,), (0, 1), (0, 1))
    with pytest.raises(ValueError):
        EquivalenceTransform((1, 0), (1, 1), (0, 1), (0, 1))
    with pytest.raises(ValueError):
        EquivalenceTransform((1, 1), (1, 1), (0, 0), (0, 1))
    with pytest.raises(ValueError):
        EquivalenceTransform.identity(2).apply_unchecked(numpy.eye(3))
