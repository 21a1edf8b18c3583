from typing import (Optional,
                    Sized)

import numpy


def has_valid_size(sized: Sized,
                   *,
                   min_size: int,
                   max_size: Optional[int]) -> bool:
    size = len(sized)
    return min_size <= size and (max_size is None or size <= max_size)


def is_hessenberg(matrix: numpy.ndarray, tolerance: float = 0.) -> bool:
    return not numpy.any(numpy.abs(numpy.tril(matrix, -2)) > tolerance)


def is_signed_permutation(matrix: numpy.ndarray) -> bool:
    magnitudes = numpy.abs(matrix)
    return bool(numpy.all((magnitudes == 0) | (magnitudes == 1))
                and numpy.all(magnitudes.sum(axis=0) == 1)
                and numpy.all(magnitudes.sum(axis=1) == 1))


def has_canonical_signs(matrix: numpy.ndarray) -> bool:
    size = len(matrix)
    return (all(matrix[row, row - 1] <= 0 for row in range(1, size))
            and not numpy.any(numpy.triu(matrix) < 0))
