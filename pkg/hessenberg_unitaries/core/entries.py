from itertools import accumulate
from operator import mul
from typing import (List,
                    Sequence)

import numpy

from .hints import Scalar
from .utils import product


def entry_sign(row: int, column: int) -> int:
    return -1 if column == row - 1 else int(column >= row)


def squared_entry(size: int,
                  row: int,
                  column: int,
                  values: Sequence[Scalar]) -> Scalar:
    zero = values[0] * 0
    if column < row - 1:
        return zero
    elif column == row - 1:
        return _to_parameter(values, size - row + 1, zero)
    return ((1 - _to_parameter(values, size - row + 1, zero))
            * (1 - _to_parameter(values, size - column, zero))
            * product(values[index - 1]
                      for index in range(size - column + 1,
                                         size - row + 1)))


def to_row_squares(size: int,
                   row: int,
                   values: Sequence[Scalar]) -> List[Scalar]:
    """
    Returns squared entries of the row (1-based)
    accumulating parameters products instead of recomputing them per entry.
    """
    zero = values[0] * 0
    result = [zero] * size
    if row > 1:
        result[row - 2] = _to_parameter(values, size - row + 1, zero)
    head = 1 - _to_parameter(values, size - row + 1, zero)
    products = accumulate([zero + 1]
                          + [values[size - column - 1]
                             for column in range(row, size)],
                          mul)
    for column, column_product in zip(range(row, size + 1), products):
        result[column - 1] = (head
                              * (1 - _to_parameter(values, size - column,
                                                   zero))
                              * column_product)
    return result


def to_float_squares(values: Sequence[float]) -> numpy.ndarray:
    """
    Returns float matrix of squared entries built row by row.
    """
    size = len(values) + 1
    extended = numpy.concatenate(([0.], numpy.asarray(values,
                                                      dtype=numpy.float64),
                                  [0.]))
    result = numpy.zeros((size, size),
                         dtype=numpy.float64)
    for row in range(1, size + 1):
        if row > 1:
            result[row - 1, row - 2] = extended[size - row + 1]
        complements = 1. - extended[size - row::-1]
        products = numpy.cumprod(numpy.concatenate(
                ([1.], extended[size - row:0:-1])
        ))
        result[row - 1, row - 1:] = ((1. - extended[size - row + 1])
                                     * complements * products)
    return result


def _to_parameter(values: Sequence[Scalar],
                  index: int,
                  zero: Scalar) -> Scalar:
    # ``z_0`` and ``z_n`` vanish
    return (zero
            if index == 0 or index == len(values) + 1
            else values[index - 1])
