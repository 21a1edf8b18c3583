from fractions import Fraction
from itertools import product as cartesian_product
from typing import (Iterator,
                    Optional,
                    Sequence,
                    Tuple,
                    Union)

import numpy
from reprit.base import generate_repr

from .constants import (DEFAULT_TOLERANCE,
                        MAX_ENUMERATION_DIMENSION,
                        MIN_DIMENSION,
                        Mode)
from .entries import (entry_sign,
                      to_float_squares,
                      to_row_squares)
from .errors import ParameterError
from .hints import Scalar
from .parameters import ParamVector
from .radical import Radical

ExactRows = Tuple[Tuple[Radical, ...], ...]
Entries = Union[ExactRows, numpy.ndarray]


class HessenbergUnitary:
    """
    Square matrix with either exact radical or floating entries.

    Matrices produced by construction carry their generating parameters,
    externally loaded ones may not.
    """

    __slots__ = '_entries', '_mode', '_parameters'

    def __init__(self,
                 entries: Union[Sequence[Sequence[Radical]], numpy.ndarray],
                 mode: Mode,
                 parameters: Optional[ParamVector] = None) -> None:
        mode = Mode(mode)
        if mode is Mode.EXACT:
            entries = tuple(tuple(row) for row in entries)
            if not all(isinstance(entry, Radical)
                       for row in entries
                       for entry in row):
                raise ValueError('Exact entries should be radicals.')
        else:
            entries = numpy.array(entries,
                                  dtype=numpy.float64)
            entries.setflags(write=False)
        size = len(entries)
        if not size or any(len(row) != size for row in entries):
            raise ValueError('Entries should form a nonempty square matrix.')
        if parameters is not None and parameters.size != size:
            raise ParameterError('Parameters should describe '
                                 '{size} x {size} matrix, '
                                 'but found {count} of them.'
                                 .format(size=size,
                                         count=len(parameters)))
        self._entries, self._mode, self._parameters = (entries, mode,
                                                       parameters)

    __repr__ = generate_repr(__init__)

    @property
    def entries(self) -> Entries:
        return self._entries

    @property
    def mode(self) -> Mode:
        return self._mode

    @property
    def parameters(self) -> Optional[ParamVector]:
        return self._parameters

    @property
    def size(self) -> int:
        return len(self._entries)

    def __eq__(self, other: 'HessenbergUnitary') -> bool:
        if not isinstance(other, HessenbergUnitary):
            return NotImplemented
        return (self._mode is other._mode
                and self._parameters == other._parameters
                and (self._entries == other._entries
                     if self._mode is Mode.EXACT
                     else numpy.array_equal(self._entries, other._entries)))

    __hash__ = None

    def to_array(self) -> numpy.ndarray:
        return (numpy.array([[float(entry) for entry in row]
                             for row in self._entries],
                            dtype=numpy.float64)
                if self._mode is Mode.EXACT
                else self._entries)


class SparsityProfile:
    __slots__ = '_max_possible', '_nnz', '_size'

    def __init__(self, nnz: int, size: int) -> None:
        self._nnz, self._size = nnz, size
        self._max_possible = to_max_nonzeros_count(size)
        assert nnz <= self._max_possible, (nnz, self._max_possible)

    __repr__ = generate_repr(__init__)

    @property
    def density(self) -> float:
        return self._nnz / self._size ** 2

    @property
    def max_possible(self) -> int:
        return self._max_possible

    @property
    def nnz(self) -> int:
        return self._nnz

    @property
    def size(self) -> int:
        return self._size

    def __eq__(self, other: 'SparsityProfile') -> bool:
        return ((self._nnz, self._size) == (other._nnz, other._size)
                if isinstance(other, SparsityProfile)
                else NotImplemented)

    def __hash__(self) -> int:
        return hash((self._nnz, self._size))


def build(parameters: ParamVector, mode: Mode) -> HessenbergUnitary:
    size = parameters.size
    if Mode(mode) is Mode.EXACT:
        if not parameters.is_exact:
            raise ParameterError('Exact construction requires '
                                 'rational parameters, '
                                 'but found {values}.'
                                 .format(values=parameters.values))
        values = parameters.values
        entries = [[Radical.from_square(square, entry_sign(row, column))
                    for column, square in enumerate(
                            to_row_squares(size, row, values),
                            start=1)]
                   for row in range(1, size + 1)]
        return HessenbergUnitary(entries, Mode.EXACT, parameters)
    squares = to_float_squares([float(value) for value in parameters.values])
    entries = numpy.sqrt(squares)
    subdiagonal = numpy.arange(1, size)
    entries[subdiagonal, subdiagonal - 1] = (
        0. - entries[subdiagonal, subdiagonal - 1]
    )
    return HessenbergUnitary(entries, Mode.FLOAT, parameters.to_floats())


def extend(matrix: HessenbergUnitary,
           value: Scalar) -> HessenbergUnitary:
    if matrix.mode is Mode.EXACT:
        if not isinstance(value, (int, Fraction)):
            raise ParameterError('Exact extension requires '
                                 'rational parameter, but found {value}.'
                                 .format(value=value))
        value = Fraction(value)
    else:
        value = float(value)
    if not (0 <= value <= 1):
        raise ParameterError('New parameter should be in [0, 1], '
                             'but found {value}.'
                             .format(value=value))
    parameters = (None
                  if matrix.parameters is None
                  else ParamVector(matrix.parameters.values + (value,)))
    if matrix.mode is Mode.EXACT:
        head_row = matrix.entries[0]
        multiplier, complement = (Radical.from_square(value),
                                  Radical.from_square(1 - value))
        zero = Radical(0, 0)
        entries = ([(complement,) + tuple(multiplier * entry
                                          for entry in head_row),
                    (-multiplier,) + tuple(complement * entry
                                           for entry in head_row)]
                   + [(zero,) + row for row in matrix.entries[1:]])
        return HessenbergUnitary(entries, Mode.EXACT, parameters)
    size = matrix.size + 1
    multiplier, complement = numpy.sqrt(value), numpy.sqrt(1. - value)
    entries = numpy.zeros((size, size),
                          dtype=numpy.float64)
    entries[0, 0], entries[1, 0] = complement, 0. - multiplier
    entries[0, 1:] = multiplier * matrix.entries[0]
    entries[1, 1:] = complement * matrix.entries[0]
    entries[2:, 1:] = matrix.entries[1:]
    return HessenbergUnitary(entries, Mode.FLOAT, parameters)


def first_row(matrix: HessenbergUnitary) -> Tuple[Union[Radical, float], ...]:
    return tuple(matrix.entries[0])


def last_column(matrix: HessenbergUnitary
                ) -> Tuple[Union[Radical, float], ...]:
    return tuple(row[-1] for row in matrix.entries)


def sparsity_profile(matrix: HessenbergUnitary,
                     tolerance: float = DEFAULT_TOLERANCE) -> SparsityProfile:
    nnz = (sum(bool(entry) for row in matrix.entries for entry in row)
           if matrix.mode is Mode.EXACT
           else int(numpy.count_nonzero(numpy.abs(matrix.entries)
                                        > tolerance)))
    return SparsityProfile(nnz, matrix.size)


def to_max_nonzeros_count(size: int) -> int:
    return size * (size + 1) // 2 + size - 1


def to_vertices(size: int, mode: Mode) -> Iterator[HessenbergUnitary]:
    if not MIN_DIMENSION <= size <= MAX_ENUMERATION_DIMENSION:
        raise ParameterError('Vertices dimension should be '
                             'in range [{min_size}, {max_size}], '
                             'but found {size}.'
                             .format(min_size=MIN_DIMENSION,
                                     max_size=MAX_ENUMERATION_DIMENSION,
                                     size=size))
    return (vertex_matrix(size, bits, mode)
            for bits in cartesian_product((0, 1),
                                          repeat=size - 1))


def vertex_matrix(size: int,
                  bits: Sequence[int],
                  mode: Mode) -> HessenbergUnitary:
    if len(bits) != size - 1:
        raise ParameterError('Bits count should be {count}, '
                             'but found {bits}.'
                             .format(count=size - 1,
                                     bits=bits))
    if any(bit not in (0, 1) for bit in bits):
        raise ParameterError('Bits should be 0 or 1, '
                             'but found {bits}.'
                             .format(bits=bits))
    return build(ParamVector([Fraction(bit) for bit in bits]), mode)
