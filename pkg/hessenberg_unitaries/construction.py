from typing import (Iterator as _Iterator,
                    Sequence as _Sequence,
                    Tuple as _Tuple,
                    Union as _Union)

import numpy as _numpy

from .core.constants import (DEFAULT_TOLERANCE as _DEFAULT_TOLERANCE,
                             Mode as _Mode)
from .core.contracts import (is_hessenberg as _is_hessenberg,
                             is_signed_permutation as _is_signed_permutation)
from .core.entries import (entry_sign as _entry_sign,
                           squared_entry as _squared_entry)
from .core.errors import ParameterError as _ParameterError
from .core.matrices import (HessenbergUnitary as _HessenbergUnitary,
                            SparsityProfile as _SparsityProfile,
                            build as _build,
                            extend as _extend,
                            first_row as _first_row,
                            last_column as _last_column,
                            sparsity_profile as _sparsity_profile,
                            to_vertices as _to_vertices,
                            vertex_matrix as _vertex_matrix)
from .core.parameters import ParamVector as _ParamVector
from .core.radical import Radical as _Radical
from .hints import Scalar as _Scalar

HessenbergUnitary = _HessenbergUnitary
Mode = _Mode
ParamVector = _ParamVector
SparsityProfile = _SparsityProfile

Parameters = _Union[_ParamVector, _Sequence[_Scalar]]
Entry = _Union[_Radical, float]


def squared_entry(size: int,
                  row: int,
                  column: int,
                  parameters: Parameters) -> _Scalar:
    """
    Returns square of the entry at given 1-based position
    of the matrix constructed over given parameters.

    Time complexity:
        ``O(size)``
    Memory complexity:
        ``O(1)``

    :param size: dimension of the matrix.
    :param row: 1-based row index.
    :param column: 1-based column index.
    :param parameters: parameters ``z_1, ..., z_{size - 1}``.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.construction import squared_entry
    >>> squared_entry(3, 1, 2, [Fraction(1, 2), Fraction(2, 3)])
    Fraction(1, 3)
    >>> squared_entry(4, 3, 2, [Fraction(1, 5), Fraction(1, 7),
    ...                         Fraction(1, 9)])
    Fraction(1, 7)
    >>> squared_entry(4, 4, 1, [0, 0, 0])
    Fraction(0, 1)
    >>> squared_entry(4, 4, 4, [0, 0, 0])
    Fraction(1, 1)
    """
    parameters = _to_parameters(parameters)
    if parameters.size != size:
        raise _ParameterError('Parameters count should be {expected}, '
                              'but found {count}.'
                              .format(expected=size - 1,
                                      count=len(parameters)))
    for name, index in (('row', row), ('column', column)):
        if not 1 <= index <= size:
            raise ValueError('`{name}` should be in range [1, {size}], '
                             'but found {index}.'
                             .format(name=name,
                                     size=size,
                                     index=index))
    return _squared_entry(size, row, column, parameters.values)


def entry_sign(row: int, column: int) -> int:
    """
    Returns sign of the entry at given 1-based position
    shared by every matrix of the family:
    ``-1`` on the subdiagonal, ``0`` below it and ``1`` elsewhere.

    >>> from hessenberg_unitaries.construction import entry_sign
    >>> entry_sign(2, 1)
    -1
    >>> entry_sign(1, 3)
    1
    >>> entry_sign(4, 1)
    0
    """
    if row < 1 or column < 1:
        raise ValueError('Indices should be positive, '
                         'but found {row}, {column}.'
                         .format(row=row,
                                 column=column))
    return _entry_sign(row, column)


def build(parameters: Parameters,
          mode: _Mode = _Mode.FLOAT) -> HessenbergUnitary:
    """
    Returns Hessenberg unitary matrix constructed over given parameters.

    Time complexity:
        ``O(size ** 2)``
    Memory complexity:
        ``O(size ** 2)``

    where ``size = len(parameters) + 1``.

    :param parameters: parameters ``z_1, ..., z_{size - 1}`` in ``[0, 1]``.
    :param mode:
        ``Mode.EXACT`` for radical entries (requires rational parameters),
        ``Mode.FLOAT`` for ``float64`` entries.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.construction import Mode, build
    >>> matrix = build([Fraction(1, 2), Fraction(2, 3)], Mode.EXACT)
    >>> [[str(entry) for entry in row] for row in matrix.entries]
    ... # doctest: +NORMALIZE_WHITESPACE
    [['sqrt(1/3)', 'sqrt(1/3)', 'sqrt(1/3)'],
     ['-sqrt(2/3)', 'sqrt(1/6)', 'sqrt(1/6)'],
     ['0', '-sqrt(1/2)', 'sqrt(1/2)']]
    >>> build([0.]).entries.tolist()
    [[1.0, 0.0], [0.0, 1.0]]
    """
    return _build(_to_parameters(parameters), mode)


def extend(matrix: HessenbergUnitary, value: _Scalar) -> HessenbergUnitary:
    """
    Returns matrix of the next dimension
    obtained from given one with new last parameter.

    :param matrix: matrix to extend.
    :param value: new parameter in ``[0, 1]``.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.construction import Mode, build, extend
    >>> (extend(build([Fraction(1, 2)], Mode.EXACT), Fraction(2, 3))
    ...  == build([Fraction(1, 2), Fraction(2, 3)], Mode.EXACT))
    True
    """
    return _extend(matrix, value)


def first_row(matrix: HessenbergUnitary) -> _Tuple[Entry, ...]:
    return _first_row(matrix)


def last_column(matrix: HessenbergUnitary) -> _Tuple[Entry, ...]:
    return _last_column(matrix)


def is_hessenberg(matrix: _numpy.ndarray,
                  tolerance: float = 0.) -> bool:
    """
    Checks if entries below the first subdiagonal of given matrix
    do not exceed given tolerance in magnitude.

    >>> from hessenberg_unitaries.construction import is_hessenberg
    >>> is_hessenberg([[0., 1., 0.], [0., 0., 1.], [1., 0., 0.]])
    False
    """
    return _is_hessenberg(_numpy.asarray(matrix,
                                         dtype=_numpy.float64),
                          tolerance)


def is_signed_permutation(matrix: _numpy.ndarray) -> bool:
    return _is_signed_permutation(_numpy.asarray(matrix,
                                                 dtype=_numpy.float64))


def sparsity_profile(matrix: HessenbergUnitary,
                     tolerance: float = _DEFAULT_TOLERANCE
                     ) -> SparsityProfile:
    """
    Returns nonzero entries statistics of given matrix,
    floating entries with magnitude not exceeding tolerance count as zeros.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.construction import (Mode, build,
    ...                                                sparsity_profile)
    >>> profile = sparsity_profile(build([Fraction(1, 2), Fraction(2, 3)],
    ...                                  Mode.EXACT))
    >>> profile.nnz == profile.max_possible == 8
    True
    """
    return _sparsity_profile(matrix, tolerance)


def vertex_matrix(size: int,
                  bits: _Sequence[int],
                  mode: _Mode = _Mode.EXACT) -> HessenbergUnitary:
    """
    Returns matrix constructed over parameters from ``{0, 1}``,
    which is always a signed permutation matrix.

    >>> from hessenberg_unitaries.construction import vertex_matrix
    >>> matrix = vertex_matrix(3, (1, 0))
    >>> [[str(entry) for entry in row] for row in matrix.entries]
    [['1', '0', '0'], ['0', '0', '1'], ['0', '-1', '0']]
    """
    return _vertex_matrix(size, bits, mode)


def vertices(size: int,
             mode: _Mode = _Mode.EXACT) -> _Iterator[HessenbergUnitary]:
    """
    Returns iterator over all ``2 ** (size - 1)`` vertex matrices
    with bits of ``z_1`` changing slowest.

    >>> from hessenberg_unitaries.construction import vertices
    >>> len(list(vertices(4)))
    8
    """
    return _to_vertices(size, mode)


def _to_parameters(parameters: Parameters) -> ParamVector:
    return (parameters
            if isinstance(parameters, ParamVector)
            else ParamVector(parameters))
