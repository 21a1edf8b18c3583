from typing import (Sequence as _Sequence,
                    Union as _Union)

import numpy as _numpy

from .core.constants import (DEFAULT_TOLERANCE as _DEFAULT_TOLERANCE,
                             MIN_DIMENSION as _MIN_DIMENSION,
                             Mode as _Mode)
from .core.errors import ParameterError as _ParameterError
from .core.gram import (verify_exact_entries as _verify_exact_entries,
                        verify_float_entries as _verify_float_entries)
from .core.matrices import (HessenbergUnitary as _HessenbergUnitary,
                            build as _build)
from .core.parameters import ParamVector as _ParamVector
from .core.radical import Radical as _Radical
from .core.reports import (Failure as _Failure,
                           VerifyReport as _VerifyReport)
from .core.symbolic import verify_symbolic as _verify_symbolic
from .hints import (RawMatrix as _RawMatrix,
                    Scalar as _Scalar)

Failure = _Failure
VerifyReport = _VerifyReport


def verify_float(matrix: _Union[_HessenbergUnitary, _RawMatrix,
                                 _numpy.ndarray],
                 tolerance: float = _DEFAULT_TOLERANCE) -> VerifyReport:
    """
    Checks both ``U.T @ U`` and ``U @ U.T`` against identity
    in floating point arithmetic.

    Time complexity:
        ``O(size ** 3)``
    Memory complexity:
        ``O(size ** 2)``

    :param matrix: matrix to check, exact entries are evaluated as floats.
    :param tolerance: maximum allowed magnitude of Gram residual entries.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.construction import build
    >>> from hessenberg_unitaries.verification import verify_float
    >>> verify_float(build([0.5, 2 / 3]), 1e-12).passed
    True
    >>> report = verify_float([[1., 0.], [0., 1.]], 0.)
    >>> report.passed, report.max_residual
    (True, 0.0)
    >>> [failure.pair
    ...  for failure in verify_float([[1. + 1e-6, 0.], [0., 1.]],
    ...                              1e-12).failures]
    [(1, 1), (1, 1)]
    """
    if tolerance < 0:
        raise ValueError('`tolerance` should be nonnegative, '
                         'but found {tolerance}.'
                         .format(tolerance=tolerance))
    array = (matrix.to_array()
             if isinstance(matrix, _HessenbergUnitary)
             else _numpy.array([[float(entry) for entry in row]
                                for row in matrix],
                               dtype=_numpy.float64))
    if array.ndim != 2 or array.shape[0] != array.shape[1]:
        raise ValueError('Matrix should be square, '
                         'but found shape {shape}.'
                         .format(shape=array.shape))
    return _verify_float_entries(array, tolerance)


def verify_exact(parameters: _Union[_ParamVector, _Sequence[_Scalar]]
                 ) -> VerifyReport:
    """
    Checks that matrix constructed over given rational parameters
    has exactly orthonormal rows and columns.

    :param parameters: rational parameters ``z_1, ..., z_{size - 1}``.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.verification import verify_exact
    >>> verify_exact([Fraction(1, 3), Fraction(1, 7), Fraction(2, 5),
    ...               Fraction(9, 11)]).passed
    True
    """
    if not isinstance(parameters, _ParamVector):
        parameters = _ParamVector(parameters)
    if not parameters.is_exact:
        raise _ParameterError('Exact verification requires '
                              'rational parameters, but found {values}.'
                              .format(values=parameters.values))
    return verify_exact_matrix(_build(parameters, _Mode.EXACT))


def verify_exact_matrix(matrix: _Union[_HessenbergUnitary,
                                       _Sequence[_Sequence[_Radical]]]
                        ) -> VerifyReport:
    """
    Checks that given matrix with radical entries
    has exactly orthonormal rows and columns.
    """
    if isinstance(matrix, _HessenbergUnitary):
        if matrix.mode is not _Mode.EXACT:
            raise ValueError('Matrix should have exact entries.')
        rows = matrix.entries
    else:
        rows = tuple(tuple(row) for row in matrix)
        if not all(isinstance(entry, _Radical)
                   for row in rows
                   for entry in row):
            raise ValueError('Matrix entries should be radicals.')
        if any(len(row) != len(rows) for row in rows):
            raise ValueError('Matrix should be square.')
    return _verify_exact_entries(rows)


def verify_symbolic(size: int) -> VerifyReport:
    """
    Proves that every matrix of given dimension is unitary
    treating parameters as indeterminates.

    Row and column norms are expanded into polynomials
    which should be the constant ``1``,
    inner products of distinct rows (columns) are factored
    into square root of common radicand times polynomial
    which should vanish identically.

    Time complexity:
        ``O(size ** 4)`` polynomial operations

    :param size: dimension of matrices.

    >>> from hessenberg_unitaries.verification import verify_symbolic
    >>> all(verify_symbolic(size).passed for size in range(2, 6))
    True
    """
    if size < _MIN_DIMENSION:
        raise ValueError('`size` should not be less than {min_size}, '
                         'but found {size}.'
                         .format(min_size=_MIN_DIMENSION,
                                 size=size))
    return _verify_symbolic(size)
