from typing import (Sequence as _Sequence,
                    Union as _Union)

import numpy as _numpy

from .core.constants import DEFAULT_TOLERANCE as _DEFAULT_TOLERANCE
from .core.matrices import HessenbergUnitary as _HessenbergUnitary
from .core.parameters import ParamVector as _ParamVector
from .core.radical import Radical as _Radical
from .core.recovery import (RecoveryResult as _RecoveryResult,
                            recover as _recover)
from .core.synthesis import (
    synthesize_first_row as _synthesize_first_row,
    synthesize_last_column as _synthesize_last_column
)
from .core.transforms import EquivalenceTransform as _EquivalenceTransform
from .hints import (RawMatrix as _RawMatrix,
                    Scalar as _Scalar)

EquivalenceTransform = _EquivalenceTransform
RecoveryResult = _RecoveryResult

Vector = _Sequence[_Union[_Scalar, _Radical]]


def recover(matrix: _Union[_HessenbergUnitary, _RawMatrix, _numpy.ndarray],
            tolerance: float = _DEFAULT_TOLERANCE) -> RecoveryResult:
    """
    Returns parameters and sign changes
    which take the constructed matrix to given one.

    Unitarity is checked first,
    then the Hessenberg zero pattern,
    then parameters are read from squared subdiagonal entries
    and the reconstruction is compared with the input.
    Matrices with radical entries are processed exactly,
    others in floating point with given tolerance.

    Returned transform always has identity permutations:
    every real Hessenberg unitary matrix is the constructed one
    up to row and column sign changes,
    so a matrix obtained by permuting columns of the constructed one
    is recovered with sign changes instead.

    :param matrix: real Hessenberg unitary matrix.
    :param tolerance:
        threshold for vanishing entries, Gram residual
        and reconstruction deviation in floating point mode.
    :raises NotUnitary: if matrix is not unitary.
    :raises NotHessenberg: if matrix has nonzeros below the subdiagonal.
    :raises NoMatch: if reconstruction disagrees with the matrix.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.construction import Mode, build
    >>> from hessenberg_unitaries.inversion import recover
    >>> result = recover(build([Fraction(1, 2), Fraction(2, 3)], Mode.EXACT))
    >>> result.parameters.values
    (Fraction(1, 2), Fraction(2, 3))
    >>> result.transform.is_identity()
    True
    >>> recover([[-1., 0.], [0., 1.]]).transform.row_signs
    (-1, 1)
    """
    return _recover(matrix, tolerance)


def synthesize_first_row(values: Vector,
                         *,
                         squared: bool = False,
                         tolerance: float = _DEFAULT_TOLERANCE
                         ) -> _ParamVector:
    """
    Returns parameters of the matrix with given nonnegative first row.

    Parameters behind a vanished product of the previously solved ones
    do not affect the row, they are set to ``0``
    and listed in ``free`` of the result.

    :param values: unit vector with nonnegative entries.
    :param squared: whether ``values`` are squares of the entries.
    :param tolerance:
        tolerance of unit norm and of vanishing entries
        in floating point mode.
    :raises Infeasible:
        if vector is not unit or has nonzero entry
        after a vanished parameters product.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.inversion import synthesize_first_row
    >>> synthesize_first_row([Fraction(1, 3)] * 3,
    ...                      squared=True).values
    (Fraction(1, 2), Fraction(2, 3))
    >>> synthesize_first_row([1, 0, 0, 0]).free
    frozenset({1, 2})
    """
    return _synthesize_first_row(values,
                                 squared=squared,
                                 tolerance=tolerance)


def synthesize_last_column(values: Vector,
                           *,
                           squared: bool = False,
                           tolerance: float = _DEFAULT_TOLERANCE
                           ) -> _ParamVector:
    """
    Returns parameters of the matrix with given nonnegative last column.

    :param values: unit vector with nonnegative entries.
    :param squared: whether ``values`` are squares of the entries.
    :param tolerance:
        tolerance of unit norm and of vanishing entries
        in floating point mode.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.inversion import synthesize_last_column
    >>> synthesize_last_column([Fraction(1, 3), Fraction(1, 6),
    ...                         Fraction(1, 2)],
    ...                        squared=True).values
    (Fraction(1, 2), Fraction(2, 3))
    """
    return _synthesize_last_column(values,
                                   squared=squared,
                                   tolerance=tolerance)
