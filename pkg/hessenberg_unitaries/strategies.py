import warnings as _warnings
from typing import Optional as _Optional

from hypothesis.errors import HypothesisWarning as _HypothesisWarning

from .core.base import (to_hessenberg_unitaries as _to_hessenberg_unitaries,
                        to_parameter_vectors as _to_parameter_vectors,
                        to_vertex_matrices as _to_vertex_matrices)
from .core.constants import (MAX_DEFAULT_DIMENSION as _MAX_DEFAULT_DIMENSION,
                             MIN_DIMENSION as _MIN_DIMENSION)
from .core.matrices import HessenbergUnitary as _HessenbergUnitary
from .core.parameters import ParamVector as _ParamVector
from .hints import Strategy as _Strategy


def parameter_vectors(min_size: int = _MIN_DIMENSION,
                      max_size: _Optional[int] = None,
                      *,
                      exact: bool = False,
                      interior: bool = False) -> _Strategy[_ParamVector]:
    """
    Returns a strategy for parameter vectors.

    :param min_size: lower bound for dimension of parametrized matrices.
    :param max_size: upper bound for dimension of parametrized matrices.
    :param exact: whether parameters should be rational.
    :param interior: whether parameters should lie in ``(0, 1)``.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries import strategies
    >>> min_size, max_size = 3, 6
    >>> vectors = strategies.parameter_vectors(min_size, max_size,
    ...                                        exact=True,
    ...                                        interior=True)
    >>> vector = vectors.example()
    >>> min_size <= vector.size <= max_size
    True
    >>> all(isinstance(value, Fraction) and 0 < value < 1
    ...     for value in vector.values)
    True
    """
    _validate_sizes(min_size, max_size, _MIN_DIMENSION)
    return _to_parameter_vectors(min_size=max(min_size, _MIN_DIMENSION),
                                 max_size=_to_max_size(min_size, max_size),
                                 exact=exact,
                                 interior=interior)


def hessenberg_unitaries(min_size: int = _MIN_DIMENSION,
                         max_size: _Optional[int] = None,
                         *,
                         exact: bool = False
                         ) -> _Strategy[_HessenbergUnitary]:
    """
    Returns a strategy for Hessenberg unitary matrices
    constructed over drawn parameters.

    :param min_size: lower bound for matrices dimension.
    :param max_size: upper bound for matrices dimension.
    :param exact: whether matrices should have radical entries.

    >>> from hessenberg_unitaries import strategies
    >>> from hessenberg_unitaries.construction import Mode
    >>> matrices = strategies.hessenberg_unitaries(2, 5,
    ...                                            exact=True)
    >>> matrix = matrices.example()
    >>> matrix.mode is Mode.EXACT and 2 <= matrix.size <= 5
    True
    """
    _validate_sizes(min_size, max_size, _MIN_DIMENSION)
    return _to_hessenberg_unitaries(min_size=max(min_size, _MIN_DIMENSION),
                                    max_size=_to_max_size(min_size, max_size),
                                    exact=exact)


def vertex_matrices(min_size: int = _MIN_DIMENSION,
                    max_size: _Optional[int] = None
                    ) -> _Strategy[_HessenbergUnitary]:
    """
    Returns a strategy for matrices constructed over parameters
    from ``{0, 1}``, i.e. signed permutation matrices of the family.

    :param min_size: lower bound for matrices dimension.
    :param max_size: upper bound for matrices dimension.

    >>> from hessenberg_unitaries import strategies
    >>> from hessenberg_unitaries.construction import is_signed_permutation
    >>> matrix = strategies.vertex_matrices(max_size=4).example()
    >>> is_signed_permutation(matrix.to_array())
    True
    """
    _validate_sizes(min_size, max_size, _MIN_DIMENSION)
    return _to_vertex_matrices(min_size=max(min_size, _MIN_DIMENSION),
                               max_size=_to_max_size(min_size, max_size))


def _to_max_size(min_size: int, max_size: _Optional[int]) -> int:
    return (max(min_size, _MAX_DEFAULT_DIMENSION)
            if max_size is None
            else max_size)


def _validate_sizes(min_size: int,
                    max_size: _Optional[int],
                    min_expected_size: int,
                    min_size_name: str = 'min_size',
                    max_size_name: str = 'max_size') -> None:
    if max_size is None:
        pass
    elif max_size < min_expected_size:
        raise ValueError('`{max_size_name}` '
                         'should not be less than {min_expected_size}, '
                         'but found {max_size}.'
                         .format(max_size_name=max_size_name,
                                 min_expected_size=min_expected_size,
                                 max_size=max_size))
    elif min_size > max_size:
        raise ValueError('`{min_size_name}` '
                         'should not be greater than `{max_size_name}`, '
                         'but found {min_size}, {max_size}.'
                         .format(min_size_name=min_size_name,
                                 max_size_name=max_size_name,
                                 min_size=min_size,
                                 max_size=max_size))
    elif min_size < 0:
        raise ValueError('`{min_size_name}` '
                         'should not be less than 0, '
                         'but found {min_size}.'
                         .format(min_size_name=min_size_name,
                                 min_size=min_size))
    if min_size < min_expected_size:
        _warnings.warn('`{min_size_name}` is expected to be '
                       'not less than {min_expected_size}, '
                       'but found {min_size}.'
                       .format(min_size_name=min_size_name,
                               min_expected_size=min_expected_size,
                               min_size=min_size),
                       _HypothesisWarning)
