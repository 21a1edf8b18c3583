from fractions import Fraction
from numbers import (Integral,
                     Rational,
                     Real)
from typing import (FrozenSet,
                    Iterable,
                    Sequence,
                    Tuple)

from reprit.base import generate_repr

from .errors import ParameterError
from .hints import Scalar


class ParamVector:
    """
    Parameters ``z_1, ..., z_{n-1}`` of an ``n x n`` Hessenberg unitary.

    Rational (and integral) values are stored as ``Fraction``,
    any other real value makes the whole vector floating.
    ``free`` holds 1-based indices of parameters
    which do not affect the matrix they were synthesized for.
    """

    __slots__ = '_free', '_values'

    def __init__(self,
                 values: Sequence[Scalar],
                 *,
                 free: Iterable[int] = ()) -> None:
        values = tuple(values)
        if not values:
            raise ParameterError('Parameters count should be positive, '
                                 'but found none.')
        if not all(isinstance(value, Real) for value in values):
            raise ParameterError('Parameters should be real numbers, '
                                 'but found {values}.'
                                 .format(values=values))
        values = (tuple(Fraction(value) for value in values)
                  if all(isinstance(value, Rational) for value in values)
                  else tuple(float(value) for value in values))
        for index, value in enumerate(values,
                                      start=1):
            if not (0 <= value <= 1):
                raise ParameterError('`z_{index}` should be in [0, 1], '
                                     'but found {value}.'
                                     .format(index=index,
                                             value=value))
        free = frozenset(free)
        for index in free:
            if not (isinstance(index, Integral)
                    and 1 <= index <= len(values)):
                raise ParameterError('Free parameters indices should be '
                                     'in range [1, {count}], '
                                     'but found {index}.'
                                     .format(count=len(values),
                                             index=index))
        self._free, self._values = free, values

    __repr__ = generate_repr(__init__)

    @property
    def free(self) -> FrozenSet[int]:
        return self._free

    @property
    def is_exact(self) -> bool:
        return isinstance(self._values[0], Fraction)

    @property
    def size(self) -> int:
        """Dimension of the matrices parametrized by the vector."""
        return len(self._values) + 1

    @property
    def values(self) -> Tuple[Scalar, ...]:
        return self._values

    def __eq__(self, other: 'ParamVector') -> bool:
        return ((self._values, self._free) == (other._values, other._free)
                if isinstance(other, ParamVector)
                else NotImplemented)

    def __hash__(self) -> int:
        return hash((self._values, self._free))

    def __iter__(self):
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def to_floats(self) -> 'ParamVector':
        return (ParamVector([float(value) for value in self._values],
                            free=self._free)
                if self.is_exact
                else self)
