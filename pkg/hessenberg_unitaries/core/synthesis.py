import logging
import math
import warnings
from fractions import Fraction
from numbers import Rational
from typing import (List,
                    Sequence,
                    Set,
                    Union)

from .errors import (Infeasible,
                     ParameterError)
from .hints import Scalar
from .parameters import ParamVector
from .radical import Radical

Value = Union[Scalar, Radical]

logger = logging.getLogger(__name__)


def synthesize_first_row(values: Sequence[Value],
                         *,
                         squared: bool,
                         tolerance: float) -> ParamVector:
    squares = to_squares(values, squared, tolerance)
    size = len(squares)
    # the first entry fixes ``z_{n-1}``,
    # each next one fixes the next lower parameter
    return _solve(squares[:-1], [size - column
                                 for column in range(1, size)],
                  tolerance)


def synthesize_last_column(values: Sequence[Value],
                           *,
                           squared: bool,
                           tolerance: float) -> ParamVector:
    squares = to_squares(values, squared, tolerance)
    size = len(squares)
    # the last entry fixes ``z_1``,
    # each previous one fixes the next higher parameter
    return _solve(squares[:0:-1], [size - row + 1
                                   for row in range(size, 1, -1)],
                  tolerance)


def to_squares(values: Sequence[Value],
               squared: bool,
               tolerance: float) -> List[Scalar]:
    if len(values) < 2:
        raise ParameterError('Vector should have at least 2 entries, '
                             'but found {count}.'
                             .format(count=len(values)))
    if all(isinstance(value, (Rational, Radical)) for value in values):
        result = [Fraction(value.radicand) if isinstance(value, Radical)
                  else Fraction(value) * (1 if squared else value)
                  for value in values]
        if any(isinstance(value, Radical) and value.sign < 0
               or not isinstance(value, Radical) and value < 0
               for value in values):
            raise ParameterError('Vector entries should be nonnegative, '
                                 'but found {values}.'
                                 .format(values=[str(value)
                                                 for value in values]))
        if sum(result) != 1:
            raise Infeasible('Vector should have unit norm, '
                             'but found squares sum {total}.'
                             .format(total=sum(result)))
        return result
    if any(isinstance(value, Radical) for value in values):
        raise ParameterError('Radical entries should not be mixed '
                             'with floating ones, but found {values}.'
                             .format(values=values))
    values = [float(value) for value in values]
    if any(not value >= 0 for value in values):
        raise ParameterError('Vector entries should be nonnegative, '
                             'but found {values}.'
                             .format(values=values))
    result = values if squared else [value * value for value in values]
    if not abs(sum(result) - 1) <= tolerance:
        raise Infeasible('Vector should have unit norm '
                         'within {tolerance}, '
                         'but found squares sum {total}.'
                         .format(tolerance=tolerance,
                                 total=sum(result)))
    return result


def _solve(squares: Sequence[Scalar],
           indices: Sequence[int],
           tolerance: float) -> ParamVector:
    is_exact = isinstance(squares[0], Fraction)
    values = [None] * len(indices)  # type: List[Scalar]
    free = set()  # type: Set[int]
    prefix = 1
    for square, index in zip(squares, indices):
        # floating tolerance bounds entries, not their squares
        if (not prefix) if is_exact else math.sqrt(prefix) <= tolerance:
            if (square if is_exact else math.sqrt(square) > tolerance):
                raise Infeasible('Entry with square {square} should vanish '
                                 'since preceding parameters product does.'
                                 .format(square=square))
            value = square * 0
            free.add(index)
        else:
            value = 1 - square / prefix
            if is_exact:
                assert 0 <= value <= 1, value
            elif not 0. <= value <= 1.:
                if not -tolerance <= value <= 1. + tolerance:
                    raise Infeasible('Entry with square {square} '
                                     'should not exceed '
                                     'preceding parameters product '
                                     '{prefix}.'
                                     .format(square=square,
                                             prefix=prefix))
                warnings.warn('`z_{index}` is clamped to [0, 1] '
                              'from {value}.'
                              .format(index=index,
                                      value=value))
                value = min(max(value, 0.), 1.)
        values[index - 1] = value
        prefix *= value
    if free:
        logger.debug('Parameters %s are unconstrained, set to 0.',
                     sorted(free))
    return ParamVector(values,
                       free=free)
