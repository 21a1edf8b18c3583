from fractions import Fraction
from functools import partial

from hypothesis import strategies

from .constants import Mode
from .hints import (Scalar,
                    Strategy)
from .matrices import (HessenbergUnitary,
                       build,
                       vertex_matrix)
from .parameters import ParamVector

MAX_DENOMINATOR = 100


def to_hessenberg_unitaries(*,
                            min_size: int,
                            max_size: int,
                            exact: bool) -> Strategy[HessenbergUnitary]:
    return (to_parameter_vectors(min_size=min_size,
                                 max_size=max_size,
                                 exact=exact,
                                 interior=False)
            .map(partial(build,
                         mode=Mode.EXACT if exact else Mode.FLOAT)))


def to_parameter_vectors(*,
                         min_size: int,
                         max_size: int,
                         exact: bool,
                         interior: bool) -> Strategy[ParamVector]:
    values = to_parameters(exact=exact,
                           interior=interior)
    return (strategies.integers(min_size, max_size)
            .flatmap(lambda size: strategies.lists(values,
                                                   min_size=size - 1,
                                                   max_size=size - 1))
            .map(ParamVector))


def to_parameters(*, exact: bool, interior: bool) -> Strategy[Scalar]:
    if exact:
        result = strategies.fractions(Fraction(0), Fraction(1),
                                      max_denominator=MAX_DENOMINATOR)
        return (result.filter(lambda value: 0 < value < 1)
                if interior
                else result)
    return strategies.floats(0., 1.,
                             exclude_min=interior,
                             exclude_max=interior)


def to_vertex_matrices(*,
                       min_size: int,
                       max_size: int) -> Strategy[HessenbergUnitary]:
    return (strategies.integers(min_size, max_size)
            .flatmap(lambda size: strategies.lists(strategies.sampled_from(
                    (0, 1)),
                    min_size=size - 1,
                    max_size=size - 1)
                     .map(partial(vertex_matrix, size,
                                  mode=Mode.EXACT))))
