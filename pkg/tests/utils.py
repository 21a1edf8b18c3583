from fractions import Fraction
from itertools import permutations
from typing import (Iterable,
                    Iterator,
                    Optional,
                    Sequence,
                    Tuple,
                    TypeVar)

import numpy
from hypothesis import strategies

from hessenberg_unitaries.core.contracts import (has_canonical_signs,
                                                 has_valid_size)
from hessenberg_unitaries.core.radical import Radical
from hessenberg_unitaries.hints import Strategy

has_canonical_signs = has_canonical_signs
has_valid_size = has_valid_size
Domain = TypeVar('Domain')
SizesPair = Tuple[int, Optional[int]]
ExactRows = Tuple[Tuple[Radical, ...], ...]
GRID = (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4),
        Fraction(1))


def to_pairs(strategy: Strategy[Domain]) -> Strategy[Tuple[Domain, Domain]]:
    return strategies.tuples(strategy, strategy)


def sort_pair(pair: Tuple[Domain, Domain]) -> Tuple[Domain, Domain]:
    first, second = pair
    return (first, second) if first <= second else (second, first)


def to_exact_rows(rows: Sequence[str]) -> ExactRows:
    return tuple(tuple(map(Radical.from_string, row.split()))
                 for row in rows)


def to_strings(rows: Iterable[Iterable[Radical]]) -> Tuple[Tuple[str, ...],
                                                           ...]:
    return tuple(tuple(map(str, row)) for row in rows)


def to_rationals(generator: numpy.random.Generator,
                 count: int,
                 *,
                 max_denominator: int = 50) -> Tuple[Fraction, ...]:
    """Draws rationals from ``[0, 1]`` hitting both endpoints often."""
    result = []
    for _ in range(count):
        kind = generator.integers(4)
        if kind == 0:
            result.append(Fraction(0))
        elif kind == 1:
            result.append(Fraction(1))
        else:
            denominator = int(generator.integers(2, max_denominator + 1))
            result.append(Fraction(int(generator.integers(1, denominator)),
                                   denominator))
    return tuple(result)


def to_sign_vectors(size: int) -> Iterator[Tuple[int, ...]]:
    for mask in range(2 ** size):
        yield tuple(-1 if mask >> index & 1 else 1 for index in range(size))


def to_permutations_pairs(size: int
                          ) -> Iterator[Tuple[Tuple[int, ...],
                                              Tuple[int, ...]]]:
    for row_perm in permutations(range(size)):
        for col_perm in permutations(range(size)):
            yield row_perm, col_perm


def max_deviation(first: numpy.ndarray, second: numpy.ndarray) -> float:
    return float(numpy.abs(numpy.asarray(first)
                           - numpy.asarray(second)).max())

