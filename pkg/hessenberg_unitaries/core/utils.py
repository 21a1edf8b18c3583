from fractions import Fraction
from functools import reduce
from math import isqrt
from operator import mul
from typing import (Iterable,
                    Optional,
                    Sequence,
                    Tuple)

from .hints import (Domain,
                    Scalar)


def integer_sqrt(value: int) -> Optional[int]:
    if value < 0:
        return None
    root = isqrt(value)
    return root if root * root == value else None


def product(values: Iterable[Scalar], start: Scalar = 1) -> Scalar:
    return reduce(mul, values, start)


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    # ``Fraction`` keeps lowest terms,
    # so the root is rational iff both parts are perfect squares
    numerator_root = integer_sqrt(value.numerator)
    if numerator_root is None:
        return None
    denominator_root = integer_sqrt(value.denominator)
    return (None
            if denominator_root is None
            else Fraction(numerator_root, denominator_root))


def to_rows(values: Sequence[Domain],
            size: int) -> Tuple[Tuple[Domain, ...], ...]:
    assert len(values) == size * size, (len(values), size)
    return tuple(tuple(values[offset:offset + size])
                 for offset in range(0, len(values), size))
