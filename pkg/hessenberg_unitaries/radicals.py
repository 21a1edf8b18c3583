from typing import Union as _Union

from .core.radical import (Radical as _Radical,
                           RadicalSum as _RadicalSum)

Radical = _Radical
RadicalSum = _RadicalSum


def radical_mul(first: Radical, second: Radical) -> Radical:
    """
    Returns product of given radicals.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.radicals import Radical, radical_mul
    >>> radical_mul(Radical(1, Fraction(1, 2)), Radical(-1, Fraction(1, 2)))
    Radical(-1, Fraction(1, 4))
    >>> radical_mul(Radical(0, 0), Radical(1, Fraction(3, 4)))
    Radical(0, Fraction(0, 1))
    """
    return first * second


def sum_add(sum_: RadicalSum, radical: Radical) -> RadicalSum:
    """
    Returns sum with given radical added,
    merging it with the term of the same square-free class if any.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.radicals import (Radical, RadicalSum,
    ...                                            sum_add)
    >>> sum_add(sum_add(RadicalSum(), Radical(1, Fraction(1, 2))),
    ...         Radical(1, 2)).terms
    {Fraction(1, 2): Fraction(3, 1)}
    """
    return sum_ + radical


def sum_is_zero(sum_: RadicalSum) -> bool:
    """
    Checks if given sum vanishes.

    Square roots of rationals from distinct square-free classes
    are linearly independent over rationals,
    so the sum vanishes iff it has no terms.

    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.radicals import (Radical, RadicalSum,
    ...                                            sum_is_zero)
    >>> radical = Radical(1, Fraction(2, 5))
    >>> sum_is_zero(RadicalSum.from_radicals([radical, -radical]))
    True
    """
    return sum_.is_zero()


def to_float(value: _Union[Radical, RadicalSum]) -> float:
    """
    >>> from fractions import Fraction
    >>> from hessenberg_unitaries.radicals import Radical, to_float
    >>> to_float(Radical(-1, 1))
    -1.0
    """
    return float(value)
