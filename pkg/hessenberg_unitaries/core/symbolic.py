"""
Symbolic unitarity proof over indeterminate parameters.

Squared entries are kept factored into atoms ``z_k`` and ``1 - z_k``,
so inner products of rows (columns) split into a common radical factor
and a polynomial bracket which has to vanish identically.
"""
import logging
from collections import Counter
from typing import (List,
                    Optional,
                    Tuple)

from .constants import VerificationMode
from .entries import entry_sign
from .polynomial import MultiPoly
from .reports import (Failure,
                      VerifyReport)

Atom = Tuple[int, bool]
Factors = Counter

logger = logging.getLogger(__name__)


class FactorizationError(ValueError):
    pass


def factors_to_polynomial(factors: Factors, arity: int) -> MultiPoly:
    result = MultiPoly.constant(1, arity)
    one = MultiPoly.constant(1, arity)
    for (index, complemented), multiplicity in sorted(factors.items()):
        variable = MultiPoly.variable(index, arity)
        atom = one - variable if complemented else variable
        for _ in range(multiplicity):
            result = result * atom
    return result


def to_common_factor(size: int,
                     first: int,
                     second: int,
                     *,
                     rows: bool) -> Factors:
    """
    Returns factored common radicand of entries products
    for 1-based rows (or columns) ``first < second``.
    """
    assert first < second, (first, second)
    result = Counter()  # type: Factors
    shift = 1 if rows else 0
    _add_complement(result, size, size - first + shift)
    _add_complement(result, size, size - second + shift)
    result.update((index, False)
                  for index in range(size - second + 1, size - first + 1))
    return result


def to_inner_product_bracket(size: int,
                             first: int,
                             second: int,
                             *,
                             rows: bool) -> Tuple[Factors, MultiPoly]:
    """
    Returns common factor ``G`` and polynomial ``P``
    with inner product of given rows (columns) being ``sqrt(G) * P``.
    """
    arity = size - 1
    common_factor = to_common_factor(size, first, second,
                                     rows=rows)
    result = MultiPoly(arity)
    for index in range(1, size + 1):
        first_position, second_position = (((first, index), (second, index))
                                           if rows
                                           else ((index, first),
                                                 (index, second)))
        first_factors = to_squared_entry_factors(size, *first_position)
        second_factors = to_squared_entry_factors(size, *second_position)
        if first_factors is None or second_factors is None:
            continue
        quotient = _divide(first_factors + second_factors, common_factor)
        if quotient is None:
            raise FactorizationError('Radicand at {index} is not divisible '
                                     'by common factor {factor}.'
                                     .format(index=index,
                                             factor=_factors_to_string(
                                                     common_factor)))
        root = _sqrt(quotient)
        if root is None:
            raise FactorizationError('Cofactor at {index} is not a square: '
                                     '{factors}.'
                                     .format(index=index,
                                             factors=_factors_to_string(
                                                     quotient)))
        term = factors_to_polynomial(root, arity)
        result = (result + term
                  if (entry_sign(*first_position)
                      == entry_sign(*second_position))
                  else result - term)
    return common_factor, result


def to_squared_entry_factors(size: int,
                             row: int,
                             column: int) -> Optional[Factors]:
    """
    Returns factored squared entry, ``None`` for structural zeros.
    """
    if column < row - 1:
        return None
    elif column == row - 1:
        return Counter({(size - row + 1, False): 1})
    result = Counter()  # type: Factors
    _add_complement(result, size, size - row + 1)
    _add_complement(result, size, size - column)
    result.update((index, False)
                  for index in range(size - column + 1, size - row + 1))
    return result


def verify_symbolic(size: int) -> VerifyReport:
    arity = size - 1
    one = MultiPoly.constant(1, arity)
    failures = []  # type: List[Failure]
    for rows, kind in ((True, 'rows'), (False, 'columns')):
        for first in range(1, size + 1):
            norm = MultiPoly(arity)
            for index in range(1, size + 1):
                factors = to_squared_entry_factors(
                        size, *((first, index) if rows else (index, first))
                )
                if factors is None:
                    continue
                term = factors_to_polynomial(factors, arity)
                assert term.is_multilinear(), term
                norm = norm + term
            if norm != one:
                failures.append(Failure(kind, first, first, str(norm)))
        for first in range(1, size):
            for second in range(first + 1, size + 1):
                try:
                    _, bracket = to_inner_product_bracket(size, first,
                                                          second,
                                                          rows=rows)
                except FactorizationError as error:
                    failures.append(Failure(kind, first, second, str(error)))
                    continue
                if bracket:
                    failures.append(Failure(kind, first, second,
                                            str(bracket)))
    logger.debug('Checked %d norms and %d inner products '
                 'of %d x %d matrix symbolically.',
                 2 * size, size * (size - 1), size, size)
    return VerifyReport(VerificationMode.SYMBOLIC, failures)


def _add_complement(factors: Factors, size: int, index: int) -> None:
    # ``1 - z_0`` and ``1 - z_n`` are units
    if 0 < index < size:
        factors[index, True] += 1


def _divide(dividend: Factors, divisor: Factors) -> Optional[Factors]:
    if any(dividend[atom] < multiplicity
           for atom, multiplicity in divisor.items()):
        return None
    result = Counter(dividend)
    result.subtract(divisor)
    return +result


def _factors_to_string(factors: Factors) -> str:
    return ('*'.join('{}^{}'.format(('(1 - z_{})' if complemented
                                     else 'z_{}').format(index),
                                    multiplicity)
                     for (index, complemented), multiplicity
                     in sorted(factors.items()))
            or '1')


def _sqrt(factors: Factors) -> Optional[Factors]:
    if any(multiplicity % 2 for multiplicity in factors.values()):
        return None
    return Counter({atom: multiplicity // 2
                    for atom, multiplicity in factors.items()})
