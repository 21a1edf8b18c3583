from fractions import Fraction
from typing import (Dict,
                    Mapping,
                    Optional,
                    Sequence,
                    Tuple)

from reprit.base import generate_repr

from .hints import Scalar

Exponents = Tuple[int, ...]


class MultiPoly:
    """
    Multivariate polynomial with rational coefficients
    over indeterminates ``z_1, ..., z_arity``.

    Stored as a map from dense exponent vectors to nonzero coefficients,
    so equal polynomials have identical maps.
    """

    @classmethod
    def constant(cls, value: Scalar, arity: int) -> 'MultiPoly':
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def variable(cls, index: int, arity: int) -> 'MultiPoly':
        """Returns indeterminate ``z_index`` (1-based)."""
        if not 1 <= index <= arity:
            raise ValueError('Index should be in range [1, {arity}], '
                             'but found {index}.'
                             .format(arity=arity,
                                     index=index))
        exponents = [0] * arity
        exponents[index - 1] = 1
        return cls(arity, {tuple(exponents): 1})

    __slots__ = '_arity', '_terms'

    def __init__(self,
                 arity: int,
                 terms: Optional[Mapping[Exponents, Scalar]] = None) -> None:
        if arity < 0:
            raise ValueError('Arity should be nonnegative, '
                             'but found {arity}.'
                             .format(arity=arity))
        self._arity = arity
        self._terms = {}  # type: Dict[Exponents, Fraction]
        for exponents, coefficient in (terms or {}).items():
            if len(exponents) != arity:
                raise ValueError('Exponents should have length {arity}, '
                                 'but found {exponents}.'
                                 .format(arity=arity,
                                         exponents=exponents))
            coefficient = Fraction(coefficient)
            if coefficient:
                self._terms[tuple(exponents)] = coefficient

    __repr__ = generate_repr(__init__)

    @property
    def arity(self) -> int:
        return self._arity

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def __add__(self, other: 'MultiPoly') -> 'MultiPoly':
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._validate_arity(other)
        terms = dict(self._terms)
        for exponents, coefficient in other._terms.items():
            total = terms.get(exponents, 0) + coefficient
            if total:
                terms[exponents] = total
            else:
                terms.pop(exponents, None)
        return self._from_terms(terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: 'MultiPoly') -> bool:
        return ((self._arity, self._terms) == (other._arity, other._terms)
                if isinstance(other, MultiPoly)
                else NotImplemented)

    def __hash__(self) -> int:
        return hash((self._arity, frozenset(self._terms.items())))

    def __mul__(self, other: 'MultiPoly') -> 'MultiPoly':
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._validate_arity(other)
        terms = {}  # type: Dict[Exponents, Fraction]
        for exponents, coefficient in self._terms.items():
            for other_exponents, other_coefficient in other._terms.items():
                key = tuple(exponent + other_exponent
                            for exponent, other_exponent
                            in zip(exponents, other_exponents))
                total = (terms.get(key, 0)
                         + coefficient * other_coefficient)
                if total:
                    terms[key] = total
                else:
                    terms.pop(key, None)
        return self._from_terms(terms)

    def __neg__(self) -> 'MultiPoly':
        return self._from_terms({exponents: -coefficient
                                 for exponents, coefficient
                                 in self._terms.items()})

    def __str__(self) -> str:
        return (' + '.join(_monomial_to_string(exponents, coefficient)
                           for exponents, coefficient
                           in sorted(self._terms.items(),
                                     reverse=True))
                or '0')

    def __sub__(self, other: 'MultiPoly') -> 'MultiPoly':
        return (self + (-other)
                if isinstance(other, MultiPoly)
                else NotImplemented)

    def degree(self) -> int:
        return max((sum(exponents) for exponents in self._terms),
                   default=-1)

    def evaluate(self, values: Sequence[Scalar]) -> Scalar:
        if len(values) != self._arity:
            raise ValueError('Values count should be {arity}, '
                             'but found {count}.'
                             .format(arity=self._arity,
                                     count=len(values)))
        result = 0
        for exponents, coefficient in self._terms.items():
            term = coefficient
            for value, exponent in zip(values, exponents):
                term *= value ** exponent
            result += term
        return result

    def is_constant(self) -> bool:
        return all(not any(exponents) for exponents in self._terms)

    def is_multilinear(self) -> bool:
        return all(exponent <= 1
                   for exponents in self._terms
                   for exponent in exponents)

    def _from_terms(self, terms: Dict[Exponents, Fraction]) -> 'MultiPoly':
        result = MultiPoly(self._arity)
        result._terms = terms
        return result

    def _validate_arity(self, other: 'MultiPoly') -> None:
        if other._arity != self._arity:
            raise ValueError('Arities should be equal, '
                             'but found {arity}, {other_arity}.'
                             .format(arity=self._arity,
                                     other_arity=other._arity))


def _monomial_to_string(exponents: Exponents, coefficient: Fraction) -> str:
    factors = ['z_{}{}'.format(index, '' if exponent == 1
                               else '^{}'.format(exponent))
               for index, exponent in enumerate(exponents,
                                                start=1)
               if exponent]
    if not factors:
        return str(coefficient)
    elif coefficient == 1:
        return '*'.join(factors)
    return '*'.join(['({})'.format(coefficient)] + factors)
