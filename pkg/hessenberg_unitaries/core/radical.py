import math
import re
from fractions import Fraction
from typing import (Dict,
                    Iterable,
                    Mapping,
                    Optional,
                    Union)

from reprit.base import generate_repr

from .errors import DocumentError
from .utils import (integer_sqrt,
                     rational_sqrt)

_RADICAL_PATTERN = re.compile(r'(?P<sign>[-+]?)sqrt\((?P<radicand>[^()]+)\)')


class Radical:
    """
    Signed square root of a nonnegative rational: ``sign * sqrt(radicand)``.
    """

    @classmethod
    def from_square(cls, square: Fraction, sign: int = 1) -> 'Radical':
        """Creates radical with given square, zero square wipes the sign."""
        square = Fraction(square)
        return cls(sign if square else 0, square)

    @classmethod
    def from_string(cls, string: str) -> 'Radical':
        """
        Parses ``0``, ``1``, ``-1``, ``sqrt(p/q)`` and ``-sqrt(p/q)`` forms.
        """
        string = string.strip()
        match = _RADICAL_PATTERN.fullmatch(string)
        if match is None:
            try:
                value = Fraction(string)
            except (ValueError, ZeroDivisionError):
                raise DocumentError('Radical should be either rational '
                                    'or in "[-]sqrt(p/q)" form, '
                                    'but found {string!r}.'
                                    .format(string=string)) from None
            if value not in (-1, 0, 1):
                raise DocumentError('Rational radical should be '
                                    '0, 1 or -1, but found {string!r}.'
                                    .format(string=string))
            return cls.from_square(value * value, int(value) or 1)
        try:
            radicand = Fraction(match['radicand'])
        except (ValueError, ZeroDivisionError):
            raise DocumentError('Radicand should be rational, '
                                'but found {string!r}.'
                                .format(string=string)) from None
        if radicand < 0:
            raise DocumentError('Radicand should be nonnegative, '
                                'but found {string!r}.'
                                .format(string=string))
        return cls.from_square(radicand, -1 if match['sign'] == '-' else 1)

    __slots__ = '_radicand', '_sign'

    def __init__(self, sign: int, radicand: Fraction) -> None:
        radicand = Fraction(radicand)
        if sign not in (-1, 0, 1):
            raise ValueError('Sign should be -1, 0 or 1, but found {sign}.'
                             .format(sign=sign))
        if radicand < 0:
            raise ValueError('Radicand should be nonnegative, '
                             'but found {radicand}.'
                             .format(radicand=radicand))
        if (sign == 0) is not (radicand == 0):
            raise ValueError('Sign should be zero iff radicand is zero, '
                             'but found {sign}, {radicand}.'
                             .format(sign=sign,
                                     radicand=radicand))
        self._sign, self._radicand = sign, radicand

    __repr__ = generate_repr(__init__)

    @property
    def radicand(self) -> Fraction:
        return self._radicand

    @property
    def sign(self) -> int:
        return self._sign

    def __bool__(self) -> bool:
        return bool(self._sign)

    def __eq__(self, other: 'Radical') -> bool:
        return ((self._sign, self._radicand) == (other._sign, other._radicand)
                if isinstance(other, Radical)
                else NotImplemented)

    def __float__(self) -> float:
        return self._sign * math.sqrt(self._radicand)

    def __hash__(self) -> int:
        return hash((self._sign, self._radicand))

    def __mul__(self, other: 'Radical') -> 'Radical':
        return (Radical(self._sign * other._sign,
                        self._radicand * other._radicand)
                if isinstance(other, Radical)
                else NotImplemented)

    def __neg__(self) -> 'Radical':
        return Radical(-self._sign, self._radicand)

    def __str__(self) -> str:
        if not self._sign:
            return '0'
        elif self._radicand == 1:
            return '1' if self._sign > 0 else '-1'
        return ('{}sqrt({})'
                .format('' if self._sign > 0 else '-', self._radicand))


class RadicalSum:
    """
    Finite sum ``sum(coefficient * sqrt(representative))``
    with at most one representative per square-free class.

    Representatives are never reduced to square-free form,
    classes are detected by testing whether ratio is a rational square.
    Each class is stored under a representative
    determined by the class total alone,
    so the map does not depend on the order of additions.
    Perfect squares always go to the representative ``1``.
    """

    @classmethod
    def from_radicals(cls, radicals: Iterable[Radical]) -> 'RadicalSum':
        result = cls()
        for radical in radicals:
            result = result + radical
        return result

    __slots__ = '_terms',

    def __init__(self,
                 terms: Optional[Mapping[Fraction, Fraction]] = None) -> None:
        self._terms = {}  # type: Dict[Fraction, Fraction]
        for representative, coefficient in (terms or {}).items():
            self._terms = _add_term(self._terms, Fraction(representative),
                                    Fraction(coefficient))
        self._terms = _normalize(self._terms)

    __repr__ = generate_repr(__init__)

    @property
    def terms(self) -> Dict[Fraction, Fraction]:
        return dict(self._terms)

    def __add__(self, other: Union[Radical, 'RadicalSum']) -> 'RadicalSum':
        if isinstance(other, Radical):
            if not other.sign:
                return self
            return _from_terms(_add_term(self._terms, other.radicand,
                                         Fraction(other.sign)))
        elif isinstance(other, RadicalSum):
            terms = self._terms
            for representative, coefficient in other._terms.items():
                terms = _add_term(terms, representative, coefficient)
            return _from_terms(terms)
        return NotImplemented

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: 'RadicalSum') -> bool:
        return (not (self - other)
                if isinstance(other, RadicalSum)
                else NotImplemented)

    def __float__(self) -> float:
        return math.fsum(coefficient * math.sqrt(representative)
                         for representative, coefficient
                         in self._terms.items())

    __hash__ = None

    def __neg__(self) -> 'RadicalSum':
        return _from_terms({representative: -coefficient
                            for representative, coefficient
                            in self._terms.items()})

    def __str__(self) -> str:
        return (' + '.join('{}*sqrt({})'.format(coefficient, representative)
                           for representative, coefficient
                           in sorted(self._terms.items()))
                or '0')

    def __sub__(self, other: 'RadicalSum') -> 'RadicalSum':
        return (self + (-other)
                if isinstance(other, RadicalSum)
                else NotImplemented)

    def is_zero(self) -> bool:
        # square roots from distinct square-free classes
        # are linearly independent over rationals
        return not self._terms


def _add_term(terms: Dict[Fraction, Fraction],
              radicand: Fraction,
              coefficient: Fraction) -> Dict[Fraction, Fraction]:
    result = dict(terms)
    if not radicand or not coefficient:
        return result
    for representative in result:
        ratio_root = rational_sqrt(radicand / representative)
        if ratio_root is not None:
            total = result[representative] + coefficient * ratio_root
            if total:
                result[representative] = total
            else:
                del result[representative]
            return result
    root = rational_sqrt(radicand)
    if root is None:
        result[radicand] = coefficient
    else:
        result[Fraction(1)] = coefficient * root
    return result


def _from_terms(terms: Dict[Fraction, Fraction]) -> RadicalSum:
    result = RadicalSum()
    result._terms = _normalize(terms)
    return result


def _normalize(terms: Dict[Fraction, Fraction]) -> Dict[Fraction, Fraction]:
    result = {}  # type: Dict[Fraction, Fraction]
    for representative, coefficient in terms.items():
        # ``coefficient * sqrt(representative) == sign * sqrt(total)``
        total = coefficient * coefficient * representative
        sign = 1 if coefficient > 0 else -1
        numerator, denominator = total.numerator, total.denominator
        numerator_root = integer_sqrt(numerator)
        denominator_root = integer_sqrt(denominator)
        if numerator_root is None and denominator_root is None:
            result[total] = Fraction(sign)
        elif numerator_root is None:
            result[Fraction(numerator)] = Fraction(sign, denominator_root)
        elif denominator_root is None:
            result[Fraction(1, denominator)] = Fraction(sign * numerator_root)
        else:
            result[Fraction(1)] = Fraction(sign * numerator_root,
                                           denominator_root)
    return result
