from fractions import Fraction
from typing import (Sequence,
                    TypeVar,
                    Union)

from hypothesis.strategies import SearchStrategy as _SearchStrategy

Domain = TypeVar('Domain')
Scalar = Union[Fraction, float]
RawMatrix = Sequence[Sequence[Scalar]]
Strategy = _SearchStrategy
