from typing import (Iterable,
                    Optional,
                    Tuple,
                    Union)

from reprit.base import generate_repr

from .constants import VerificationMode

Witness = Union[float, str]


class Failure:
    """Violated Gram entry: pair of 1-based rows or columns and witness."""

    __slots__ = '_first', '_kind', '_second', '_witness'

    def __init__(self,
                 kind: str,
                 first: int,
                 second: int,
                 witness: Witness) -> None:
        if kind not in ('rows', 'columns'):
            raise ValueError('Kind should be either "rows" or "columns", '
                             'but found {kind!r}.'
                             .format(kind=kind))
        self._first, self._kind, self._second, self._witness = (
            first, kind, second, witness
        )

    __repr__ = generate_repr(__init__)

    @property
    def first(self) -> int:
        return self._first

    @property
    def kind(self) -> str:
        return self._kind

    @property
    def second(self) -> int:
        return self._second

    @property
    def witness(self) -> Witness:
        return self._witness

    @property
    def pair(self) -> Tuple[int, int]:
        return self._first, self._second

    def __eq__(self, other: 'Failure') -> bool:
        return (self._key() == other._key()
                if isinstance(other, Failure)
                else NotImplemented)

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> Tuple[str, int, int, Witness]:
        return self._kind, self._first, self._second, self._witness


class VerifyReport:
    __slots__ = '_failures', '_max_residual', '_mode'

    def __init__(self,
                 mode: VerificationMode,
                 failures: Iterable[Failure] = (),
                 max_residual: Optional[float] = None) -> None:
        self._mode = VerificationMode(mode)
        self._failures = tuple(sorted(failures,
                                      key=lambda failure: (failure.kind,
                                                           failure.pair)))
        self._max_residual = max_residual

    __repr__ = generate_repr(__init__)

    @property
    def failures(self) -> Tuple[Failure, ...]:
        return self._failures

    @property
    def max_residual(self) -> Optional[float]:
        return self._max_residual

    @property
    def mode(self) -> VerificationMode:
        return self._mode

    @property
    def passed(self) -> bool:
        return not self._failures

    def __bool__(self) -> bool:
        return self.passed
