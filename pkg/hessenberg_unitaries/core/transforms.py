from typing import (Sequence,
                    Tuple)

import numpy
from reprit.base import generate_repr

from .contracts import is_hessenberg
from .errors import NotHessenberg
from .radical import Radical


class EquivalenceTransform:
    """
    Row and column sign changes with row and column permutations.

    Applied to matrix ``M`` it gives matrix with entries
    ``row_signs[i] * col_signs[j] * M[row_perm[i], col_perm[j]]``
    (0-based permutations).
    """

    @classmethod
    def identity(cls, size: int) -> 'EquivalenceTransform':
        return cls((1,) * size, (1,) * size, tuple(range(size)),
                   tuple(range(size)))

    __slots__ = '_col_perm', '_col_signs', '_row_perm', '_row_signs'

    def __init__(self,
                 row_signs: Sequence[int],
                 col_signs: Sequence[int],
                 row_perm: Sequence[int],
                 col_perm: Sequence[int]) -> None:
        row_signs, col_signs, row_perm, col_perm = (
            tuple(row_signs), tuple(col_signs), tuple(row_perm),
            tuple(col_perm)
        )
        size = len(row_signs)
        if not (len(col_signs) == len(row_perm) == len(col_perm) == size):
            raise ValueError('Signs and permutations should have '
                             'the same length, but found {lengths}.'
                             .format(lengths=(size, len(col_signs),
                                              len(row_perm),
                                              len(col_perm))))
        if any(sign not in (-1, 1) for sign in row_signs + col_signs):
            raise ValueError('Signs should be either -1 or 1, '
                             'but found {row_signs}, {col_signs}.'
                             .format(row_signs=row_signs,
                                     col_signs=col_signs))
        if not (sorted(row_perm) == sorted(col_perm) == list(range(size))):
            raise ValueError('Permutations should rearrange '
                             '0, ..., {max_index}, '
                             'but found {row_perm}, {col_perm}.'
                             .format(max_index=size - 1,
                                     row_perm=row_perm,
                                     col_perm=col_perm))
        self._col_perm, self._col_signs, self._row_perm, self._row_signs = (
            col_perm, col_signs, row_perm, row_signs
        )

    __repr__ = generate_repr(__init__)

    @property
    def col_perm(self) -> Tuple[int, ...]:
        return self._col_perm

    @property
    def col_signs(self) -> Tuple[int, ...]:
        return self._col_signs

    @property
    def row_perm(self) -> Tuple[int, ...]:
        return self._row_perm

    @property
    def row_signs(self) -> Tuple[int, ...]:
        return self._row_signs

    @property
    def size(self) -> int:
        return len(self._row_signs)

    def __eq__(self, other: 'EquivalenceTransform') -> bool:
        return (self._key() == other._key()
                if isinstance(other, EquivalenceTransform)
                else NotImplemented)

    def __hash__(self) -> int:
        return hash(self._key())

    def apply(self, matrix: numpy.ndarray) -> numpy.ndarray:
        """
        Transforms given matrix,
        fails if the result loses Hessenberg zero pattern.
        """
        result = self.apply_unchecked(matrix)
        if is_hessenberg(matrix) and not is_hessenberg(result):
            raise NotHessenberg('Transform should preserve '
                                'Hessenberg zero pattern, '
                                'but found {transform!r}.'
                                .format(transform=self))
        return result

    def apply_exact(self, rows: Sequence[Sequence[Radical]]
                    ) -> Tuple[Tuple[Radical, ...], ...]:
        if len(rows) != self.size:
            raise ValueError('Matrix should have size {size}, '
                             'but found {actual}.'
                             .format(size=self.size,
                                     actual=len(rows)))
        result = tuple(
                tuple(_negate_if(rows[row_index][col_index],
                                 row_sign * col_sign < 0)
                      for col_sign, col_index in zip(self._col_signs,
                                                     self._col_perm))
                for row_sign, row_index in zip(self._row_signs,
                                               self._row_perm)
        )
        if (is_hessenberg(_to_pattern(rows))
                and not is_hessenberg(_to_pattern(result))):
            raise NotHessenberg('Transform should preserve '
                                'Hessenberg zero pattern, '
                                'but found {transform!r}.'
                                .format(transform=self))
        return result

    def apply_unchecked(self, matrix: numpy.ndarray) -> numpy.ndarray:
        matrix = numpy.asarray(matrix)
        if matrix.shape != (self.size, self.size):
            raise ValueError('Matrix should have shape {shape}, '
                             'but found {actual}.'
                             .format(shape=(self.size, self.size),
                                     actual=matrix.shape))
        return (numpy.outer(self._row_signs, self._col_signs)
                * matrix[numpy.ix_(self._row_perm, self._col_perm)])

    def compose(self, other: 'EquivalenceTransform'
                ) -> 'EquivalenceTransform':
        """
        Returns transform equivalent to applying ``other`` then ``self``.
        """
        return EquivalenceTransform(
                [sign * other._row_signs[index]
                 for sign, index in zip(self._row_signs, self._row_perm)],
                [sign * other._col_signs[index]
                 for sign, index in zip(self._col_signs, self._col_perm)],
                [other._row_perm[index] for index in self._row_perm],
                [other._col_perm[index] for index in self._col_perm])

    def inverse(self) -> 'EquivalenceTransform':
        row_perm, col_perm = (_invert_permutation(self._row_perm),
                              _invert_permutation(self._col_perm))
        return EquivalenceTransform(
                [self._row_signs[index] for index in row_perm],
                [self._col_signs[index] for index in col_perm],
                row_perm, col_perm)

    def is_identity(self) -> bool:
        return self == EquivalenceTransform.identity(self.size)

    def _key(self) -> Tuple[Tuple[int, ...], ...]:
        return (self._row_signs, self._col_signs, self._row_perm,
                self._col_perm)


def _to_pattern(rows: Sequence[Sequence[Radical]]) -> numpy.ndarray:
    return numpy.array([[float(bool(entry)) for entry in row]
                        for row in rows])


def _negate_if(entry: Radical, condition: bool) -> Radical:
    return -entry if condition else entry


def _invert_permutation(permutation: Sequence[int]) -> Tuple[int, ...]:
    result = [0] * len(permutation)
    for index, value in enumerate(permutation):
        result[value] = index
    return tuple(result)
