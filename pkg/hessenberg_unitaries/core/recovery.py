import logging
from collections import deque
from typing import (List,
                    Optional,
                    Sequence,
                    Tuple,
                    Union)

import numpy
from reprit.base import generate_repr

from .constants import Mode
from .contracts import is_hessenberg
from .errors import (NoMatch,
                     NotHessenberg,
                     NotUnitary,
                     ParameterError)
from .gram import (verify_exact_entries,
                   verify_float_entries)
from .hints import RawMatrix
from .matrices import (HessenbergUnitary,
                       build)
from .parameters import ParamVector
from .radical import Radical
from .transforms import EquivalenceTransform

Block = Tuple[int, int]
SignsMatrix = Sequence[Sequence[int]]

logger = logging.getLogger(__name__)


class RecoveryResult:
    """
    Parameters with transform taking their construction to the input.

    ``blocks`` are 0-based half-open row ranges of diagonal blocks
    delimited by vanishing subdiagonal entries.
    """

    __slots__ = '_blocks', '_exact', '_parameters', '_transform'

    def __init__(self,
                 parameters: ParamVector,
                 transform: EquivalenceTransform,
                 exact: bool,
                 blocks: Sequence[Block]) -> None:
        self._blocks, self._exact, self._parameters, self._transform = (
            tuple(blocks), exact, parameters, transform
        )

    __repr__ = generate_repr(__init__)

    @property
    def blocks(self) -> Tuple[Block, ...]:
        return self._blocks

    @property
    def exact(self) -> bool:
        return self._exact

    @property
    def parameters(self) -> ParamVector:
        return self._parameters

    @property
    def transform(self) -> EquivalenceTransform:
        return self._transform


def recover(matrix: Union[HessenbergUnitary, RawMatrix, numpy.ndarray],
            tolerance: float) -> RecoveryResult:
    if isinstance(matrix, HessenbergUnitary):
        entries = matrix.entries
        is_exact = matrix.mode is Mode.EXACT
    else:
        entries = matrix
        is_exact = all(isinstance(entry, Radical)
                       for row in entries
                       for entry in row)
    size = len(entries)
    if size < 2 or any(len(row) != size for row in entries):
        raise ParameterError('Matrix should be square '
                             'of size not less than 2, '
                             'but found {shape}.'
                             .format(shape=[len(row) for row in entries]))
    return (_recover_exact(entries)
            if is_exact
            else _recover_float(numpy.asarray(entries,
                                              dtype=numpy.float64),
                                tolerance))


def solve_signs(target: SignsMatrix,
                candidate: SignsMatrix) -> Optional[EquivalenceTransform]:
    """
    Returns sign-only transform taking candidate signs to target ones
    on the entries nonzero in both, ``None`` if there is none.

    Columns are visited from the last one,
    each new connected component starts with a positive column sign.
    """
    size = len(target)
    row_signs, col_signs = [0] * size, [0] * size
    for root in reversed(range(size)):
        if col_signs[root]:
            continue
        col_signs[root] = 1
        queue = deque([(False, root)])
        while queue:
            is_row, index = queue.popleft()
            known, unknown = ((row_signs, col_signs)
                              if is_row
                              else (col_signs, row_signs))
            for other in range(size):
                row, column = (index, other) if is_row else (other, index)
                relation = target[row][column] * candidate[row][column]
                if not relation:
                    continue
                required = int(relation * known[index])
                if not unknown[other]:
                    unknown[other] = required
                    queue.append((not is_row, other))
                elif unknown[other] != required:
                    return None
    row_signs = [sign or 1 for sign in row_signs]
    return EquivalenceTransform(row_signs, col_signs, range(size),
                                range(size))


def to_blocks(subdiagonal_vanishes: Sequence[bool]) -> List[Block]:
    size = len(subdiagonal_vanishes) + 1
    starts = [0] + [index
                    for index, vanishes in enumerate(subdiagonal_vanishes,
                                                     start=1)
                    if vanishes]
    return list(zip(starts, starts[1:] + [size]))


def _recover_exact(rows: Sequence[Sequence[Radical]]) -> RecoveryResult:
    size = len(rows)
    report = verify_exact_entries(rows)
    if not report.passed:
        raise NotUnitary('Matrix should be unitary, '
                         'but found Gram violations at {pairs}.'
                         .format(pairs=[(failure.kind, failure.pair)
                                        for failure in report.failures]))
    if any(rows[row][column]
           for row in range(size)
           for column in range(row - 1)):
        raise NotHessenberg('Matrix should be zero '
                            'below its first subdiagonal.')
    parameters = ParamVector([rows[size - index][size - index - 1].radicand
                              for index in range(1, size)])
    blocks = to_blocks([not rows[row][row - 1] for row in range(1, size)])
    _log_blocks(blocks)
    candidate = build(parameters, Mode.EXACT).entries
    transform = solve_signs([[entry.sign for entry in row] for row in rows],
                            [[entry.sign for entry in row]
                             for row in candidate])
    if (transform is None
            or transform.apply_exact(candidate) != tuple(map(tuple, rows))):
        raise NoMatch('Matrix should be equivalent to the construction '
                      'over {values}, but it is not.'
                      .format(values=[str(value)
                                      for value in parameters.values]))
    return RecoveryResult(parameters, transform, True, blocks)


def _recover_float(matrix: numpy.ndarray,
                   tolerance: float) -> RecoveryResult:
    size = len(matrix)
    report = verify_float_entries(matrix, tolerance)
    if not report.passed:
        raise NotUnitary('Gram residual should not exceed {tolerance}, '
                         'but found {residual}.'
                         .format(tolerance=tolerance,
                                 residual=report.max_residual))
    if not is_hessenberg(matrix, tolerance):
        raise NotHessenberg('Entries below the first subdiagonal '
                            'should not exceed {tolerance} in magnitude.'
                            .format(tolerance=tolerance))
    indices = numpy.arange(1, size)
    subdiagonal = matrix[indices, indices - 1]
    vanishes = numpy.abs(subdiagonal) <= tolerance
    squares = numpy.where(vanishes, 0., subdiagonal * subdiagonal)
    parameters = ParamVector(numpy.clip(squares[::-1], 0., 1.).tolist())
    blocks = to_blocks(vanishes.tolist())
    _log_blocks(blocks)
    candidate = build(parameters, Mode.FLOAT).entries
    transform = solve_signs(_to_signs(matrix, tolerance),
                            _to_signs(candidate, tolerance))
    if transform is None:
        raise NoMatch('Matrix signs should be reachable '
                      'from the construction over {values} '
                      'by sign changes, but they are not.'
                      .format(values=parameters.values))
    reconstruction = transform.apply_unchecked(candidate)
    deviation = float(numpy.abs(reconstruction - matrix).max())
    if deviation > tolerance:
        raise NoMatch('Reconstruction should deviate from the matrix '
                      'by at most {tolerance}, but found {deviation}.'
                      .format(tolerance=tolerance,
                              deviation=deviation))
    return RecoveryResult(parameters, transform,
                          bool(numpy.array_equal(reconstruction, matrix)),
                          blocks)


def _log_blocks(blocks: Sequence[Block]) -> None:
    if len(blocks) > 1:
        logger.debug('Vanishing subdiagonal entries split matrix '
                     'into blocks %s.', blocks)


def _to_signs(matrix: numpy.ndarray, tolerance: float) -> numpy.ndarray:
    return numpy.where(numpy.abs(matrix) > tolerance,
                       numpy.sign(matrix), 0.).astype(int)
