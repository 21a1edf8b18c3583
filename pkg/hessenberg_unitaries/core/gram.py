from itertools import combinations_with_replacement
from typing import (List,
                    Sequence)

import numpy

from .constants import VerificationMode
from .radical import (Radical,
                      RadicalSum)
from .reports import (Failure,
                      VerifyReport)

_ONE = RadicalSum({1: 1})


def verify_exact_entries(rows: Sequence[Sequence[Radical]]) -> VerifyReport:
    size = len(rows)
    failures = []  # type: List[Failure]
    for kind, vectors in (('rows', rows),
                          ('columns', tuple(zip(*rows)))):
        for first, second in combinations_with_replacement(range(size), 2):
            inner_product = RadicalSum.from_radicals(
                    first_entry * second_entry
                    for first_entry, second_entry in zip(vectors[first],
                                                         vectors[second])
            )
            if (inner_product != _ONE
                    if first == second
                    else not inner_product.is_zero()):
                failures.append(Failure(kind, first + 1, second + 1,
                                        str(inner_product)))
    return VerifyReport(VerificationMode.EXACT, failures)


def verify_float_entries(matrix: numpy.ndarray,
                         tolerance: float) -> VerifyReport:
    identity = numpy.eye(len(matrix))
    failures = []  # type: List[Failure]
    max_residual = 0.
    for kind, gram in (('columns', matrix.T @ matrix),
                       ('rows', matrix @ matrix.T)):
        residuals = numpy.nan_to_num(numpy.abs(gram - identity),
                                     nan=numpy.inf)
        max_residual = max(max_residual, float(residuals.max()))
        for first, second in zip(*numpy.nonzero(residuals > tolerance)):
            if first <= second:
                failures.append(Failure(kind, int(first) + 1,
                                        int(second) + 1,
                                        float(residuals[first, second])))
    return VerifyReport(VerificationMode.FLOAT, failures, max_residual)
