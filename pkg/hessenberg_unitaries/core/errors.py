class ParameterError(ValueError):
    """Parameters are out of range, miscounted or of the wrong kind."""


class NotUnitary(ValueError):
    """Gram residual of a matrix exceeds the tolerance."""


class NotHessenberg(ValueError):
    """Matrix has nonzero entries below its first subdiagonal."""


class NoMatch(ValueError):
    """Reconstruction from recovered parameters disagrees with the input."""


class Infeasible(ValueError):
    """Prescribed row or column cannot be realized by the family."""


class DocumentError(ValueError):
    """Interchange document is malformed."""
