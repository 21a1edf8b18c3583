from .core import hints as _hints

RawMatrix = _hints.RawMatrix
Scalar = _hints.Scalar
Strategy = _hints.Strategy
