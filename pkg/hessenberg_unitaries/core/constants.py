from enum import (Enum,
                  unique)


@unique
class Mode(str, Enum):
    EXACT = 'exact'
    FLOAT = 'float'


@unique
class VerificationMode(str, Enum):
    EXACT = 'exact'
    FLOAT = 'float'
    SYMBOLIC = 'symbolic'


@unique
class Format(str, Enum):
    CSV = 'csv'
    JSON = 'json'
    TEXT = 'text'


DEFAULT_TOLERANCE = 1e-10
MIN_DIMENSION = 2
MAX_DEFAULT_DIMENSION = 10
MAX_ENUMERATION_DIMENSION = 20
MAX_SEED = 2 ** 64 - 1
