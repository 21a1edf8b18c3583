"""Real Hessenberg unitary matrices: construction, verification, inversion."""

__version__ = '0.1.0-alpha'
