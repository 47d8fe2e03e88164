"""Exact scalar, polynomial and matrix arithmetic.

Integers are Python ints and rationals are ``fractions.Fraction`` (always
stored in lowest terms with a positive denominator).
"""

from .modpoly import ModPolynomial, mod_radical
from .resultant import discriminant, resultant, sylvester_matrix
from .matrix import charpoly, det, det_int, inverse

__all__ = [
    "ModPolynomial",
    "mod_radical",
    "resultant",
    "discriminant",
    "sylvester_matrix",
    "charpoly",
    "det",
    "det_int",
    "inverse",
]
