"""Exact polynomial arithmetic in S = k[x, y, z, w] and exact linear algebra."""

from .field import QQ, FieldSpec, rational_reconstruction
from .linalg import ExactMatrix, kernel_basis
from .parse import PolySyntaxError, parse_polynomial
from .poly import (
    VARS,
    NotDivisible,
    Poly,
    binom3,
    det,
    det_bareiss,
    dim_s,
    gcd_list,
    grevlex_key,
    is_squarefree,
    monomial_basis,
    partials,
    poly_gcd,
)

__all__ = [
    "QQ", "FieldSpec", "rational_reconstruction", "ExactMatrix", "kernel_basis",
    "PolySyntaxError", "parse_polynomial", "VARS", "NotDivisible", "Poly", "binom3",
    "det", "det_bareiss", "dim_s", "gcd_list", "grevlex_key", "is_squarefree",
    "monomial_basis", "partials", "poly_gcd",
]
