"""Exact real and complex scalars: Q, quadratic towers, cosine fields, intervals."""
from .base import (
    MPQ,
    ONE,
    ZERO,
    IncompatibleFieldError,
    IndeterminateSignError,
    ScalarError,
    as_scalar,
    fmt,
    is_rational,
    is_zero,
    sign_of,
    to_float,
)
from .cplx import I, Complex, abs2, cnum, conj, imag_part, real_part
from .interval import (
    CosineField,
    CosineNumber,
    Interval,
    cos_pi_over,
    interval_from_iv,
    max_prec,
)
from .quad import QuadField, QuadNumber, field_of, sqrt, sqrt_extend

from gmpy2 import mpq as Q

__all__ = [
    "MPQ", "ONE", "ZERO", "Q", "I",
    "ScalarError", "IncompatibleFieldError", "IndeterminateSignError",
    "as_scalar", "fmt", "is_rational", "is_zero", "sign_of", "to_float",
    "Complex", "abs2", "cnum", "conj", "imag_part", "real_part",
    "CosineField", "CosineNumber", "Interval", "cos_pi_over", "interval_from_iv", "max_prec",
    "QuadField", "QuadNumber", "field_of", "sqrt", "sqrt_extend",
]
