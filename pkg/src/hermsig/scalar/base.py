"""Shared scalar plumbing: rational coercion, exact sign, zero tests, printing."""
from __future__ import annotations

from fractions import Fraction

import gmpy2
from gmpy2 import mpq, mpz

MPQ = type(mpq(0))
MPZ = type(mpz(0))
ZERO = mpq(0)
ONE = mpq(1)


class ScalarError(ArithmeticError):
    """Base class for scalar arithmetic failures."""


class IncompatibleFieldError(ScalarError):
    """Operands live in quadratic towers that do not embed in one another."""


class IndeterminateSignError(ScalarError):
    """Interval refinement hit the precision cap without separating from zero."""


def as_scalar(x):
    """Coerce Python numbers to exact scalars; exact scalar objects pass through."""
    t = type(x)
    if t is MPQ:
        return x
    if t is int or t is MPZ or t is bool:
        return mpq(x)
    if t is Fraction:
        return mpq(x.numerator, x.denominator)
    if t is str:
        return mpq(x)
    if t is float:
        raise TypeError("floats are not exact scalars; pass a string or Fraction")
    if hasattr(x, "sign") and hasattr(x, "is_zero"):
        return x
    raise TypeError(f"cannot use {t.__name__} as an exact scalar")


def is_rational(x) -> bool:
    return type(x) is MPQ


def sign_of(x) -> int:
    """Exact sign of a real scalar: -1, 0 or +1."""
    if type(x) is MPQ:
        return gmpy2.sign(x)
    if type(x) is int:
        return (x > 0) - (x < 0)
    return x.sign()


def is_zero(x) -> bool:
    """Exact zero test. Intervals count as zero only with a zero witness."""
    if type(x) is MPQ or type(x) is int:
        return x == 0
    return x.is_zero()


def to_float(x) -> float:
    return float(x)


def fmt(x) -> str:
    """Canonical text for a real scalar, readable by the expression parser."""
    if type(x) is MPQ:
        return str(x)
    if type(x) is int:
        return str(x)
    return str(x)


def floor_mpq(x) -> MPZ:
    return mpz(x.numerator) // mpz(x.denominator)


def round_out(lo, hi, bits: int):
    """Round [lo, hi] outward onto the grid 2**-bits."""
    scale = mpz(1) << bits
    lo_r = mpq(floor_mpq(lo * scale), scale)
    hi_r = mpq(-floor_mpq(-hi * scale), scale)
    return lo_r, hi_r
