"""Complex scalars as pairs of exact reals.

Values with a zero imaginary part are never wrapped: :func:`cnum` returns the
real part itself, so real coefficients stay plain rationals or quad elements.
"""
from __future__ import annotations

from .base import ZERO, as_scalar, fmt, is_zero, sign_of


def cnum(re, im=ZERO):
    """Canonical complex value: the real part alone when ``im`` is zero."""
    if is_zero(im):
        return re
    return Complex(re, im)


def real_part(x):
    return x.re if isinstance(x, Complex) else x


def imag_part(x):
    return x.im if isinstance(x, Complex) else ZERO


def conj(x):
    if isinstance(x, Complex):
        return Complex(x.re, -x.im)
    return x


def abs2(x):
    """|x|^2 as an exact real."""
    if isinstance(x, Complex):
        return x.re * x.re + x.im * x.im
    return x * x


class Complex:
    __slots__ = ("re", "im")

    def __init__(self, re, im):
        self.re = re
        self.im = im

    @staticmethod
    def _parts(other):
        if isinstance(other, Complex):
            return other.re, other.im
        try:
            return as_scalar(other), ZERO
        except TypeError:
            return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return cnum(self.re + p[0], self.im + p[1])

    __radd__ = __add__

    def __neg__(self):
        return Complex(-self.re, -self.im)

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return cnum(self.re - p[0], self.im - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return cnum(p[0] - self.re, p[1] - self.im)

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        if is_zero(d):
            return cnum(self.re * c, self.im * c)
        return cnum(self.re * c - self.im * d, self.re * d + self.im * c)

    __rmul__ = __mul__

    def inverse(self):
        n = self.re * self.re + self.im * self.im
        return Complex(self.re / n, -self.im / n)

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        if is_zero(d):
            return cnum(self.re / c, self.im / c)
        return self * Complex(c, d).inverse()

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return cnum(*p) * self.inverse()

    def __pow__(self, k: int):
        result = 1
        for _ in range(k):
            result = self * result
        return result

    def conjugate(self):
        return Complex(self.re, -self.im)

    def is_zero(self) -> bool:
        return is_zero(self.re) and is_zero(self.im)

    def __eq__(self, other):
        if isinstance(other, Complex):
            return self.re == other.re and self.im == other.im
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return False

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"Complex({self})"

    def __str__(self):
        re, im = self.re, self.im
        if is_zero(re):
            if im == 1:
                return "i"
            if im == -1:
                return "(-i)"
            return f"({fmt(im)}*i)"
        if sign_of(im) < 0:
            mag, op = -im, "-"
        else:
            mag, op = im, "+"
        coef = "i" if mag == 1 else f"{fmt(mag)}*i"
        return f"({fmt(re)} {op} {coef})"


I = Complex(ZERO, ZERO + 1)
