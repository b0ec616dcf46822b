"""Certified real intervals with rational endpoints, and exact cosine fields.

An :class:`Interval` carries a refinement closure so that ``sign()`` can
tighten the enclosure by doubling precision.  When the value has an exact
shadow (a rational, quad element or :class:`CosineNumber`) a zero shadow is
accepted as a zero witness; otherwise sign determination stops at the
precision cap and raises :class:`IndeterminateSignError`.

:class:`CosineField` realizes ``Q(2 cos(pi / 2**m))`` exactly.  Its elements
are used as shadows for coefficients that live beyond the depth-two towers.
"""
from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from functools import lru_cache

import mpmath
from gmpy2 import mpq, mpz

from .base import (
    MPQ,
    ONE,
    ZERO,
    IncompatibleFieldError,
    IndeterminateSignError,
    as_scalar,
    round_out,
    sign_of,
)

DEFAULT_PREC = 128


def max_prec() -> int:
    """Precision cap in bits, overridable through ``HERMSIG_MAX_PREC``."""
    return int(os.environ.get("HERMSIG_MAX_PREC", "8192"))


def enclose(x, bits: int):
    """Rational (lo, hi) bounds on an exact real scalar."""
    if type(x) is MPQ:
        return x, x
    if type(x) is int:
        return mpq(x), mpq(x)
    return x.enclose(bits)


class Interval:
    """Closed interval [lo, hi] with rational endpoints on a 2**-prec grid."""

    __slots__ = ("lo", "hi", "prec", "_refine", "shadow")

    def __init__(self, lo, hi, prec: int = DEFAULT_PREC, refine=None, shadow=None):
        lo, hi = mpq(lo), mpq(hi)
        if lo > hi:
            raise ValueError("interval with lo > hi")
        self.lo = lo
        self.hi = hi
        self.prec = prec
        self._refine = refine
        self.shadow = shadow

    @classmethod
    def of(cls, x, prec: int = DEFAULT_PREC) -> Interval:
        """Enclose an exact scalar; the result keeps it as a shadow."""
        if isinstance(x, Interval):
            return x
        x = as_scalar(x)
        lo, hi = enclose(x, prec)
        return cls(lo, hi, prec, refine=lambda p: cls.of(x, p), shadow=x)

    # -- refinement -----------------------------------------------------------------
    def refined(self, prec: int) -> Interval:
        if prec <= self.prec or self._refine is None:
            return self
        return self._refine(prec)

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        lo, hi = enclose(as_scalar(x), self.prec + 64)
        return self.lo <= lo and hi <= self.hi

    def is_zero(self) -> bool:
        if self.shadow is not None:
            return sign_of(self.shadow) == 0
        return self.lo == 0 and self.hi == 0

    def sign(self) -> int:
        if self.shadow is not None and type(self.shadow) is MPQ:
            return sign_of(self.shadow)
        cur = self
        prec = self.prec
        cap = max_prec()
        while True:
            if cur.lo > 0:
                return 1
            if cur.hi < 0:
                return -1
            if cur.shadow is not None and cur.is_zero():
                return 0
            if cur.lo == 0 and cur.hi == 0 and cur._refine is None:
                return 0
            if prec >= cap or cur._refine is None:
                raise IndeterminateSignError(
                    f"interval [{float(cur.lo):.3e}, {float(cur.hi):.3e}] still straddles 0 "
                    f"at {prec} bits; raise HERMSIG_MAX_PREC or supply an exact shadow"
                )
            prec = min(2 * prec, cap)
            cur = cur.refined(prec)

    # -- arithmetic -------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Interval):
            return other
        try:
            other = as_scalar(other)
        except TypeError:
            return NotImplemented
        if hasattr(other, "im"):
            return NotImplemented
        return Interval.of(other, self.prec)

    def _combine(self, other, lo, hi, op, shadow):
        prec = min(self.prec, other.prec)
        lo, hi = round_out(lo, hi, prec)
        a, b = self, other

        def refine(p):
            return op(a.refined(p), b.refined(p))

        return Interval(lo, hi, prec, refine, shadow)

    @staticmethod
    def _shadow(a, b, f):
        if a.shadow is None or b.shadow is None:
            return None
        try:
            return f(a.shadow, b.shadow)
        except (TypeError, IncompatibleFieldError):
            return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        sh = self._shadow(self, other, lambda x, y: x + y)
        return self._combine(other, self.lo + other.lo, self.hi + other.hi, Interval.__add__, sh)

    __radd__ = __add__

    def __neg__(self):
        a = self
        sh = None if self.shadow is None else -self.shadow
        return Interval(-self.hi, -self.lo, self.prec, lambda p: -a.refined(p), sh)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ps = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        sh = self._shadow(self, other, lambda x, y: x * y)
        return self._combine(other, min(ps), max(ps), Interval.__mul__, sh)

    __rmul__ = __mul__

    def inverse(self) -> Interval:
        cur = self
        if cur.lo <= 0 <= cur.hi:
            s = cur.sign()
            if s == 0:
                raise ZeroDivisionError("interval inverse of zero")
            prec = cur.prec
            while cur.lo <= 0 <= cur.hi:
                prec *= 2
                cur = cur.refined(prec)
        a = cur
        lo, hi = round_out(ONE / a.hi, ONE / a.lo, a.prec)
        sh = None if a.shadow is None else ONE / a.shadow
        return Interval(lo, hi, a.prec, lambda p: a.refined(p).inverse(), sh)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        result = Interval.of(ONE, self.prec)
        for _ in range(k):
            result = result * self
        return result

    def conjugate(self):
        return self

    def __eq__(self, other):
        if isinstance(other, Interval):
            return self.lo == other.lo and self.hi == other.hi
        return NotImplemented

    __hash__ = None

    def __float__(self):
        return float(self.mid)

    def enclose(self, bits: int):
        cur = self.refined(bits)
        return cur.lo, cur.hi

    def __repr__(self):
        return f"Interval({float(self.lo):.17g}, {float(self.hi):.17g}, prec={self.prec})"

    def __str__(self):
        return f"[{float(self.lo):.17g}, {float(self.hi):.17g}]"


# -- mpmath bridge -----------------------------------------------------------------------
_IV_LOCK = threading.Lock()


def _mpf_tuple_to_mpq(t):
    sign, man, exp, _ = t
    if man == 0:
        return ZERO
    v = mpq(mpz(man))
    v = v * (mpq(2) ** exp) if exp >= 0 else v / (mpq(2) ** (-exp))
    return -v if sign else v


def iv_bounds(fn, prec: int):
    """Run ``fn(mpmath.iv)`` at ``prec`` bits and return exact rational endpoints."""
    with _IV_LOCK:
        old = mpmath.iv.prec
        mpmath.iv.prec = prec + 16
        try:
            val = fn(mpmath.iv)
            a, b = val._mpi_
        finally:
            mpmath.iv.prec = old
    return _mpf_tuple_to_mpq(a), _mpf_tuple_to_mpq(b)


# -- exact cosine fields ------------------------------------------------------------------
def _chebyshev_c(j: int):
    """Integer coefficients (low to high) of C_j with C_j(2cos t) = 2cos(j t)."""
    prev, cur = [2], [0, 1]
    if j == 0:
        return prev
    for _ in range(j - 1):
        nxt = [0] + cur
        for i, c in enumerate(prev):
            nxt[i] -= c
        prev, cur = cur, nxt
    return cur


@dataclass(frozen=True)
class CosineField:
    """Q(c) with c = 2cos(pi / 2**m), of degree 2**(m-1) over Q."""

    m: int

    def __post_init__(self):
        if self.m < 2:
            raise ValueError("cosine fields need m >= 2")

    @property
    def degree(self) -> int:
        return 1 << (self.m - 1)

    def minpoly(self):
        return _minpoly(self.m)

    def gen(self) -> CosineNumber:
        return CosineNumber.make(self, [ZERO, ONE])

    def chebyshev(self, j: int) -> CosineNumber:
        """2cos(j pi / 2**m) as an exact element."""
        return CosineNumber.make(self, [mpq(c) for c in _chebyshev_c(j)])

    def gen_bounds(self, bits: int):
        return _gen_bounds(self.m, bits)

    def __str__(self):
        return f"Q(2cos(pi/{1 << self.m}))"


@lru_cache(maxsize=None)
def _minpoly(m: int):
    return tuple(mpq(c) for c in _chebyshev_c(1 << (m - 1)))


@lru_cache(maxsize=256)
def _gen_bounds(m: int, bits: int):
    return iv_bounds(lambda iv: 2 * iv.cos(iv.pi / (1 << m)), bits)


def _reduce(coeffs, mp):
    coeffs = list(coeffs)
    d = len(mp) - 1
    for i in range(len(coeffs) - 1, d - 1, -1):
        c = coeffs[i]
        if c:
            for k in range(d):
                coeffs[i - d + k] -= c * mp[k]
        coeffs[i] = ZERO
    del coeffs[d:]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _pmul(a, b):
    if not a or not b:
        return []
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pdivmod(a, b):
    a = list(a)
    q = [ZERO] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for k, y in enumerate(b):
                a[i + k] -= c * y
    while a and a[-1] == 0:
        a.pop()
    return q, a


class CosineNumber:
    """Element of a :class:`CosineField`, as a reduced coefficient tuple in c."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CosineField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def make(cls, field, coeffs):
        red = _reduce([mpq(c) for c in coeffs], field.minpoly())
        if len(red) <= 1:
            return red[0] if red else ZERO
        return cls(field, red)

    def _other(self, other):
        if isinstance(other, CosineNumber):
            if other.field != self.field:
                raise IncompatibleFieldError(f"{self.field} and {other.field} differ")
            return other.coeffs
        if type(other) is int or type(other) is MPQ:
            return (mpq(other),)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        n = max(len(o), len(self.coeffs))
        s = [ZERO] * n
        for i, c in enumerate(self.coeffs):
            s[i] += c
        for i, c in enumerate(o):
            s[i] += c
        return CosineNumber.make(self.field, s)

    __radd__ = __add__

    def __neg__(self):
        return CosineNumber(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return CosineNumber.make(self.field, _pmul(self.coeffs, o))

    __rmul__ = __mul__

    def inverse(self):
        # extended Euclid against the minimal polynomial
        r0, r1 = list(self.field.minpoly()), list(self.coeffs)
        s0, s1 = [], [ONE]
        while len(r1) > 1:
            q, rem = _pdivmod(r0, r1)
            qs = _pmul(q, s1)
            n = max(len(s0), len(qs))
            s2 = [ZERO] * n
            for i, c in enumerate(s0):
                s2[i] += c
            for i, c in enumerate(qs):
                s2[i] -= c
            r0, r1, s0, s1 = r1, rem, s1, s2
        if not r1:
            raise ZeroDivisionError("element is zero")
        return CosineNumber.make(self.field, [c / r1[0] for c in s1])

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if isinstance(other, CosineNumber):
            return self * other.inverse()
        if other == 0:
            raise ZeroDivisionError("division by zero")
        return CosineNumber.make(self.field, [c / other for c in self.coeffs])

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.inverse() * other

    def __pow__(self, k: int):
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def conjugate(self):
        return self

    def is_zero(self) -> bool:
        return False  # zero collapses to mpq(0) in make()

    def enclose(self, bits: int):
        glo, ghi = self.field.gen_bounds(bits + 16)
        lo = hi = ZERO
        for c in reversed(self.coeffs):
            ps = (lo * glo, lo * ghi, hi * glo, hi * ghi)
            lo, hi = min(ps) + c, max(ps) + c
        return round_out(lo, hi, bits)

    def sign(self) -> int:
        bits = 64
        while True:
            lo, hi = self.enclose(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2  # nonzero algebraic number: terminates

    def __eq__(self, other):
        if isinstance(other, CosineNumber):
            return self.field == other.field and self.coeffs == other.coeffs
        if type(other) in (int, MPQ):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __float__(self):
        lo, hi = self.enclose(64)
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"CosineNumber({self})"

    def __str__(self):
        return f"{float(self):.17g}"


def cos_pi_over(m: int, j: int = 1, prec: int = DEFAULT_PREC) -> Interval:
    """Interval for 2cos(j pi / 2**m) with its exact cosine-field shadow."""
    return Interval.of(CosineField(m).chebyshev(j), prec)


def interval_from_iv(fn, prec: int = DEFAULT_PREC) -> Interval:
    """Interval computed by an mpmath ``iv`` expression, refinable by recomputation."""
    lo, hi = iv_bounds(fn, prec)
    lo, hi = round_out(lo, hi, prec)
    return Interval(lo, hi, prec, refine=lambda p: interval_from_iv(fn, p))

