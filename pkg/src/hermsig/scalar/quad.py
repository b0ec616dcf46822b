"""Real quadratic towers over Q of depth at most two.

An element of ``K(sqrt(delta))`` is stored as ``a + b*sqrt(delta)`` with
``a, b`` in ``K``.  Elements with ``b == 0`` are always collapsed into ``K``,
so equality is coefficient-wise and rationals are plain ``mpq`` values.
The real embedding is fixed by taking every square root positive.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import gmpy2
from gmpy2 import mpq, mpz

from .base import (
    MPQ,
    ONE,
    ZERO,
    IncompatibleFieldError,
    ScalarError,
    as_scalar,
    fmt,
    round_out,
    sign_of,
)

MAX_DEPTH = 2


@dataclass(frozen=True)
class QuadField:
    """The field ``base(sqrt(radicand))``; ``base is None`` means Q."""

    base: QuadField | None
    radicand: object

    @property
    def depth(self) -> int:
        return 1 + (self.base.depth if self.base is not None else 0)

    def ancestors(self):
        f = self.base
        while f is not None:
            yield f
            f = f.base
        yield None

    def gen(self) -> QuadNumber:
        return QuadNumber(self, ZERO, ONE)

    def __str__(self) -> str:
        inner = "Q" if self.base is None else str(self.base)
        return f"{inner}(sqrt({fmt(self.radicand)}))"


def field_of(x) -> QuadField | None:
    return x.field if isinstance(x, QuadNumber) else None


def _below(f, g) -> bool:
    """True when f is a proper subfield of g in its tower (f None is Q)."""
    if g is None:
        return False
    return any(h == f for h in g.ancestors())


def _quad(field, a, b):
    if sign_of(b) == 0:
        return a
    return QuadNumber(field, a, b)


class QuadNumber:
    __slots__ = ("field", "a", "b")

    def __init__(self, field: QuadField, a, b):
        self.field = field
        self.a = a
        self.b = b

    # -- coercion -----------------------------------------------------------
    def _split(self, other):
        """Return other's (a, b) over self.field, or None if other is larger."""
        if type(other) is MPQ:
            return other, ZERO
        if isinstance(other, QuadNumber):
            if other.field == self.field:
                return other.a, other.b
            if _below(other.field, self.field):
                return other, ZERO
            if _below(self.field, other.field):
                return None
            raise IncompatibleFieldError(f"{self.field} and {other.field} are different towers")
        raise TypeError

    def _prep(self, other):
        if type(other) is int or type(other) is MPQ:
            other = mpq(other)
        elif not isinstance(other, QuadNumber):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
            if not (type(other) is MPQ or isinstance(other, QuadNumber)):
                return NotImplemented
        return other

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._prep(other)
        if other is NotImplemented:
            return other
        parts = self._split(other)
        if parts is None:
            return other.__radd__(self)
        c, d = parts
        return _quad(self.field, self.a + c, self.b + d)

    __radd__ = __add__

    def __neg__(self):
        return QuadNumber(self.field, -self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._prep(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._prep(other)
        if other is NotImplemented:
            return other
        return (-self) + other

    def __mul__(self, other):
        other = self._prep(other)
        if other is NotImplemented:
            return other
        parts = self._split(other)
        if parts is None:
            return other.__rmul__(self)
        c, d = parts
        if sign_of(d) == 0:
            return _quad(self.field, self.a * c, self.b * c)
        delta = self.field.radicand
        return _quad(
            self.field,
            self.a * c + self.b * d * delta,
            self.a * d + self.b * c,
        )

    __rmul__ = __mul__

    def norm(self):
        """a^2 - b^2 delta, the product with the conjugate over the base."""
        return self.a * self.a - self.b * self.b * self.field.radicand

    def inverse(self):
        n = self.norm()
        return _quad(self.field, self.a / n, -self.b / n)

    def __truediv__(self, other):
        other = self._prep(other)
        if other is NotImplemented:
            return other
        parts = self._split(other)
        if parts is None:
            return other.__rtruediv__(self)
        c, d = parts
        if sign_of(d) == 0:
            if sign_of(c) == 0:
                raise ZeroDivisionError("division by zero")
            return _quad(self.field, self.a / c, self.b / c)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._prep(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self):
        return self

    # -- comparison -----------------------------------------------------------
    def sign(self) -> int:
        sa, sb = sign_of(self.a), sign_of(self.b)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with b^2 delta
        return sa * sign_of(self.norm())

    def is_zero(self) -> bool:
        return False  # canonical form never stores b == 0

    def __eq__(self, other):
        if isinstance(other, QuadNumber):
            return self.field == other.field and self.a == other.a and self.b == other.b
        if type(other) in (int, MPQ):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.a, self.b))

    def _cmp(self, other):
        diff = self - other
        if diff is NotImplemented:
            raise TypeError
        return sign_of(diff)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(float(self.field.radicand))

    def enclose(self, bits: int):
        """Rational bounds on the real value, with width at most about 2**-bits."""
        return _enclose(self, bits)

    def __repr__(self):
        return f"QuadNumber({self})"

    def __str__(self):
        root = f"sqrt({fmt(self.field.radicand)})"
        b = self.b
        if sign_of(self.a) == 0:
            if b == 1:
                return root
            if b == -1:
                return f"(-{root})"
            return f"({fmt(b)}*{root})"
        if sign_of(b) < 0:
            mag, op = -b, "-"
        else:
            mag, op = b, "+"
        coef = root if mag == 1 else f"{fmt(mag)}*{root}"
        return f"({fmt(self.a)} {op} {coef})"


# -- enclosures -----------------------------------------------------------------
def _enclose(x, bits):
    if type(x) is MPQ:
        return x, x
    lo_r, hi_r = _enclose(x.field.radicand, bits + 8)
    s_lo = _sqrt_floor(lo_r, bits + 8)
    s_hi = _sqrt_ceil(hi_r, bits + 8)
    a_lo, a_hi = _enclose(x.a, bits + 8)
    b_lo, b_hi = _enclose(x.b, bits + 8)
    prods = [b_lo * s_lo, b_lo * s_hi, b_hi * s_lo, b_hi * s_hi]
    return round_out(a_lo + min(prods), a_hi + max(prods), bits)


def _sqrt_floor(q, bits):
    if q <= 0:
        return ZERO
    scale = mpz(1) << bits
    # floor(sqrt(q) * 2^bits) = isqrt(floor(q * 4^bits))
    n = mpz(q.numerator * scale * scale) // mpz(q.denominator)
    return mpq(gmpy2.isqrt(n), scale)


def _sqrt_ceil(q, bits):
    lo = _sqrt_floor(q, bits)
    scale = mpz(1) << bits
    step = mpq(1, scale)
    while lo * lo < q:
        lo += step
    return lo


# -- square roots -------------------------------------------------------------------
def _squarefree_split(n: int, limit: int = 100_000):
    """Write n = c^2 * s with s squarefree (best effort above ``limit``)."""
    n = mpz(n)
    c, s = mpz(1), mpz(1)
    p = mpz(2)
    while p * p <= n and p < limit:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        c *= p ** (e // 2)
        if e % 2:
            s *= p
        p = gmpy2.next_prime(p)
    if gmpy2.is_square(n):
        c *= gmpy2.isqrt(n)
    else:
        s *= n
    return c, s


def _rational_sqrt(q):
    num, den = mpz(q.numerator), mpz(q.denominator)
    if gmpy2.is_square(num) and gmpy2.is_square(den):
        return mpq(gmpy2.isqrt(num), gmpy2.isqrt(den))
    return None


def _sqrt_in(x, field):
    """A non-negative square root of x inside ``field`` (None means Q), or None."""
    if field is None:
        return _rational_sqrt(x) if type(x) is MPQ else None
    if isinstance(x, QuadNumber) and x.field == field:
        u, v = x.a, x.b
    elif field_of(x) is None or _below(field_of(x), field):
        u, v = x, ZERO
    else:
        return None
    base = field.base
    if sign_of(v) == 0:
        r = _sqrt_in(u, base)
        if r is not None:
            return r
        r = _sqrt_in(u / field.radicand, base)
        return None if r is None else _quad(field, ZERO, r)
    w = _sqrt_in(u * u - v * v * field.radicand, base)
    if w is None:
        return None
    for half in ((u + w) / 2, (u - w) / 2):
        if sign_of(half) <= 0:
            continue
        p = _sqrt_in(half, base)
        if p is not None:
            y = _quad(field, p, v / (2 * p))
            return -y if sign_of(y) < 0 else y
    return None


@lru_cache(maxsize=None)
def _rational_field(s: int) -> QuadField:
    return QuadField(None, mpq(s))


def sqrt_extend(base: QuadField | None, radicand) -> QuadField | None:
    """Field containing a positive square root of ``radicand`` (an element of ``base``).

    Returns ``base`` itself when the radicand is already a square there.
    """
    radicand = as_scalar(radicand)
    if sign_of(radicand) <= 0:
        raise ScalarError("square root of a non-positive number")
    if _sqrt_in(radicand, base) is not None:
        return base
    if base is None:
        if type(radicand) is not MPQ:
            raise IncompatibleFieldError("radicand does not lie in Q")
        _, s = _squarefree_split(radicand.numerator * radicand.denominator)
        return _rational_field(int(s))
    if (base.depth + 1) > MAX_DEPTH:
        raise ScalarError(f"tower depth would exceed {MAX_DEPTH}")
    fr = field_of(radicand)
    if not (fr == base or _below(fr, base)):
        raise IncompatibleFieldError("radicand does not lie in the base field")
    return QuadField(base, radicand)


def sqrt(x):
    """Exact positive square root, extending Q or Q(sqrt d) by one step when needed."""
    x = as_scalar(x)
    s = sign_of(x)
    if s < 0:
        raise ScalarError("square root of a negative number")
    if s == 0:
        return ZERO
    base = field_of(x)
    if type(x) is MPQ:
        r = _rational_sqrt(x)
        if r is not None:
            return r
        c, sf = _squarefree_split(x.numerator * x.denominator)
        return QuadNumber(_rational_field(int(sf)), ZERO, mpq(c, x.denominator))
    r = _sqrt_in(x, base)
    if r is not None:
        return r
    field = sqrt_extend(base, x)
    return QuadNumber(field, ZERO, ONE)
