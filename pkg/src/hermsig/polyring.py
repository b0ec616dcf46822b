"""Sparse exact polynomials: real polynomials in x and Hermitian bipolynomials in (z, w-bar).

Exponent vectors are plain tuples.  A :class:`HermPoly` maps pairs
``(alpha, beta)`` to coefficients and always satisfies
``c[beta, alpha] == conj(c[alpha, beta])``.  Coefficients are real scalars or
:class:`~hermsig.scalar.Complex` values; zero coefficients are never stored.
"""
from __future__ import annotations

from math import comb
from typing import Iterable

from .scalar import (
    ONE,
    ZERO,
    Complex,
    as_scalar,
    cnum,
    conj,
    imag_part,
    is_zero,
    real_part,
    sign_of,
)


class ArityError(ValueError):
    """Operands have different numbers of variables."""


class HermitianSymmetryError(ValueError):
    """A bipolynomial is not Hermitian symmetric."""

    def __init__(self, pair, coeff, partner):
        alpha, beta = pair
        super().__init__(
            f"not Hermitian symmetric: c[{alpha},{beta}] = {coeff} but "
            f"c[{beta},{alpha}] = {partner}, expected its conjugate"
        )
        self.pair = pair


def _add_exp(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _coerce(c):
    if isinstance(c, Complex):
        return c
    return as_scalar(c)


def glex_key(e):
    """Sort key: graded lexicographic, largest first when used with reverse=True."""
    return (sum(e), e)


def monomial_basis(d: int, nvars: int) -> list[tuple]:
    """Degree-d monomials in ``nvars`` variables, graded-lex descending."""
    out = []

    def rec(prefix, left, slots):
        if slots == 1:
            out.append(prefix + (left,))
            return
        for k in range(left, -1, -1):
            rec(prefix + (k,), left - k, slots - 1)

    if nvars == 0:
        return [()] if d == 0 else []
    rec((), d, nvars)
    return out


def dim_v(d: int, nvars: int) -> int:
    """dim V(d, nvars) = C(d + nvars - 1, nvars - 1)."""
    return comb(d + nvars - 1, nvars - 1)


# =============================================================================
# Real polynomials
# =============================================================================
class RealPoly:
    """Sparse polynomial with real exact coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != nvars or min(e, default=0) < 0:
                raise ArityError(f"exponent {e} does not fit {nvars} variables")
            c = as_scalar(c)
            if not is_zero(c):
                clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c, nvars: int) -> RealPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, i: int, nvars: int) -> RealPoly:
        """The variable x_{i+1} (0-based index i)."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): ONE})

    @classmethod
    def univariate(cls, coeffs: Iterable) -> RealPoly:
        """c0 + c1 t + c2 t^2 + ... in one variable."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    def coeffs_univariate(self) -> list:
        if self.nvars != 1:
            raise ArityError("not univariate")
        d = self.degree()
        return [self.terms.get((k,), ZERO) for k in range(d + 1)]

    def _check(self, other):
        if not isinstance(other, RealPoly):
            other = RealPoly.constant(other, self.nvars)
        if other.nvars != self.nvars:
            raise ArityError(f"arity {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t.get(e)
            v = c if v is None else v + c
            if is_zero(v):
                t.pop(e, None)
            else:
                t[e] = v
        return RealPoly._raw(self.nvars, t)

    __radd__ = __add__

    def __neg__(self):
        return RealPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, RealPoly):
            c = as_scalar(other)
            if is_zero(c):
                return RealPoly._raw(self.nvars, {})
            return RealPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})
        other = self._check(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _add_exp(e1, e2)
                v = t.get(e)
                t[e] = c1 * c2 if v is None else v + c1 * c2
        return RealPoly._raw(self.nvars, {e: c for e, c in t.items() if not is_zero(c)})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = RealPoly.constant(ONE, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, RealPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogenize(self, degree: int | None = None) -> RealPoly:
        """Add x_{n+1} so that every term has total degree ``degree``."""
        d = self.degree() if degree is None else degree
        if d < self.degree():
            raise ValueError("target degree below the polynomial degree")
        return RealPoly._raw(
            self.nvars + 1, {e + (d - sum(e),): c for e, c in self.terms.items()}
        )

    def evaluate(self, point):
        if len(point) != self.nvars:
            raise ArityError("point arity mismatch")
        total = ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v = v * x**k
            total = total + v
        return total

    def compose(self, subs: list[RealPoly]) -> RealPoly:
        """Substitute ``subs[i]`` for x_{i+1}; all substitutes share one arity."""
        if len(subs) != self.nvars:
            raise ArityError("need one substitute per variable")
        m = subs[0].nvars
        cache = [dict() for _ in subs]

        def power(i, k):
            if k not in cache[i]:
                cache[i][k] = subs[i] ** k
            return cache[i][k]

        out = RealPoly(m)
        for e, c in self.terms.items():
            term = RealPoly.constant(c, m)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def pad(self, nvars: int) -> RealPoly:
        if nvars < self.nvars:
            raise ArityError("cannot drop variables")
        z = (0,) * (nvars - self.nvars)
        return RealPoly._raw(nvars, {e + z: c for e, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: glex_key(t[0]), reverse=True)

    def __repr__(self):
        from .expr import format_real

        return f"RealPoly({format_real(self)})"

    def __str__(self):
        from .expr import format_real

        return format_real(self)


def sign_counts(P: RealPoly) -> tuple[int, int]:
    """(number of positive coefficients, number of negative coefficients)."""
    a = b = 0
    for c in P.terms.values():
        s = sign_of(c)
        if s > 0:
            a += 1
        elif s < 0:
            b += 1
    return a, b


# =============================================================================
# Hermitian symmetric bipolynomials
# =============================================================================
def _bimul(t1: dict, t2: dict) -> dict:
    out: dict = {}
    for (a1, b1), c1 in t1.items():
        for (a2, b2), c2 in t2.items():
            key = (_add_exp(a1, a2), _add_exp(b1, b2))
            v = out.get(key)
            out[key] = c1 * c2 if v is None else v + c1 * c2
    return {k: c for k, c in out.items() if not is_zero(c)}


def _biadd(t1: dict, t2: dict, sign: int = 1) -> dict:
    out = dict(t1)
    for k, c in t2.items():
        if sign < 0:
            c = -c
        v = out.get(k)
        v = c if v is None else v + c
        if is_zero(v):
            out.pop(k, None)
        else:
            out[k] = v
    return out


class HermPoly:
    """r(z, w-bar) = sum c[alpha, beta] z^alpha w-bar^beta with Hermitian symmetry."""

    __slots__ = ("nvars", "terms", "_bideg")

    def __init__(self, nvars: int, terms: dict | None = None, check: bool = True):
        self.nvars = nvars
        clean = {}
        for (a, b), c in (terms or {}).items():
            a = tuple(int(k) for k in a)
            b = tuple(int(k) for k in b)
            if len(a) != nvars or len(b) != nvars or min(a + b, default=0) < 0:
                raise ArityError(f"exponent pair {(a, b)} does not fit {nvars} variables")
            c = _coerce(c)
            if not is_zero(c):
                clean[(a, b)] = c
        self.terms = clean
        self._bideg = None
        if check:
            self.check_symmetry()

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        obj._bideg = None
        return obj

    @classmethod
    def constant(cls, c, nvars: int) -> HermPoly:
        z = (0,) * nvars
        return cls(nvars, {(z, z): c})

    @classmethod
    def abs2_monomial(cls, e, coeff=ONE) -> HermPoly:
        """coeff * |z^e|^2."""
        e = tuple(e)
        coeff = as_scalar(coeff)
        return cls._raw(len(e), {} if is_zero(coeff) else {(e, e): coeff})

    def check_symmetry(self):
        for (a, b), c in self.terms.items():
            partner = self.terms.get((b, a), ZERO)
            if partner != conj(c) and not (is_zero(partner) and is_zero(c)):
                raise HermitianSymmetryError((a, b), c, partner)
            if a == b and not is_zero(imag_part(c)):
                raise HermitianSymmetryError((a, b), c, partner)
        return self

    # -- arithmetic -------------------------------------------------------------------
    def _other(self, other):
        if isinstance(other, HermPoly):
            if other.nvars != self.nvars:
                raise ArityError(f"arity {self.nvars} vs {other.nvars}")
            return other
        c = _coerce(other)
        if not is_zero(imag_part(c)):
            raise HermitianSymmetryError(((0,) * self.nvars,) * 2, c, conj(c))
        return HermPoly.constant(c, self.nvars)

    def __add__(self, other):
        other = self._other(other)
        return HermPoly._raw(self.nvars, _biadd(self.terms, other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._other(other)
        return HermPoly._raw(self.nvars, _biadd(self.terms, other.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return HermPoly._raw(self.nvars, {k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, HermPoly):
            c = _coerce(other)
            if not is_zero(imag_part(c)):
                raise HermitianSymmetryError(((0,) * self.nvars,) * 2, c, conj(c))
            if is_zero(c):
                return HermPoly._raw(self.nvars, {})
            return HermPoly._raw(self.nvars, {k: v * c for k, v in self.terms.items()})
        other = self._other(other)
        return HermPoly._raw(self.nvars, _bimul(self.terms, other.terms))

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_scalar(c)
        return HermPoly._raw(self.nvars, {k: v / c for k, v in self.terms.items()})

    def __pow__(self, k: int):
        result = HermPoly.constant(ONE, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, HermPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    __hash__ = None

    # -- structure ---------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def bidegree(self) -> tuple[int, int]:
        if self._bideg is None:
            da = max((sum(a) for a, _ in self.terms), default=0)
            db = max((sum(b) for _, b in self.terms), default=0)
            self._bideg = (da, db)
        return self._bideg

    def degree(self) -> int:
        """d = max over terms of max(|alpha|, |beta|)."""
        return max(self.bidegree())

    def is_bihomogeneous(self, d: int | None = None) -> bool:
        degs = {sum(a) for a, _ in self.terms} | {sum(b) for _, b in self.terms}
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return d is None or degs == {d}

    def is_diagonal(self) -> bool:
        return all(a == b for a, b in self.terms)

    def holomorphic_support(self) -> list[tuple]:
        """Monomials z^alpha that occur, graded-lex descending."""
        return sorted({a for a, _ in self.terms}, key=glex_key, reverse=True)

    def pad(self, nvars: int) -> HermPoly:
        """Place the polynomial in more variables (new ones do not occur)."""
        if nvars < self.nvars:
            raise ArityError("cannot drop variables")
        z = (0,) * (nvars - self.nvars)
        return HermPoly._raw(nvars, {(a + z, b + z): c for (a, b), c in self.terms.items()})

    def mul_abs2(self, e) -> HermPoly:
        """Multiply by |z^e|^2."""
        e = tuple(e)
        return HermPoly._raw(
            self.nvars, {(_add_exp(a, e), _add_exp(b, e)): c for (a, b), c in self.terms.items()}
        )

    def dehomogenize(self) -> HermPoly:
        """Set z_{n+1} = w-bar_{n+1} = 1, dropping the last variable."""
        out: dict = {}
        for (a, b), c in self.terms.items():
            key = (a[:-1], b[:-1])
            v = out.get(key)
            out[key] = c if v is None else v + c
        return HermPoly._raw(self.nvars - 1, {k: c for k, c in out.items() if not is_zero(c)})

    def diagonal_poly(self) -> RealPoly:
        """For a diagonal p = P o m, return P."""
        if not self.is_diagonal():
            raise ValueError("polynomial is not diagonal")
        return RealPoly(self.nvars, {a: c for (a, _), c in self.terms.items()})

    def evaluate(self, z):
        """p(z, conj z); raises if the value is not real."""
        if len(z) != self.nvars:
            raise ArityError("point arity mismatch")
        zc = [conj(x) for x in z]
        total = ZERO
        for (a, b), c in self.terms.items():
            v = c
            for x, k in zip(z, a):
                if k:
                    v = v * x**k
            for x, k in zip(zc, b):
                if k:
                    v = v * x**k
            total = total + v
        if not is_zero(imag_part(total)):
            raise ArithmeticError(f"Hermitian polynomial took a non-real value {total}")
        return real_part(total)

    def sorted_terms(self):
        return sorted(
            self.terms.items(), key=lambda t: (sum(t[0][0]) + sum(t[0][1]), t[0]), reverse=True
        )

    def __repr__(self):
        from .expr import format_herm

        return f"HermPoly({format_herm(self)})"

    def __str__(self):
        from .expr import format_herm

        return format_herm(self)


# =============================================================================
# Structural conversions
# =============================================================================
def moment_lift(P: RealPoly) -> HermPoly:
    """P o m: each c x^g becomes c |z^g|^2."""
    return HermPoly._raw(P.nvars, {(e, e): c for e, c in P.terms.items()})


def bihomogenize(p: HermPoly, degree: int | None = None) -> HermPoly:
    """Pad every term with powers of a new last variable up to bidegree (d, d)."""
    d = p.degree() if degree is None else degree
    if d < p.degree():
        raise ValueError("target degree below the polynomial degree")
    out = {}
    for (a, b), c in p.terms.items():
        out[(a + (d - sum(a),), b + (d - sum(b),))] = c
    return HermPoly._raw(p.nvars + 1, out)


def lift_univariate(P: RealPoly, nvars: int = 2) -> HermPoly:
    """H(P o m) for one-variable P, with t = |z_1|^2, placed in ``nvars`` variables."""
    if P.nvars != 1:
        raise ArityError("expected a polynomial in one variable")
    h = bihomogenize(moment_lift(P))
    if nvars > 2:
        # keep the homogenizing variable last, insert unused variables in the middle
        extra = (0,) * (nvars - 2)
        h = HermPoly._raw(
            nvars,
            {(a[:1] + extra + a[1:], b[:1] + extra + b[1:]): c for (a, b), c in h.terms.items()},
        )
    return h


def hyperquadric(n: int) -> HermPoly:
    """r = |z_1|^2 + ... + |z_n|^2 - |z_{n+1}|^2 in n + 1 variables."""
    terms = {}
    for i in range(n + 1):
        e = tuple(1 if j == i else 0 for j in range(n + 1))
        terms[(e, e)] = ONE if i < n else -ONE
    return HermPoly._raw(n + 1, terms)


def norm_power(nvars: int, d: int) -> HermPoly:
    """||z||^{2d} in ``nvars`` variables."""
    s = HermPoly._raw(nvars, {})
    for i in range(nvars):
        e = tuple(1 if j == i else 0 for j in range(nvars))
        s = s + HermPoly._raw(nvars, {(e, e): ONE})
    return s**d


def realify(rho: RealPoly) -> HermPoly:
    """Substitute x = (z + w)/2, y = (z - w)/(2i) into rho(x1..xn, y1..yn)."""
    if rho.nvars % 2:
        raise ArityError("realify needs an even number of real variables")
    n = rho.nvars // 2
    zero = (0,) * n
    half = ONE / 2
    xs, ys = [], []
    for j in range(n):
        e = tuple(1 if k == j else 0 for k in range(n))
        xs.append({(e, zero): half, (zero, e): half})
        # (z - w)/(2i) = -i z/2 + i w/2
        ys.append({(e, zero): Complex(ZERO, -half), (zero, e): Complex(ZERO, half)})
    gens = xs + ys
    out: dict = {}
    for e, c in rho.terms.items():
        term = {(zero, zero): c}
        for g, k in zip(gens, e):
            for _ in range(k):
                term = _bimul(term, g)
        out = _biadd(out, term)
    return HermPoly(n, out, check=True)


def polarize_eval(rho: RealPoly, z) -> object:
    """rho(Re z, Im z) evaluated exactly at complex z."""
    return rho.evaluate([real_part(x) for x in z] + [imag_part(x) for x in z])


def from_bipoly_terms(nvars: int, terms: dict) -> HermPoly:
    """Build a HermPoly from raw terms, rejecting asymmetric input."""
    return HermPoly(nvars, terms, check=True)


def unit_vector(i: int, nvars: int) -> tuple:
    return tuple(1 if j == i else 0 for j in range(nvars))


__all__ = [
    "ArityError",
    "HermitianSymmetryError",
    "RealPoly",
    "HermPoly",
    "sign_counts",
    "moment_lift",
    "bihomogenize",
    "lift_univariate",
    "hyperquadric",
    "norm_power",
    "realify",
    "polarize_eval",
    "monomial_basis",
    "dim_v",
    "glex_key",
    "unit_vector",
    "cnum",
]
