"""Division by the hyperquadric form, holomorphic content and projective degree.

Division by r = |z_1|^2 + ... + |z_n|^2 - |z_{n+1}|^2 treats z and w-bar as
independent variables.  With z_i w-bar_i as leading monomial the single
polynomial r is its own Groebner basis, so rewriting
z_i w-bar_i -> r - (r - z_i w-bar_i) until no monomial is divisible by
z_i w-bar_i gives the unique normal form: the remainder vanishes exactly
when p lies in I(r).  The rewrite commutes with conjugation, so quotient and
remainder stay Hermitian.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .gcd import conj_poly, exact_div, monic, pmul, poly_gcd
from .hermitian_form import inertia
from .polyring import HermPoly, RealPoly, hyperquadric, norm_power
from .scalar import ONE, Complex, conj, is_zero


@dataclass
class DivisionWitness:
    dividend: object
    divisor: object
    quotient: object
    remainder: object

    @property
    def member(self) -> bool:
        return self.remainder.is_zero()

    def verify(self) -> bool:
        """Exact re-multiplication: dividend == divisor * quotient + remainder."""
        return self.dividend == self.divisor * self.quotient + self.remainder


def _unit(i, n):
    return tuple(1 if j == i else 0 for j in range(n))


def divide_by_r(p: HermPoly, var: int = 0) -> DivisionWitness:
    """Divide p (in n+1 variables) by the hyperquadric form r, eliminating z_var w-bar_var."""
    N = p.nvars
    if N < 2:
        raise ValueError("r needs at least two variables")
    r = hyperquadric(N - 1)
    e = _unit(var, N)
    lead_c = r.terms[(e, e)]
    # z_var w_var = (r - rest) / lead_c
    rest = {k: c for k, c in r.terms.items() if k != (e, e)}
    work = dict(p.terms)
    quot: dict = {}
    rem: dict = {}

    def level(key):
        a, b = key
        return min(a[var], b[var])

    while work:
        top = max(level(k) for k in work)
        if top == 0:
            rem.update(work)
            break
        nxt: dict = {}
        for key, c in work.items():
            if level(key) < top:
                v = nxt.get(key)
                v = c if v is None else v + c
                nxt[key] = v
                continue
            a, b = key
            a2 = tuple(x - y for x, y in zip(a, e))
            b2 = tuple(x - y for x, y in zip(b, e))
            f = c / lead_c
            v = quot.get((a2, b2))
            quot[(a2, b2)] = f if v is None else v + f
            for (ra, rb), rc in rest.items():
                k2 = (tuple(x + y for x, y in zip(a2, ra)), tuple(x + y for x, y in zip(b2, rb)))
                v = nxt.get(k2)
                t = -f * rc
                nxt[k2] = t if v is None else v + t
        work = {k: c for k, c in nxt.items() if not is_zero(c)}
    quotient = HermPoly._raw(N, {k: c for k, c in quot.items() if not is_zero(c)})
    remainder = HermPoly._raw(N, {k: c for k, c in rem.items() if not is_zero(c)})
    return DivisionWitness(p, r, quotient, remainder)


def in_ideal_r(p: HermPoly) -> bool:
    return divide_by_r(p).member


def sphere_divisor(n: int, homogeneous: bool = True) -> RealPoly:
    """x_1 + ... + x_n - x_{n+1} (or - 1 when ``homogeneous`` is False)."""
    if homogeneous:
        terms = {_unit(i, n + 1): ONE for i in range(n)}
        terms[_unit(n, n + 1)] = -ONE
        return RealPoly(n + 1, terms)
    terms = {_unit(i, n): ONE for i in range(n)}
    terms[(0,) * n] = -ONE
    return RealPoly(n, terms)


def divide_real(P: RealPoly, L: RealPoly | None = None, var: int = 0) -> DivisionWitness:
    """Exact division by a divisor that is linear in x_var with constant coefficient.

    Defaults to L = x_1 + ... + x_n - 1 in P's variables.
    """
    if L is None:
        L = sphere_divisor(P.nvars, homogeneous=False)
    if L.nvars != P.nvars:
        raise ValueError("divisor and dividend need the same variables")
    e = _unit(var, P.nvars)
    lead_c = L.terms.get(e)
    if lead_c is None or any(k[var] for k in L.terms if k != e):
        raise ValueError(f"divisor must be linear in x{var + 1} with a constant coefficient")
    rest = {k: c for k, c in L.terms.items() if k != e}
    work = dict(P.terms)
    quot: dict = {}
    rem: dict = {}
    while work:
        top = max(k[var] for k in work)
        if top == 0:
            rem.update(work)
            break
        nxt: dict = {}
        for k, c in work.items():
            if k[var] < top:
                v = nxt.get(k)
                nxt[k] = c if v is None else v + c
                continue
            k2 = tuple(x - y for x, y in zip(k, e))
            f = c / lead_c
            v = quot.get(k2)
            quot[k2] = f if v is None else v + f
            for rk, rc in rest.items():
                k3 = tuple(x + y for x, y in zip(k2, rk))
                v = nxt.get(k3)
                t = -f * rc
                nxt[k3] = t if v is None else v + t
        work = {k: c for k, c in nxt.items() if not is_zero(c)}
    return DivisionWitness(
        P,
        L,
        RealPoly._raw(P.nvars, {k: c for k, c in quot.items() if not is_zero(c)}),
        RealPoly._raw(P.nvars, {k: c for k, c in rem.items() if not is_zero(c)}),
    )


# -----------------------------------------------------------------------------
# Holomorphic content and projective degree
# -----------------------------------------------------------------------------
def _coefficient_polys(p: HermPoly):
    """p = sum_beta c_beta(z) w^beta: return {beta: c_beta as dict}."""
    out: dict = {}
    for (a, b), c in p.terms.items():
        out.setdefault(b, {})[a] = c
    return out


def holomorphic_content(p: HermPoly):
    """(h, q) with p = h(z) conj(h)(w-bar) q(z, w-bar); h monic in graded-lex."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no content")
    cps = _coefficient_polys(p)
    h = monic(poly_gcd(list(cps.values())))
    if len(h) == 1 and all(x == 0 for x in next(iter(h))):
        return h, p
    # divide the z-side
    step: dict = {}
    for b, cb in cps.items():
        qb = exact_div(cb, h)
        if qb is None:
            raise ArithmeticError("gcd does not divide a coefficient polynomial")
        for a, c in qb.items():
            step[(a, b)] = c
    # divide the w-side by conj(h)
    hb = conj_poly(h)
    by_alpha: dict = {}
    for (a, b), c in step.items():
        by_alpha.setdefault(a, {})[b] = c
    out: dict = {}
    for a, da in by_alpha.items():
        qa = exact_div(da, hb)
        if qa is None:
            raise ArithmeticError("conjugate content does not divide the w-side")
        for b, c in qa.items():
            out[(a, b)] = c
    return h, HermPoly._raw(p.nvars, out)


@dataclass
class ReductionResult:
    p: HermPoly
    reduced: HermPoly
    h: dict
    degree: int
    bidegree: tuple = field(default=(0, 0))

    def h_poly(self) -> HermPoly:
        return HermPoly._raw(self.p.nvars, {(a, (0,) * self.p.nvars): c for a, c in self.h.items()})

    def verify(self) -> bool:
        """|h|^2 * reduced == p exactly."""
        n = self.p.nvars
        hh = {}
        for a, c in self.h.items():
            for b, d in self.h.items():
                hh[(a, b)] = c * conj(d)
        prod = HermPoly._raw(n, {k: v for k, v in hh.items() if not is_zero(v)}) * self.reduced
        return prod == self.p


def projective_degree(p: HermPoly):
    """(D(p), ReductionResult).

    D(p) is the total degree 2m of the reduced bihomogeneous form of bidegree
    (m, m), so the hyperquadric form has projective degree 2.
    """
    if p.is_zero():
        raise ValueError("projective degree of the zero polynomial is undefined")
    if not p.is_bihomogeneous():
        raise ValueError("projective degree needs a bihomogeneous polynomial")
    n = p.nvars
    h_total = {(0,) * n: ONE}
    q = p
    while True:
        h, q2 = holomorphic_content(q)
        if q2 is q:
            break
        h_total = pmul(h_total, h)
        q = q2
    m = q.degree()
    return 2 * m, ReductionResult(p, q, h_total, 2 * m, (m, m))


# -----------------------------------------------------------------------------
# Stabilization
# -----------------------------------------------------------------------------
@dataclass
class StabilizationResult:
    d: int | None
    triple: tuple | None
    tried: int
    samples_positive: bool


def _sample_positive(p: HermPoly, samples: int, seed: int) -> bool:
    rng = random.Random(seed)
    n = p.nvars
    coeffs = [(a, b, complex(c) if isinstance(c, Complex) else float(c)) for (a, b), c in p.terms.items()]
    for _ in range(samples):
        z = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(n)]
        s = sum(abs(x) ** 2 for x in z) ** 0.5
        z = [x / s for x in z]
        val = 0j
        for a, b, c in coeffs:
            t = c
            for x, k in zip(z, a):
                t *= x**k
            for x, k in zip(z, b):
                t *= x.conjugate() ** k
            val += t
        if val.real <= 0:
            return False
    return True


def stabilization_search(p: HermPoly, d_max: int, samples: int = 200, seed: int = 0) -> StabilizationResult:
    """Smallest d <= d_max with inertia(||z||^{2d} p) = (N, 0, 0), or d = None."""
    if not p.is_bihomogeneous():
        raise ValueError("stabilization needs a bihomogeneous polynomial")
    positive = _sample_positive(p, samples, seed)
    if not positive:
        raise ValueError("p is not positive on the unit sphere (a sample point is <= 0)")
    norm = norm_power(p.nvars, 1)
    cur = p
    for d in range(d_max + 1):
        res = inertia(cur, witness=False)
        if res.B == 0 and res.k == 0:
            return StabilizationResult(d, res.triple, d + 1, True)
        cur = cur * norm
    return StabilizationResult(None, None, d_max + 1, True)


__all__ = [
    "DivisionWitness",
    "ReductionResult",
    "StabilizationResult",
    "divide_by_r",
    "divide_real",
    "in_ideal_r",
    "sphere_divisor",
    "holomorphic_content",
    "projective_degree",
    "stabilization_search",
]
