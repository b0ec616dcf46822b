"""Multivariate gcd over Q and Q(i) by recursive content / primitive part.

Polynomials are dicts mapping exponent tuples to coefficients (``mpq`` or
:class:`~hermsig.scalar.Complex` with rational parts).  The univariate step
uses a primitive pseudo-remainder sequence over the ring of the remaining
variables.
"""
from __future__ import annotations

from .scalar import MPQ, ONE, Complex, is_zero


class CoefficientFieldError(TypeError):
    """gcd requested for coefficients outside Q and Q(i)."""


def check_coefficients(p: dict) -> None:
    for c in p.values():
        if type(c) is MPQ:
            continue
        if isinstance(c, Complex) and type(c.re) is MPQ and type(c.im) is MPQ:
            continue
        raise CoefficientFieldError(
            "gcd is implemented over Q and Q(i) only; quadratic-tower coefficients are rejected"
        )


# -- basic dict arithmetic -----------------------------------------------------------------
def padd(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for e, c in b.items():
        if sign < 0:
            c = -c
        v = out.get(e)
        v = c if v is None else v + c
        if is_zero(v):
            out.pop(e, None)
        else:
            out[e] = v
    return out


def pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            v = out.get(e)
            out[e] = c1 * c2 if v is None else v + c1 * c2
    return {e: c for e, c in out.items() if not is_zero(c)}


def pscale(a: dict, c) -> dict:
    if is_zero(c):
        return {}
    return {e: v * c for e, v in a.items()}


def lead(a: dict):
    """Lexicographic leading exponent."""
    return max(a)


def glex_lead(a: dict):
    return max(a, key=lambda e: (sum(e), e))


def monic(a: dict) -> dict:
    """Scale so the graded-lex leading coefficient is 1."""
    if not a:
        return a
    c = a[glex_lead(a)]
    return {e: v / c for e, v in a.items()}


def exact_div(a: dict, b: dict):
    """a / b if b divides a exactly, else None."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    q: dict = {}
    a = dict(a)
    lb = lead(b)
    cb = b[lb]
    while a:
        la = lead(a)
        shift = tuple(x - y for x, y in zip(la, lb))
        if min(shift, default=0) < 0:
            return None
        c = a[la] / cb
        q[shift] = c
        a = padd(a, {tuple(x + s for x, s in zip(e, shift)): v * c for e, v in b.items()}, -1)
    return q


def _mono_content(polys):
    n = len(next(iter(polys[0])))
    m = [min(min(e[i] for e in p) for p in polys) for i in range(n)]
    return tuple(m)


def _shift_down(p, m):
    return {tuple(x - y for x, y in zip(e, m)): c for e, c in p.items()}


# -- recursive gcd -----------------------------------------------------------------------------
def _split(p: dict):
    """View p as univariate in the first variable: list of tail polynomials."""
    deg = max(e[0] for e in p)
    out = [dict() for _ in range(deg + 1)]
    for e, c in p.items():
        out[e[0]][e[1:]] = c
    return out


def _join(coeffs):
    out = {}
    for k, c in enumerate(coeffs):
        for e, v in c.items():
            out[(k,) + e] = v
    return out


def _is_const(p: dict) -> bool:
    return len(p) == 1 and all(x == 0 for x in next(iter(p)))


def _gcd_rec(a: dict, b: dict, nv: int) -> dict:
    if not a:
        return b
    if not b:
        return a
    if nv == 0:
        return {(): ONE}
    if _is_const(a) or _is_const(b):
        return {(0,) * nv: ONE}
    ca, cb = _split(a), _split(b)
    cont_a = _content(ca, nv - 1)
    cont_b = _content(cb, nv - 1)
    c = _gcd_rec(cont_a, cont_b, nv - 1)
    pa = [exact_div(x, cont_a) if x else {} for x in ca]
    pb = [exact_div(x, cont_b) if x else {} for x in cb]
    g = _prs_gcd(pa, pb, nv - 1)
    result = [pmul(x, c) if x else {} for x in g]
    return _join(result)


def _content(coeffs, nv):
    g: dict = {}
    for x in coeffs:
        if x:
            g = _gcd_rec(g, x, nv) if g else x
            if _is_const(g):
                return {(0,) * nv: ONE}
    return monic(g) if nv else {(): ONE}


def _trim(u):
    while u and not u[-1]:
        u.pop()
    return u


def _prem(a, b, nv):
    """Pseudo-remainder of univariate a by b over K[tail]."""
    a = [dict(x) for x in a]
    db = len(b) - 1
    lb = b[-1]
    while len(a) - 1 >= db and a:
        da = len(a) - 1
        la = a[-1]
        shift = da - db
        a = [pmul(x, lb) if x else {} for x in a]
        for i, y in enumerate(b):
            if y:
                a[i + shift] = padd(a[i + shift], pmul(y, la), -1)
        _trim(a)
    return a


def _primitive(u, nv):
    if nv == 0:
        lc = u[-1][()]
        return [{(): x[()] / lc} if x else {} for x in u]
    c = _content(u, nv)
    if _is_const(c):
        return u
    return [exact_div(x, c) if x else {} for x in u]


def _prs_gcd(a, b, nv):
    a, b = _trim(list(a)), _trim(list(b))
    if len(a) < len(b):
        a, b = b, a
    while b and len(b) > 1:
        r = _prem(a, b, nv)
        a, b = b, _primitive(r, nv) if r else r
    if not b:
        return _primitive(a, nv)
    # b is a nonzero constant in x: gcd of primitive parts is 1
    return [{(0,) * nv: ONE}]


def poly_gcd(polys: list[dict]) -> dict:
    """Monic gcd of a list of polynomials (dicts) in a common set of variables."""
    polys = [p for p in polys if p]
    if not polys:
        return {}
    for p in polys:
        check_coefficients(p)
    nv = len(next(iter(polys[0])))
    m = _mono_content(polys)
    rest = [_shift_down(p, m) for p in polys]
    g: dict | None = None
    for p in rest:
        if len(p) == 1:
            g = {(0,) * nv: ONE}
            break
    if g is None:
        g = rest[0]
        for p in rest[1:]:
            g = _gcd_rec(g, p, nv)
            if _is_const(g):
                break
    g = monic(g)
    return {tuple(x + y for x, y in zip(e, m)): c for e, c in g.items()}


def conj_poly(p: dict) -> dict:
    return {e: (Complex(c.re, -c.im) if isinstance(c, Complex) else c) for e, c in p.items()}


__all__ = ["CoefficientFieldError", "poly_gcd", "exact_div", "pmul", "padd", "monic", "conj_poly"]
