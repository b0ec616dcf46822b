"""One-variable factorization identities, cyclotomic factors, gap and Whitney families."""
from __future__ import annotations

import random

import mpmath

from ..hermitian_form import rank
from ..polyring import RealPoly, moment_lift, sign_counts
from ..quotient import divide_real
from ..scalar import ONE, CosineField, Interval, Q, interval_from_iv, sqrt
from ..scalar.interval import enclose
from .certificate import Certificate

uni = RealPoly.univariate


def reflect(P: RealPoly) -> RealPoly:
    """P(-t)."""
    return RealPoly(1, {e: (-c if e[0] % 2 else c) for e, c in P.terms.items()})


def lemma31_identities(a=None) -> dict:
    """The five factorizations P = P1 * P2 as {name: (P, P1, P2)}.

    ``a`` is the octic parameter, sqrt(4 + 2 sqrt 2) unless given.
    """
    s2 = sqrt(2)
    if a is None:
        a = sqrt(4 + 2 * s2)
    half_a2 = a * a / 2
    return {
        "quartic": (uni([1, 0, 0, 0, 1]), uni([1, s2, 1]), uni([1, -s2, 1])),
        "sextic": (uni([1, 0, 0, 0, 0, 0, -1]), uni([1, 1, 0, -1, -1]), uni([1, -1, 1])),
        "octic": (
            uni([1, 0, 0, 0, 0, 0, 0, 0, 1]),
            uni([1, a, half_a2, a, 1]),
            uni([1, -a, half_a2, -a, 1]),
        ),
        "dodecic": (
            uni([1] + [0] * 11 + [1]),
            uni([1, -s2, 1]),
            uni([1, s2, 1, 0, -1, -s2, -1, 0, 1, s2, 1]),
        ),
        "septic": (uni([1, 0, -1, 0, 0, 0, -2, 1]), uni([1, -1, 1]), uni([1, 1, -1, -2, -1, 1])),
    }


# sign counts (P, first factor, second factor) as printed alongside the identities
LEMMA31_SIGNS = {
    "quartic": ((2, 0), (3, 0), (2, 1)),
    "sextic": ((1, 1), (2, 2), (2, 1)),
    "octic": ((2, 0), (5, 0), (3, 2)),
    "dodecic": ((2, 0), (2, 1), (6, 3)),
    "septic": ((2, 2), (2, 1), (3, 3)),
}


def lemma31_suite() -> Certificate:
    cert = Certificate("lemma31")
    s2 = sqrt(2)
    for label, a in (("plus", sqrt(4 + 2 * s2)), ("minus", sqrt(4 - 2 * s2))):
        ids = lemma31_identities(a)
        for name, (P, P1, P2) in ids.items():
            if label == "minus" and name != "octic":
                continue
            tag = name if label == "plus" else "octic_minus"
            cert.add(f"{tag}.P", P)
            cert.add(f"{tag}.P1", P1)
            cert.add(f"{tag}.P2", P2)
            cert.claim("identity", f"{tag}: P == P1*P2", True, P == P1 * P2)
            for part, poly, want in zip(("P", "P1", "P2"), (P, P1, P2), LEMMA31_SIGNS[name]):
                cert.claim("sign_counts", f"{tag}.{part}", want, sign_counts(poly))
    cert.chosen["octic_a"] = ["sqrt(4 + 2*sqrt(2))", "sqrt(4 - 2*sqrt(2))"]
    return cert


# -----------------------------------------------------------------------------
# Cyclotomic factor of t^(2^m) + 1
# -----------------------------------------------------------------------------
def _cyclotomic_exact(m: int) -> RealPoly:
    if m == 2:
        return uni([1, sqrt(2), 1])
    if m == 3:
        a = sqrt(4 + 2 * sqrt(2))
        return uni([1, a, a * a / 2, a, 1])
    F = CosineField(m)
    Qt = uni([1])
    for o in range(1, 1 << (m - 1), 2):
        Qt = Qt * uni([1, F.chebyshev(o), 1])
    return Qt


def _interval_poly_mul(a: list, b: list) -> list:
    out = [None] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            v = x * y
            out[i + j] = v if out[i + j] is None else out[i + j] + v
    return out


def _cyclotomic_intervals(m: int, prec: int) -> list:
    """Coefficients of Q from direct interval cosines, without the cosine field."""
    one = Interval.of(ONE, prec)
    coeffs = [one]
    for o in range(1, 1 << (m - 1), 2):
        c = interval_from_iv(lambda iv, o=o: 2 * iv.cos(o * iv.pi / (1 << m)), prec)
        coeffs = _interval_poly_mul(coeffs, [one, c, one])
    return coeffs


def cyclotomic_factor(m: int, prec: int = 256, width: float = 1e-30) -> Certificate:
    """Q(t) with positive coefficients and Q(t) Q(-t) = t^(2^m) + 1.

    Exact in a quadratic tower for m <= 3 and in the cosine field for larger m;
    for m >= 4 an independent interval product certifies positivity and the
    identity to the requested width.
    """
    if m < 2:
        raise ValueError("cyclotomic factor needs m >= 2")
    cert = Certificate("cyclotomic", {"m": m})
    target = uni([1] + [0] * ((1 << m) - 1) + [1])
    Qt = _cyclotomic_exact(m)
    cert.add("Q", Qt)
    cert.add("P", target)
    coeffs = Qt.coeffs_univariate()
    cert.claim("degree", "Q", 1 << (m - 1), Qt.degree())
    cert.claim("identity", "Q(t)*Q(-t) == t^(2^m)+1", True, Qt * reflect(Qt) == target)
    cert.claim("sign_counts", "Q", ((1 << (m - 1)) + 1, 0), sign_counts(Qt))
    cert.output = Qt
    if m >= 4:
        iq = _cyclotomic_intervals(m, prec)
        cert.claim("interval_positive", "Q", True, all(c.lo > 0 for c in iq))
        neg = [(-c if k % 2 else c) for k, c in enumerate(iq)]
        prod = _interval_poly_mul(iq, neg)
        want = target.coeffs_univariate()
        contains = all(c.lo <= w <= c.hi for c, w in zip(prod, want))
        widest = max(c.width for c in prod)
        cert.claim("interval_identity", "Q(t)*Q(-t) encloses t^(2^m)+1", True, contains)
        cert.claim("interval_width", "Q(t)*Q(-t)", True, widest <= Q(width))
        agree = all(c.lo <= hi and lo <= c.hi for c, (lo, hi) in zip(iq, (enclose(e, prec) for e in coeffs)))
        cert.claim("routes_agree", "cosine field vs interval cosines", True, agree)
        cert.data["max_width"] = f"{float(widest):.3e}"
        cert.chosen["prec_bits"] = prec
    return cert


# -----------------------------------------------------------------------------
# Gap family and Whitney polynomials (two real variables x, y)
# -----------------------------------------------------------------------------
def _xy():
    return RealPoly.var(0, 2), RealPoly.var(1, 2)


def gap_polynomial(d: int) -> RealPoly:
    """f_d via the power sums s_d of the roots of T^2 - xT - y."""
    if d < 1:
        raise ValueError("gap family needs d >= 1")
    x, y = _xy()
    s = [None, x, x * x + 2 * y]
    for k in range(3, d + 1):
        s.append(x * s[k - 1] + y * s[k - 2])
    sign = 1 if (d + 1) % 2 == 0 else -1
    return s[d] + (y**d if sign > 0 else -(y**d))


def _radical_check(f: RealPoly, d: int, rng: random.Random) -> bool:
    """Compare f_d with its closed radical form at random points where x^2 + 4y > 0."""
    with mpmath.workdps(40):
        for _ in range(5):
            xv = mpmath.mpf(rng.uniform(-2, 2))
            yv = mpmath.mpf(rng.uniform(0.05, 2))
            root = mpmath.sqrt(xv**2 + 4 * yv)
            closed = ((xv + root) / 2) ** d + ((xv - root) / 2) ** d + (-1) ** (d + 1) * yv**d
            val = sum(
                mpmath.mpf(int(c.numerator)) / int(c.denominator) * xv ** e[0] * yv ** e[1]
                for e, c in f.terms.items()
            )
            if abs(val - closed) > mpmath.mpf(10) ** -25 * (1 + abs(closed)):
                return False
    return True


def _lift_minus_one(P: RealPoly):
    """H((P - 1) o m) in three variables."""
    return moment_lift((P - RealPoly.constant(ONE, 2)).homogenize())


def gap_family(d: int, seed: int = 0) -> Certificate:
    cert = Certificate("gap", {"d": d})
    f = gap_polynomial(d)
    cert.add("f", f)
    w = divide_real(f - RealPoly.constant(ONE, 2))
    cert.claim("divisible", "f_d - 1 by x + y - 1", True, w.member and w.verify())
    cert.claim("closed_form", "f_d vs radical expression", True, _radical_check(f, d, random.Random(seed + d)))
    p = cert.add("result", _lift_minus_one(f))
    m = d // 2
    want = (m + 2, 1) if d % 2 else (m + 1, 2)
    cert.check_signature("result", p, want)
    wit = cert.check_member("result", p)
    q = cert.add("q", wit.quotient)
    cert.claim("rank", "q", d * (d + 1) // 2, rank(q))
    cert.output = p
    return cert


def whitney_polynomial(d: int) -> RealPoly:
    if d < 1:
        raise ValueError("Whitney polynomial needs d >= 1")
    x, y = _xy()
    W = x**d
    for k in range(d):
        W = W + x**k * y
    return W


def whitney(d: int) -> Certificate:
    cert = Certificate("whitney", {"d": d})
    W = cert.add("W", whitney_polynomial(d))
    x = RealPoly.var(0, 1)
    on_line = W.compose([x, RealPoly.constant(ONE, 1) - x])
    cert.claim("identity", "W_d(x, 1 - x) == 1", True, on_line == RealPoly.constant(ONE, 1))
    p = cert.add("result", _lift_minus_one(W))
    cert.check_signature("result", p, (d + 1, 1))
    w = cert.check_member("result", p)
    cert.add("quotient", w.quotient)
    cert.output = p
    return cert


__all__ = [
    "LEMMA31_SIGNS",
    "cyclotomic_factor",
    "gap_family",
    "gap_polynomial",
    "lemma31_identities",
    "lemma31_suite",
    "reflect",
    "whitney",
    "whitney_polynomial",
]
