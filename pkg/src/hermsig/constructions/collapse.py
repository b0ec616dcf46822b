"""Rank collapse under products, indefinite factorizations and the worked examples."""
from __future__ import annotations

from ..expr import parse_expression
from ..polyring import HermPoly, RealPoly, lift_univariate, sign_counts
from ..scalar import Q, sqrt
from .certificate import Certificate, Refusal
from .factorizations import _cyclotomic_exact, lemma31_identities, reflect

uni = RealPoly.univariate

EPS_HALVINGS = 40

# the four (q, r) pairs behind the collapse examples, with s(q), s(r), s(qr)
PROP42_CASES = {
    1: ("sextic", ((2, 2), (2, 1), (1, 1))),
    2: ("octic", ((5, 0), (3, 2), (2, 0))),
    3: ("dodecic", ((6, 3), (2, 1), (2, 0))),
    4: ("septic", ((3, 3), (2, 1), (2, 2))),
}


def _collapse_cert(name, params, Pq: RealPoly, Pr: RealPoly, expected) -> Certificate:
    cert = Certificate(name, params)
    q = cert.add("q", lift_univariate(Pq))
    r = cert.add("r", lift_univariate(Pr))
    qr = cert.add("result", q * r)
    cert.claim("identity", "q*r == H((Q*R) o m)", True, qr == lift_univariate(Pq * Pr))
    cert.check_signature("q", q, expected[0])
    cert.check_signature("r", r, expected[1])
    cert.check_signature("result", qr, expected[2])
    cert.output = qr
    return cert


def prop41(m: int) -> Certificate:
    """q = H(Q o m) positive, r = H(Q(-t) o m) indefinite, qr with two positive squares."""
    if m < 2:
        raise ValueError("m >= 2 required")
    Qt = _cyclotomic_exact(m)
    half = 1 << (m - 2)
    return _collapse_cert("prop41", {"m": m}, Qt, reflect(Qt), ((2 * half + 1, 0), (half + 1, half), (2, 0)))


def prop42(selector: int) -> Certificate:
    if selector not in PROP42_CASES:
        raise ValueError("selector must be 1, 2, 3 or 4")
    name, expected = PROP42_CASES[selector]
    P, P1, P2 = lemma31_identities()[name]
    # order the factors so that r is the one with a single negative sign
    if name in ("sextic", "dodecic", "septic"):
        Pq, Pr = (P1, P2) if sign_counts(P2) == (2, 1) else (P2, P1)
    else:
        Pq, Pr = P1, P2
    return _collapse_cert("prop42", {"selector": selector, "identity": name}, Pq, Pr, expected)


def prop4_examples(m: int | None = None, selector: int | None = None) -> Certificate:
    if (m is None) == (selector is None):
        raise ValueError("give exactly one of m or selector")
    return prop41(m) if m is not None else prop42(selector)


# -----------------------------------------------------------------------------
# Indefinite factors with a prescribed product signature
# -----------------------------------------------------------------------------
EXCLUDED_PAIRS = {(0, 0), (1, 0), (0, 1)}

REFUSAL_REASON = (
    "no product of two indefinite forms has signature pair {pair}: a product of nonzero "
    "polynomials is nonzero, and a product of rank one forces both factors to have rank one, "
    "while an indefinite form has rank at least two"
)


def _halving(build, ok):
    eps = Q(1, 2)
    for _ in range(EPS_HALVINGS):
        r1, r2 = build(eps)
        if ok(r1, r2):
            return r1, r2, eps
        eps /= 2
    raise RuntimeError("epsilon halving exhausted without a verified choice")


def _pure_plus(N: int):
    """(N, 0) from (1 + t^12)^(N-2) (1 - sqrt2 t + t^2) times the degree-ten cofactor."""
    s2 = sqrt(2)
    r1 = uni([1, -s2, 1]) * uni([1] + [0] * 11 + [1]) ** (N - 2)
    r2 = uni([1, s2, 1, 0, -1, -s2, -1, 0, 1, s2, 1])
    return r1, r2, None


def _one_negative(k: int):
    """(k, 1) from (1 - t) * [(1 - t)(1 + eps t)^(k-2)]."""
    r1 = uni([1, -1])

    def build(eps):
        return r1, uni([1, -1]) * uni([1, eps]) ** (k - 2)

    def ok(a, b):
        Sb = sign_counts(b)
        return Sb[0] >= 1 and Sb[1] >= 1 and sign_counts(a * b) == (k, 1)

    return _halving(build, ok)


def _general(A: int, B: int):
    """A, B >= 2: + at exponents 0..A-2 and d = A + B - 2, - elsewhere, times (1 - eps t)."""
    d = A + B - 2
    r1 = uni([1 if (i <= A - 2 or i == d) else -1 for i in range(d + 1)])

    def build(eps):
        return r1, uni([1, -eps])

    def ok(a, b):
        return sign_counts(a * b) == (A, B)

    return _halving(build, ok)


def theorem41_construct(A: int, B: int) -> Certificate:
    """Indefinite one-variable factors r1, r2 whose product has signature pair (A, B)."""
    if A < 0 or B < 0:
        raise ValueError("signature counts are non-negative")
    if (A, B) in EXCLUDED_PAIRS:
        raise Refusal(REFUSAL_REASON.format(pair=(A, B)))
    negate = False
    a, b = A, B
    if a == 0 or (a == 1 and b >= 2):
        a, b, negate = b, a, True
    if b == 0:
        r1, r2, eps = _pure_plus(a)
        case = "pure"
    elif (a, b) == (1, 1):
        _, r1, r2 = lemma31_identities()["sextic"]
        eps = None
        case = "rank-two"
    elif b == 1:
        r1, r2, eps = _one_negative(a)
        case = "one-negative"
    else:
        r1, r2, eps = _general(a, b)
        case = "general"
    if negate:
        r1 = -r1
    cert = Certificate("thm41", {"A": A, "B": B})
    cert.chosen = {"case": case, "negated": negate}
    if eps is not None:
        cert.chosen["epsilon"] = eps
    cert.data["S(r1)"] = sign_counts(r1)
    cert.data["S(r2)"] = sign_counts(r2)
    p1 = cert.add("r1", lift_univariate(r1))
    p2 = cert.add("r2", lift_univariate(r2))
    prod = cert.add("result", p1 * p2)
    s1 = cert.check_signature("r1", p1, sign_counts(r1))
    s2 = cert.check_signature("r2", p2, sign_counts(r2))
    cert.claim("indefinite", "r1", True, s1[0] >= 1 and s1[1] >= 1)
    cert.claim("indefinite", "r2", True, s2[0] >= 1 and s2[1] >= 1)
    cert.check_signature("result", prod, (A, B))
    cert.output = (p1, p2)
    return cert


# -----------------------------------------------------------------------------
# Worked examples
# -----------------------------------------------------------------------------
def _squared_norm_example(eps=Q(1, 2)) -> Certificate:
    """P = (1 + t)^4 - (6 + eps) t^2 is indefinite while P^2 has only positive coefficients."""
    eps = Q(eps)
    cert = Certificate("example", {"name": "4.1", "epsilon": eps})
    P = uni([1, 1]) ** 4 - uni([0, 0, 6 + eps])
    r = cert.add("r", lift_univariate(P))
    r2 = cert.add("result", r * r)
    claim = 0 < eps < 1
    cert.check_signature("r", r, (4, 1) if claim else None)
    cert.check_signature("result", r2, (9, 0) if claim else None)
    if claim:
        cert.claim("sign_counts", "P", (4, 1), sign_counts(P))
        cert.claim("sign_counts", "P^2", (9, 0), sign_counts(P * P))
    cert.output = r
    return cert


def _triple_example() -> Certificate:
    cert = Certificate("example", {"name": "14"})
    p = cert.add("p", parse_expression("z1*~z3 + z2*~z2 + z3*~z1"))
    q = cert.add(
        "q",
        parse_expression("z1^2*~z3^2 + z2^2*~z2^2 + z3^2*~z1^2 - z1*z3*~z1*~z3 - z1*z2*~z2*~z3 - z2*z3*~z1*~z2"),
    )
    pq = cert.add("result", p * q)
    printed = parse_expression("z1^3*~z3^3 + z2^3*~z2^3 + z3^3*~z1^3 - 3*z1*z2*z3*~z1*~z2*~z3")
    cert.claim("identity", "p*q as printed", True, pq == printed)
    cert.check_inertia("p", p, (2, 1, 0))
    cert.check_inertia("q", q, (3, 3, 0))
    cert.check_inertia("result", pq, (2, 2, 6))
    cert.check_signature("result", pq, (2, 2))
    # diagonal counterparts from 1 - t^2 - 2t^6 + t^7 = (1 - t + t^2)(1 + t - t^2 - 2t^3 - t^4 + t^5)
    _, Pp, Pq = lemma31_identities()["septic"]
    for nv, want in ((2, ((2, 1, 0), (3, 3, 0), (2, 2, 4))), (3, ((2, 1, 3), (3, 3, 15), (2, 2, 32)))):
        a, b = lift_univariate(Pp, nv), lift_univariate(Pq, nv)
        cert.add(f"septic_p_{nv}", a)
        cert.add(f"septic_q_{nv}", b)
        cert.check_inertia(f"septic_p_{nv}", a, want[0])
        cert.check_inertia(f"septic_q_{nv}", b, want[1])
        cert.check_inertia(f"septic_pq_{nv}", a * b, want[2])
    dod = lift_univariate(uni([1] + [0] * 11 + [1]))
    cert.add("sum_of_two_12th_powers", dod)
    cert.check_inertia("sum_of_two_12th_powers", dod, (2, 0, 11))
    cert.output = pq
    return cert


def _degree_example(m: int = 1) -> Certificate:
    """p, q, r that agree with |z3|^(2..) on the sphere; q has projective degree 2m + 2."""
    if m < 1:
        raise ValueError("m >= 1 required")
    cert = Certificate("example", {"name": "6.1", "m": m})
    k = 2 * m
    p = cert.add("p", parse_expression(f"|z1|^{k}*(|z1|^2 + |z2|^2 - |z3|^2)"))
    q = cert.add("result", parse_expression(f"|z1|^{k + 2} + |z1|^{k}*|z2|^2 + |z3|^{k + 2} - |z1|^{k}*|z3|^2"))
    r = cert.add("r", parse_expression("-|z3|^2/2 + 3*(|z1|^2 + |z2|^2)/2"))
    cert.check_signature("p", p, (2, 1))
    cert.check_signature("result", q, (3, 1))
    cert.check_signature("r", r, (2, 1))
    cert.check_member("p", p)
    z3 = HermPoly.abs2_monomial((0, 0, 1))
    cert.check_member("q - |z3|^(2m+2)", q - z3 ** (m + 1))
    cert.check_member("r - |z3|^2", r - z3)
    cert.check_projdeg("p", p, 2)
    cert.check_projdeg("result", q, 2 * m + 2)
    cert.check_projdeg("r", r, 2)
    cert.output = q
    return cert


def lambda_case(lam) -> tuple | None:
    """Signature pair the printed case table predicts for (A, B, C), or None."""
    A, B, C = (Q(x) for x in lam)
    if A == 0 and 0 < C < B:
        return (3, 2)
    if A == 0 and 0 < C == B:
        return (3, 1)
    if C > A >= B > 0:
        return (5, 1)
    if A == C > B > 0:
        return (4, 1)
    if B > C > A > 0:
        return (4, 2)
    return None


def expected_lambda(lam) -> tuple | None:
    """Case-table prediction, including the swap under lambda -> -lambda."""
    got = lambda_case(lam)
    if got is not None:
        return got
    neg = lambda_case([-Q(x) for x in lam])
    return None if neg is None else (neg[1], neg[0])


LAMBDA_DEFAULTS = ((0, 2, 1), (0, 1, 1), (2, 1, 3), (2, 1, 2), (1, 3, 2))


def lambda_element(lam) -> HermPoly:
    """H of (A x + B y + C zeta)(x + y - zeta) with x, y, zeta = |z1|^2, |z2|^2, |z3|^2."""
    A, B, C = (Q(x) for x in lam)
    x, y, z = (RealPoly.var(i, 3) for i in range(3))
    h = (x * A + y * B + z * C) * (x + y - z)
    return HermPoly._raw(3, {(e, e): c for e, c in h.terms.items()})


def _lambda_example(lams=None) -> Certificate:
    lams = LAMBDA_DEFAULTS if lams is None else [tuple(l) for l in lams]
    cert = Certificate("example", {"name": "7.1", "lambda": [list(l) for l in lams]})
    for lam in lams:
        tag = "lambda=(" + ",".join(str(Q(v)) for v in lam) + ")"
        p = cert.add(tag, lambda_element(lam))
        want = expected_lambda(lam)
        cert.check_signature(tag, p, want)
        cert.check_member(tag, p)
        if len(lams) == 1:
            cert.check_signature("result", p, want)
            cert.output = p
    return cert


def eq22_element() -> HermPoly:
    return parse_expression("(|z1|^2 - |z2|^2)*(|z1|^2 + |z2|^2 - |z3|^2)")


def _rank_two_product_example() -> Certificate:
    cert = Certificate("example", {"name": "7.2"})
    f1 = cert.add("first", parse_expression("|z1|^2 - |z2|^2", nvars=3))
    f2 = cert.add("second", parse_expression("|z1|^2 + |z2|^2 - |z3|^2"))
    p = cert.add("result", eq22_element())
    cert.claim("identity", "result == first*second", True, p == f1 * f2)
    cert.check_signature("first", f1, (1, 1))
    cert.check_signature("second", f2, (2, 1))
    cert.check_signature("result", p, (2, 2))
    cert.check_member("result", p)
    cert.output = p
    return cert


EXAMPLES = {
    "4.1": _squared_norm_example,
    "14": _triple_example,
    "6.1": _degree_example,
    "7.1": _lambda_example,
    "7.2": _rank_two_product_example,
}


def example_suite(name: str, **params) -> Certificate:
    if name not in EXAMPLES:
        raise ValueError(f"unknown example {name!r}; choose from {sorted(EXAMPLES)}")
    return EXAMPLES[name](**params)


__all__ = [
    "EXAMPLES",
    "EXCLUDED_PAIRS",
    "LAMBDA_DEFAULTS",
    "PROP42_CASES",
    "eq22_element",
    "example_suite",
    "expected_lambda",
    "lambda_element",
    "prop41",
    "prop42",
    "prop4_examples",
    "theorem41_construct",
]
