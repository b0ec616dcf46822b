"""Elements of H(n; A, B) in the ideal of the hyperquadric form.

Everything here builds diagonal (moment-lift type) elements or elements whose
new terms are degree-separated from the old ones, then recomputes signature
and membership exactly.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from ..hermitian_form import signature_pair
from ..polyring import HermPoly, glex_key, hyperquadric, unit_vector
from ..quotient import divide_by_r, projective_degree
from ..scalar import ONE, Q, sign_of
from .certificate import Certificate, Refusal
from .collapse import eq22_element, lambda_element


def T(n: int) -> int:
    """Threshold n^2 - 2n + 2 past which every target dimension N is realized."""
    return n * n - 2 * n + 2


def M(n: int) -> int:
    """Stability threshold 2(2n^2 - n) on A + B."""
    return 2 * (2 * n * n - n)


def _nvars_n(p: HermPoly) -> int:
    return p.nvars - 1


def _split_diagonal(p: HermPoly):
    """(positive {alpha: c}, negative {alpha: c}) for a diagonal p."""
    if not p.is_diagonal():
        raise ValueError("expected a diagonal (moment-lift type) polynomial")
    pos, neg = {}, {}
    for (a, _), c in p.terms.items():
        (pos if sign_of(c) > 0 else neg)[a] = c
    return pos, neg


def _require_member(p: HermPoly):
    w = divide_by_r(p)
    if not w.member:
        raise Refusal("the polynomial is not in the ideal generated by r")
    return w


# -----------------------------------------------------------------------------
# Shift: add (n, 1) or (1, n) to the signature pair
# -----------------------------------------------------------------------------
def shift_construct(p: HermPoly, sign: int, k: int | None = None, quotient: HermPoly | None = None,
                    verify: bool = True) -> Certificate:
    """q = r (Hv + sign |z1|^(2k)) for p = r v.

    Hv pads v to bidegree (k, k) with powers of |z_{n+1}|^2.  Requires
    k >= deg v + 2 so the new terms cannot meet the old ones.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    N1 = p.nvars
    n = N1 - 1
    if quotient is None:
        quotient = _require_member(p).quotient
    elif verify and hyperquadric(n) * quotient != p:
        raise ValueError("supplied quotient does not reproduce p")
    m = quotient.degree()
    if k is None:
        k = m + 2
    if k < m + 2:
        raise Refusal(f"k = {k} is too small: need k >= deg v + 2 = {m + 2} to keep the new terms separate")
    last = unit_vector(n, N1)
    pad = tuple(x * (k - m) for x in last)
    Hv = quotient.mul_abs2(pad)
    z1k = HermPoly.abs2_monomial(tuple(k if i == 0 else 0 for i in range(N1)), ONE if sign > 0 else -ONE)
    V = Hv + z1k
    q = hyperquadric(n) * V
    cert = Certificate("shift", {"n": n, "sign": "+" if sign > 0 else "-", "k": k})
    cert.chosen["k"] = k
    cert.add("result", q)
    cert.add("quotient", V)
    cert.output = q
    if verify:
        A, B = signature_pair(p)
        step = (n, 1) if sign > 0 else (1, n)
        cert.check_signature("result", q, (A + step[0], B + step[1]))
        cert.check_member("result", q)
    return cert


# -----------------------------------------------------------------------------
# Elements of H(n; N, 1)
# -----------------------------------------------------------------------------
def tensor_move(p: HermPoly, j: int = 0, verify: bool = True) -> Certificate:
    """p' = |z_{n+1}|^2 p + c_j |z^alpha_j|^2 r, where c_j |z^alpha_j|^2 is a positive
    term of p free of z_{n+1}; adds n - 1 positive squares."""
    n = _nvars_n(p)
    pos, neg = _split_diagonal(p)
    free = sorted((a for a in pos if a[n] == 0), key=glex_key, reverse=True)
    if not free:
        raise Refusal("no positive term free of the last variable")
    if not 0 <= j < len(free):
        raise ValueError(f"term index {j} out of range (0..{len(free) - 1})")
    alpha = free[j]
    last = unit_vector(n, p.nvars)
    out = p.mul_abs2(last) + HermPoly.abs2_monomial(alpha, pos[alpha]) * hyperquadric(n)
    cert = Certificate("tensor_move", {"n": n, "j": j})
    cert.chosen["alpha"] = alpha
    cert.add("result", out)
    cert.output = out
    if verify:
        A, B = signature_pair(p)
        cert.check_signature("result", out, (A + n - 1, B))
        cert.check_member("result", out)
    return cert


def _single_negative_power(neg: dict, n: int) -> bool:
    if len(neg) != 1:
        return False
    a = next(iter(neg))
    return all(x == 0 for x in a[:n])


def juxtapose(p1: HermPoly, p2: HermPoly, t=Q(1, 2), allow_overlap: bool = False,
              verify: bool = True) -> Certificate:
    """t pad(p1) + (1 - t) pad(p2), both padded to a common degree by |z_{n+1}|^2."""
    t = Q(t)
    if not 0 < t < 1:
        raise ValueError("weight must lie strictly between 0 and 1")
    if p1.nvars != p2.nvars:
        raise ValueError("summands live in different dimensions")
    n = _nvars_n(p1)
    D = max(p1.degree(), p2.degree())
    last = unit_vector(n, p1.nvars)
    parts = []
    for p in (p1, p2):
        pos, neg = _split_diagonal(p)
        if not _single_negative_power(neg, n):
            raise ValueError("each summand needs a single negative term that is a power of |z_{n+1}|^2")
        s = D - p.degree()
        parts.append(p.mul_abs2(tuple(x * s for x in last)) if s else p)
    pos1 = set(_split_diagonal(parts[0])[0])
    pos2 = set(_split_diagonal(parts[1])[0])
    overlap = pos1 & pos2
    if overlap and not allow_overlap:
        raise ValueError(
            f"positive supports collide in {len(overlap)} monomial(s); raise the degree of one summand"
        )
    out = parts[0] * t + parts[1] * (1 - t)
    cert = Certificate("juxtapose", {"n": n, "t": t})
    cert.chosen["overlap"] = len(overlap)
    cert.add("result", out)
    cert.output = out
    if verify:
        cert.check_signature("result", out, (len(pos1 | pos2), 1))
        cert.check_member("result", out)
    return cert


def target_counts(n: int, N: int):
    """(j, k) with N = j n + k (n - 1), j >= 1 as large as possible, or None."""
    if n < 2:
        raise ValueError("n >= 2 required")
    for j in range(N // n, 0, -1):
        rest = N - j * n
        if rest % (n - 1) == 0:
            return j, rest // (n - 1)
    return None


@lru_cache(maxsize=512)
def _target_element(n: int, N: int) -> HermPoly:
    j, k = target_counts(n, N)
    p = hyperquadric(n)
    for _ in range(j - 1):
        p = juxtapose(p, tensor_move(p, verify=False).output, allow_overlap=True, verify=False).output
    for _ in range(k):
        p = tensor_move(p, verify=False).output
    return p


def target_family(n: int, N: int, verify: bool = True) -> Certificate:
    """An element of H(n; N, 1) in I(r): N = j n + k (n - 1) via j - 1 partial
    juxtapositions of p with its tensor move, then k tensor moves."""
    if n < 2:
        raise ValueError("n >= 2 required")
    if N < n:
        raise Refusal(f"N = {N} is below n = {n}: a nonconstant sphere map needs N >= n")
    counts = target_counts(n, N)
    if counts is None:
        raise Refusal(f"no j >= 1, k >= 0 with {n} j + {n - 1} k = {N}")
    p = _target_element(n, N)
    cert = Certificate("target_family", {"n": n, "N": N})
    cert.chosen = {"j": counts[0], "k": counts[1], "T(n)": T(n)}
    cert.add("result", p)
    cert.output = p
    if verify:
        cert.check_signature("result", p, (N, 1))
        cert.check_member("result", p)
    return cert


# -----------------------------------------------------------------------------
# Lattice decomposition and the stability construction
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Decomposition:
    """(A, B) = orient((N, 1) + a (n, 1) + b (1, n))."""

    n: int
    A: int
    B: int
    swapped: bool
    N: int
    a: int
    b: int
    method: str

    @property
    def orientation(self) -> str:
        return "swapped" if self.swapped else "direct"

    def check(self) -> bool:
        A, B = (self.B, self.A) if self.swapped else (self.A, self.B)
        n = self.n
        return (
            self.a >= 0 and self.b >= 0 and self.N >= T(n)
            and A == self.N + self.a * n + self.b and B == 1 + self.a + self.b * n
        )


def _search(n, A, B):
    for b in range((B - 1) // n, -1, -1):
        a = B - 1 - b * n
        N = A - a * n - b
        if N >= T(n):
            return N, a, b
    return None


def stability_decompose(n: int, A: int, B: int) -> Decomposition:
    if n < 2:
        raise ValueError("n >= 2 required")
    if A < 2 or B < 2:
        raise ValueError("A, B >= 2 required")
    swapped = A < B
    A1, B1 = (B, A) if swapped else (A, B)
    b = B1 // n
    a = B1 - b * n - 1
    N = A1 - a * n - b
    if a >= 0 and N >= T(n):
        return Decomposition(n, A, B, swapped, N, a, b, "formula")
    for sw in (swapped, not swapped):
        A1, B1 = (B, A) if sw else (A, B)
        found = _search(n, A1, B1)
        if found:
            return Decomposition(n, A, B, sw, *found, "search")
    raise Refusal(f"(A, B) = ({A}, {B}) is not (N, 1) + a ({n}, 1) + b (1, {n}) with N >= {T(n)} in either orientation")


def _extra_bases_n2():
    """Non-lattice starting points in two variables: signature -> builder."""
    return {
        (3, 2): ("lambda (0,2,1)", lambda: lambda_element((0, 2, 1))),
        (2, 3): ("lambda (0,-2,-1)", lambda: lambda_element((0, -2, -1))),
        (2, 2): ("difference times r", eq22_element),
    }


def _extra_route(A, B):
    best = None
    for (A0, B0), (label, build) in _extra_bases_n2().items():
        # (A, B) = (A0, B0) + a (2, 1) + b (1, 2)
        for b in range(B + 1):
            a = B - B0 - 2 * b
            if a < 0:
                continue
            if A0 + 2 * a + b == A:
                if best is None or a + b < best[2] + best[3]:
                    best = (label, build, a, b)
    return best


def theorem82_construct(n: int, A: int, B: int, degree_boost: int = 0, verify_steps: bool = False) -> Certificate:
    """A verified element of H(n; A, B) in I(r).

    Base from target_family(n, N) (or, for n = 2, one of the small
    non-lattice elements), then a plus-shifts and b minus-shifts; a swapped
    orientation is applied by negating at the end.  ``degree_boost`` raises k
    in every shift and so the projective degree of the result.
    """
    cert = Certificate("thm82", {"n": n, "A": A, "B": B, "degree_boost": degree_boost})
    try:
        dec = stability_decompose(n, A, B)
        base = _target_element(n, dec.N)
        a, b, swapped = dec.a, dec.b, dec.swapped
        cert.chosen.update({"orientation": dec.orientation, "N": dec.N, "a": a, "b": b, "method": dec.method})
    except Refusal:
        route = _extra_route(A, B) if n == 2 else None
        if route is None:
            raise
        label, build, a, b = route
        base, swapped = build(), False
        cert.chosen.update({"base": label, "a": a, "b": b, "method": "small base"})
    cert.chosen["M"] = M(n)
    cert.chosen["T(n)"] = T(n)
    p = base
    v = _require_member(p).quotient
    ks = []
    for sign in [1] * a + [-1] * b:
        k = v.degree() + 2 + degree_boost
        step = shift_construct(p, sign, k, quotient=v, verify=verify_steps)
        if verify_steps:
            cert.merge(step, f"shift{len(ks)}")
        p, v = step.output, step.polynomials["quotient"]
        ks.append(k)
    if swapped:
        p = -p
    cert.chosen["k"] = ks
    cert.add("result", p)
    cert.output = p
    cert.check_signature("result", p, (A, B))
    cert.check_member("result", p)
    D, red = projective_degree(p)
    cert.claim("reduction", "result", True, red.verify())
    cert.data["projective_degree"] = D
    return cert


# -----------------------------------------------------------------------------
# Degree estimate and the two-variable table
# -----------------------------------------------------------------------------
def degree_bound(n: int, N: int):
    """N(N - 1) / (2(2n - 3)) for n >= 2."""
    if n < 2:
        raise Refusal("degree estimates of this form fail for maps from the circle (n = 1)")
    return Q(N * (N - 1), 2 * (2 * n - 3))


IMPORTED = "imported from the two-variable classification, not recomputed"


def table_value(A: int, B: int) -> str:
    if (A, B) == (0, 0):
        return "0"
    if A == 0 or B == 0 or (A, B) == (1, 1):
        return "-"
    if (A, B) in ((2, 1), (1, 2)):
        return "1"
    if (A, B) in ((2, 2), (3, 1), (1, 3)):
        return "3"
    if (A, B) in ((3, 2), (2, 3)):
        return "e"
    if A == 1 or B == 1:
        return "f"
    return "∞"


def table_metadata(n: int = 2, max_A: int = 5, max_B: int = 5, certify: bool = True) -> dict:
    """Per-cell status of the two-variable table, rows B = max_B..0 and columns A = 0..max_A."""
    if n != 2:
        raise ValueError("the table is only available for n = 2")
    cells = {}
    for B in range(max_B + 1):
        for A in range(max_A + 1):
            val = table_value(A, B)
            cell = {"value": val}
            if val == "∞" and certify:
                c = theorem82_construct(2, A, B)
                c2 = theorem82_construct(2, A, B, degree_boost=1)
                ok = c.verified and c2.verified and c2.data["projective_degree"] > c.data["projective_degree"]
                cell["source"] = "constructive"
                cell["status"] = "verified" if ok else "failed"
                cell["projective_degrees"] = [c.data["projective_degree"], c2.data["projective_degree"]]
            elif val == "e" and certify:
                c = theorem82_construct(2, A, B)
                cell["source"] = "constructive (non-empty; finiteness open)"
                cell["status"] = c.status
            elif val == "∞":
                cell["source"] = "constructive"
            else:
                cell["source"] = IMPORTED
            cells[(A, B)] = cell
    return {"n": n, "rows": list(range(max_B, -1, -1)), "columns": list(range(max_A + 1)), "cells": cells}


def format_table(meta: dict) -> str:
    lines = []
    for B in meta["rows"]:
        row = [meta["cells"][(A, B)]["value"] for A in meta["columns"]]
        lines.append(f"{B:>3} | " + " ".join(f"{v:>2}" for v in row) + "  ...")
    lines.append("----+" + "-" * (3 * len(meta["columns"]) + 5))
    lines.append("B/A | " + " ".join(f"{A:>2}" for A in meta["columns"]) + "  ...")
    return "\n".join(lines)


__all__ = [
    "Decomposition",
    "M",
    "T",
    "degree_bound",
    "format_table",
    "juxtapose",
    "shift_construct",
    "stability_decompose",
    "table_metadata",
    "table_value",
    "target_counts",
    "target_family",
    "tensor_move",
    "theorem82_construct",
]
