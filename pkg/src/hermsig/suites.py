"""Batch re-verification of every explicit construction, grouped by topic.

Each suite returns a list of certificates; a suite passes when none of them
has a failed claim.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .constructions import (
    EXCLUDED_PAIRS,
    Certificate,
    M,
    Refusal,
    T,
    cyclotomic_factor,
    example_suite,
    gap_family,
    lemma31_suite,
    prop41,
    prop42,
    table_metadata,
    target_family,
    theorem41_construct,
    theorem82_construct,
    whitney,
)
from .polyring import RealPoly, lift_univariate
from .quotient import stabilization_search
from .scalar import Q


def factorization_suite() -> list:
    out = [lemma31_suite()]
    out += [cyclotomic_factor(m) for m in range(2, 7)]
    out += [gap_family(d) for d in range(1, 10)]
    return out


def thm41_grid(max_sum: int = 12) -> Certificate:
    """Every (A, B) with A + B <= max_sum: constructed, or refused exactly on the excluded pairs."""
    cert = Certificate("thm41_grid", {"max_sum": max_sum})
    refused = set()
    for A in range(max_sum + 1):
        for B in range(max_sum + 1 - A):
            try:
                c = theorem41_construct(A, B)
            except Refusal:
                refused.add((A, B))
                continue
            cert.merge(c, f"({A},{B})")
    cert.claim("refusals", "excluded pairs", sorted(EXCLUDED_PAIRS), sorted(refused))
    return cert


def collapse_suite() -> list:
    out = [example_suite("4.1")]
    out += [prop41(m) for m in range(2, 6)]
    out += [prop42(s) for s in range(1, 5)]
    out.append(example_suite("14"))
    out.append(thm41_grid())
    stab = Certificate("stabilization", {"epsilon": Q(1, 2)})
    P = RealPoly.univariate([1, 1]) ** 4 - RealPoly.univariate([0, 0, 6 + Q(1, 2)])
    r = lift_univariate(P)
    res = stabilization_search(r * r, 3)
    stab.claim("stabilization_d", "r_eps^2", 0, res.d)
    stab.claim("inertia", "r_eps^2", (9, 0, 0), res.triple)
    out.append(stab)
    return out


def degree_suite() -> list:
    return [example_suite("6.1", m=m) for m in range(1, 6)]


def two_variable_suite() -> list:
    out = [whitney(d) for d in range(1, 11)]
    out.append(example_suite("7.1"))
    out.append(example_suite("7.2"))
    c0 = theorem82_construct(2, 4, 4)
    c1 = theorem82_construct(2, 4, 4, degree_boost=1)
    c2 = theorem82_construct(2, 4, 4, degree_boost=2)
    deg = Certificate("unbounded_degree", {"n": 2, "A": 4, "B": 4})
    for c in (c0, c1, c2):
        deg.merge(c, f"boost{c.params['degree_boost']}")
    ds = [c.data["projective_degree"] for c in (c0, c1, c2)]
    deg.data["projective_degrees"] = ds
    deg.claim("strictly_increasing", "projective degrees", True, ds[0] < ds[1] < ds[2])
    out.append(deg)
    meta = table_metadata(2)
    tab = Certificate("table", {"n": 2})
    for (A, B), cell in sorted(meta["cells"].items()):
        if "status" in cell:
            tab.claim("cell", f"({A},{B})={cell['value']}", "verified", cell["status"])
    out.append(tab)
    return out


def stability_suite(ns=(2, 3, 4), span: int = 10) -> list:
    out = []
    tf = Certificate("target_family_ranges", {"n": [2, 3, 4, 5]})
    for n in (2, 3, 4, 5):
        for N in range(T(n), T(n) + 11):
            tf.merge(target_family(n, N), f"n={n},N={N}")
    try:
        target_family(3, 4)
        refused = False
    except Refusal:
        refused = True
    tf.claim("refusal", "n=3, N=4", True, refused)
    out.append(tf)
    for n in ns:
        sweep = Certificate("stability_sweep", {"n": n, "M": M(n), "span": span})
        count = 0
        for s in range(M(n), M(n) + span + 1):
            for A in range(2, s - 1):
                c = theorem82_construct(n, A, s - A)
                sweep.merge(c, f"({A},{s - A})")
                count += 1
        sweep.data["certificates"] = count
        out.append(sweep)
    unb = Certificate("degree_unbounded", {})
    for n, A, B in ((2, 7, 5), (3, 20, 10), (4, 30, 30)):
        lo = theorem82_construct(n, A, B)
        hi = theorem82_construct(n, A, B, degree_boost=3)
        unb.merge(lo, f"n={n},({A},{B}),boost0")
        unb.merge(hi, f"n={n},({A},{B}),boost3")
        gap = hi.data["projective_degree"] - lo.data["projective_degree"]
        unb.claim("degree_gap>=5", f"n={n},({A},{B})", True, gap >= 5)
    out.append(unb)
    return out


SUITES = {
    "s3": factorization_suite,
    "s4": collapse_suite,
    "s6": degree_suite,
    "s7": two_variable_suite,
    "s8": stability_suite,
}


def _run_one(key: str) -> list:
    return SUITES[key]()


def run_suite(name: str, jobs: int | None = None) -> list:
    """Certificates of one suite, or of all of them in a fixed order.

    ``all`` runs the suites in separate worker processes (``jobs`` of them,
    default one per suite up to the CPU count); ``jobs=1`` stays in-process.
    """
    if name == "all":
        keys = list(SUITES)
        workers = min(len(keys), jobs or os.cpu_count() or 1)
        if workers <= 1:
            parts = [_run_one(k) for k in keys]
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_run_one, keys))
        return [c for part in parts for c in part]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from all, {', '.join(SUITES)}")
    return SUITES[name]()


__all__ = ["SUITES", "run_suite", "thm41_grid"]
