"""Certificates: claimed data next to independently recomputed data."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ..expr import format_poly
from ..hermitian_form import inertia, signature_pair
from ..polyring import HermPoly
from ..quotient import divide_by_r, projective_degree


class Refusal(Exception):
    """A construction declined its parameters; ``reason`` says why."""

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


def _jsonable(x):
    if isinstance(x, tuple):
        return [_jsonable(v) for v in x]
    if isinstance(x, list):
        return [_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


@dataclass
class Claim:
    kind: str
    subject: str
    expected: Any
    computed: Any

    @property
    def status(self) -> str:
        return "verified" if self.expected == self.computed else "failed"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "subject": self.subject,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "status": self.status,
        }


@dataclass
class Certificate:
    construction: str
    params: dict = field(default_factory=dict)
    polynomials: dict = field(default_factory=dict)
    claims: list = field(default_factory=list)
    chosen: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)
    output: Any = None

    # -- recording -------------------------------------------------------------------
    def add(self, name: str, poly) -> Any:
        self.polynomials[name] = poly
        return poly

    def claim(self, kind: str, subject: str, expected, computed) -> Claim:
        c = Claim(kind, subject, expected, computed)
        self.claims.append(c)
        return c

    def check_signature(self, name: str, p: HermPoly, expected) -> tuple:
        """Claim s(p) == expected; with expected None just record the value."""
        s = signature_pair(p)
        if expected is None:
            self.data.setdefault("unclaimed_signature", {})[name] = s
        else:
            self.claim("signature", name, tuple(expected), s)
        return s

    def check_inertia(self, name: str, p: HermPoly, expected, nvars: int | None = None) -> tuple:
        res = inertia(p, nvars=nvars)
        self.claim("inertia", name, tuple(expected), res.triple)
        self.data.setdefault("witness_sha256", {})[name] = res.digest()
        return res.triple

    def check_member(self, name: str, p: HermPoly, expected: bool = True):
        w = divide_by_r(p)
        self.claim("member_I(r)", name, expected, w.member and w.verify())
        return w

    def check_projdeg(self, name: str, p: HermPoly, expected) -> int:
        D, res = projective_degree(p)
        self.claim("projective_degree", name, expected, D if res.verify() else None)
        return D

    def merge(self, other: Certificate, prefix: str) -> None:
        for c in other.claims:
            self.claims.append(Claim(c.kind, f"{prefix}.{c.subject}", c.expected, c.computed))

    # -- status ------------------------------------------------------------------------
    @property
    def verified(self) -> bool:
        return bool(self.claims) and all(c.status == "verified" for c in self.claims)

    @property
    def status(self) -> str:
        """"verified", "failed", or "computed" when nothing was claimed."""
        if not self.claims:
            return "computed"
        return "verified" if self.verified else "failed"

    def failures(self) -> list:
        return [c for c in self.claims if c.status != "verified"]

    def to_dict(self, polynomials: bool = True) -> dict:
        d = {
            "construction": self.construction,
            "params": _jsonable(self.params),
            "status": self.status,
            "claims": [c.to_dict() for c in self.claims],
            "chosen_parameters": _jsonable(self.chosen),
            "data": _jsonable(self.data),
        }
        if polynomials:
            d["polynomials"] = {k: format_poly(v) for k, v in self.polynomials.items()}
        sig = next((c for c in self.claims if c.kind == "signature" and c.subject == "result"), None)
        if sig is not None:
            d["signature"] = _jsonable(sig.computed)
        elif "result" in self.data.get("unclaimed_signature", {}):
            d["signature"] = _jsonable(self.data["unclaimed_signature"]["result"])
        return d

    def to_json(self, polynomials: bool = True) -> str:
        return json.dumps(self.to_dict(polynomials), sort_keys=True, indent=2)
