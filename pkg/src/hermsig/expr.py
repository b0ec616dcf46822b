"""Expression parser and printer shared by the library and the CLI.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    atom   := NUMBER | 'i' | 'z'k | '~z'k | 'x'k | '(' expr ')'
            | '|' expr '|' | 'sqrt' '(' expr ')'

``|E|^2k`` means ``(E * conj(E))^k``; ``~zk`` is the conjugate variable.
Division is allowed by constants only.  Exponents are non-negative integers,
optionally in braces.  z- and x-variables cannot be mixed.
"""
from __future__ import annotations

import re

from gmpy2 import mpq

from .polyring import HermitianSymmetryError, HermPoly, RealPoly
from .scalar import (
    ONE,
    ZERO,
    Complex,
    conj,
    fmt,
    imag_part,
    is_zero,
    real_part,
    sign_of,
    sqrt,
)

SLOTS = 9


class ParseError(ValueError):
    def __init__(self, msg: str, pos: int, text: str = ""):
        super().__init__(f"{msg} at position {pos}" + (f": {text!r}" if text else ""))
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<var>~?[zx][1-9])|(?P<sqrt>sqrt)|(?P<i>i)(?![a-z0-9])"
    r"|(?P<op>[-+*/^()|{}]))"
)


def _tokenize(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character", pos, text[pos : pos + 8])
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", n))
    return out


# -- intermediate representation: dict (z-exp, w-exp, x-exp) -> complex scalar ---------------
_ZERO_E = (0,) * SLOTS


def _const(c):
    return {} if is_zero(c) else {(_ZERO_E, _ZERO_E, _ZERO_E): c}


def _add(p, q, sign=1):
    out = dict(p)
    for k, c in q.items():
        if sign < 0:
            c = -c
        v = out.get(k)
        v = c if v is None else v + c
        if is_zero(v):
            out.pop(k, None)
        else:
            out[k] = v
    return out


def _mul(p, q):
    out = {}
    for (a1, b1, x1), c1 in p.items():
        for (a2, b2, x2), c2 in q.items():
            key = (
                tuple(u + v for u, v in zip(a1, a2)),
                tuple(u + v for u, v in zip(b1, b2)),
                tuple(u + v for u, v in zip(x1, x2)),
            )
            v = out.get(key)
            out[key] = c1 * c2 if v is None else v + c1 * c2
    return {k: c for k, c in out.items() if not is_zero(c)}


def _pow(p, k):
    result = _const(ONE)
    for _ in range(k):
        result = _mul(result, p)
    return result


def _conj(p):
    return {(b, a, x): conj(c) for (a, b, x), c in p.items()}


def _is_const(p):
    return all(k == (_ZERO_E, _ZERO_E, _ZERO_E) for k in p)


def _const_value(p):
    return next(iter(p.values()), ZERO)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, value=None):
        tok = self.toks[self.i]
        if value is not None and tok[1] != value:
            raise ParseError(f"expected {value!r}, found {tok[1] or 'end of input'!r}", tok[2])
        self.i += 1
        return tok

    def parse(self):
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self, inside_bars=False):
        p = self.term(inside_bars)
        while True:
            tok = self.peek()
            if tok[1] in ("+", "-") and tok[0] == "op":
                self.take()
                q = self.term(inside_bars)
                p = _add(p, q, 1 if tok[1] == "+" else -1)
            else:
                return p

    def term(self, inside_bars):
        p = self.unary(inside_bars)
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in ("*", "/"):
                self.take()
                q = self.unary(inside_bars)
                if tok[1] == "*":
                    p = _mul(p, q)
                else:
                    if not _is_const(q) or not q:
                        raise ParseError("division only by nonzero constants", tok[2])
                    c = _const_value(q)
                    p = {k: v / c for k, v in p.items()}
            else:
                return p

    def unary(self, inside_bars):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            p = self.unary(inside_bars)
            return p if tok[1] == "+" else {k: -c for k, c in p.items()}
        return self.power(inside_bars)

    def exponent(self):
        tok = self.peek()
        if tok[1] == "{":
            self.take()
            e = self.take()
            self.take("}")
        else:
            e = self.take()
        if e[0] != "num" or "." in e[1]:
            raise ParseError("exponent must be a non-negative integer", e[2])
        return int(e[1]), e[2]

    def power(self, inside_bars):
        tok = self.peek()
        if tok[1] == "|" and tok[0] == "op" and not inside_bars:
            self.take()
            inner = self.expr(inside_bars=True)
            self.take("|")
            if self.peek()[1] != "^":
                raise ParseError("|E| must be raised to an even power", tok[2])
            self.take("^")
            k, pos = self.exponent()
            if k % 2:
                raise ParseError("|E|^k needs an even exponent", pos)
            return _pow(_mul(inner, _conj(inner)), k // 2)
        base = self.atom(inside_bars)
        if self.peek()[1] == "^":
            self.take()
            k, _ = self.exponent()
            return _pow(base, k)
        return base

    def atom(self, inside_bars):
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return _const(mpq(val))
        if kind == "i":
            return _const(Complex(ZERO, ONE))
        if kind == "var":
            conjugate = val.startswith("~")
            name = val.lstrip("~")
            idx = int(name[1]) - 1
            e = tuple(1 if j == idx else 0 for j in range(SLOTS))
            if name[0] == "x":
                if conjugate:
                    raise ParseError("real variables have no conjugate", pos)
                return {(_ZERO_E, _ZERO_E, e): ONE}
            return {(_ZERO_E, e, _ZERO_E): ONE} if conjugate else {(e, _ZERO_E, _ZERO_E): ONE}
        if kind == "sqrt":
            self.take("(")
            inner = self.expr()
            self.take(")")
            if not _is_const(inner):
                raise ParseError("sqrt takes a constant argument", pos)
            c = _const_value(inner)
            if not is_zero(imag_part(c)):
                raise ParseError("sqrt of a non-real constant", pos)
            try:
                return _const(sqrt(real_part(c)))
            except ArithmeticError as exc:
                raise ParseError(f"sqrt: {exc}", pos) from None
        if kind == "op" and val == "(":
            p = self.expr()
            self.take(")")
            return p
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_expression(text: str, nvars: int | None = None, kind: str | None = None):
    """Parse ``text`` into a :class:`HermPoly` (z-variables) or :class:`RealPoly` (x-variables).

    ``nvars`` pads the result to at least that many variables.  ``kind`` may
    force ``"herm"`` or ``"real"`` for constant expressions.
    """
    raw = _Parser(text).parse()
    uses_z = any(any(a) or any(b) for (a, b, _) in raw)
    uses_x = any(any(x) for (_, _, x) in raw)
    if uses_z and uses_x:
        raise ParseError("cannot mix z and x variables", 0)
    if kind is None:
        kind = "real" if uses_x else "herm"
    if kind == "real" and uses_z or kind == "herm" and uses_x:
        raise ParseError(f"expression is not of kind {kind!r}", 0)
    if kind == "real":
        used = max((max((j + 1 for j, k in enumerate(x) if k), default=0) for (_, _, x) in raw), default=0)
        n = max(used, nvars or 0, 1)
        terms = {}
        for (_, _, x), c in raw.items():
            if not is_zero(imag_part(c)):
                raise ParseError("real polynomials need real coefficients", 0)
            terms[x[:n]] = c
        return RealPoly(n, terms)
    used = 0
    for (a, b, _) in raw:
        for j in range(SLOTS):
            if a[j] or b[j]:
                used = max(used, j + 1)
    n = max(used, nvars or 0, 1)
    terms = {(a[:n], b[:n]): c for (a, b, _), c in raw.items()}
    return HermPoly(n, terms, check=True)


# -- printing ----------------------------------------------------------------------------------
def _coef_text(c):
    """(leading sign, magnitude text or None for 1)."""
    if isinstance(c, Complex):
        return "+", str(c)
    s = sign_of(c) if not hasattr(c, "lo") else (1 if c.lo >= 0 else -1)
    mag = -c if s < 0 else c
    op = "-" if s < 0 else "+"
    if not hasattr(mag, "lo") and mag == 1:
        return op, None
    return op, fmt(mag)


def _mono_text(factors):
    return "*".join(factors)


def _var_factors(e, name):
    out = []
    for j, k in enumerate(e):
        if k == 1:
            out.append(f"{name}{j + 1}")
        elif k > 1:
            out.append(f"{name}{j + 1}^{k}")
    return out


def _join(items):
    if not items:
        return "0"
    parts = []
    for idx, (op, coef, mono) in enumerate(items):
        body = mono if coef is None else (coef if not mono else f"{coef}*{mono}")
        if not body:
            body = "1"
        if idx == 0:
            parts.append(("-" if op == "-" else "") + body)
        else:
            parts.append(f" {op} {body}")
    return "".join(parts)


def format_herm(p: HermPoly) -> str:
    items = []
    for (a, b), c in p.sorted_terms():
        mono = _mono_text(_var_factors(a, "z") + _var_factors(b, "~z"))
        op, coef = _coef_text(c)
        items.append((op, coef, mono))
    return _join(items)


def format_real(P: RealPoly) -> str:
    items = []
    for e, c in P.sorted_terms():
        mono = _mono_text(_var_factors(e, "x"))
        op, coef = _coef_text(c)
        items.append((op, coef, mono))
    return _join(items)


def format_poly(p) -> str:
    return format_herm(p) if isinstance(p, HermPoly) else format_real(p)


__all__ = ["ParseError", "HermitianSymmetryError", "parse_expression", "format_herm", "format_real", "format_poly"]
