import pytest
import sympy
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from hermsig.expr import parse_expression
from hermsig.gcd import CoefficientFieldError, poly_gcd
from hermsig.polyring import HermPoly, RealPoly, hyperquadric
from hermsig.quotient import (
    divide_by_r,
    divide_real,
    holomorphic_content,
    in_ideal_r,
    projective_degree,
    stabilization_search,
)
from hermsig.scalar import sqrt
from property_suites import herm_polys

X, Y = sympy.symbols("x y")


def _to_sympy(p: dict):
    return sum(sympy.Rational(int(c.numerator), int(c.denominator)) * X ** e[0] * Y ** e[1] for e, c in p.items())


def test_sphere_membership():
    assert in_ideal_r(hyperquadric(2))
    assert not in_ideal_r(parse_expression("|z1|^2", nvars=3))
    w = divide_by_r(parse_expression("|z1|^4 - |z1|^2*|z2|^2"))
    assert w.member and w.verify()
    assert w.quotient == parse_expression("|z1|^2", nvars=2)


def test_remainder_is_free_of_the_eliminated_product():
    p = parse_expression("|z1|^4 + z1*~z2 + z2*~z1 + |z3|^2", nvars=3)
    for var in range(3):
        w = divide_by_r(p, var=var)
        assert w.verify()
        assert all(min(a[var], b[var]) == 0 for (a, b) in w.remainder.terms)


def test_divide_real_sphere():
    W2 = parse_expression("x1^2 + x1*x2 + x2")  # Whitney d = 2
    w = divide_real(W2 - RealPoly.constant(1, 2))
    assert w.member and w.verify()
    with pytest.raises(ValueError):
        divide_real(W2, L=parse_expression("x1^2 - 1"))


def test_content_and_projective_degree():
    p = parse_expression("|z1 + z2|^2*(|z1|^2 + |z2|^2 - |z3|^2)")
    h, q = holomorphic_content(p)
    assert len(h) == 2
    assert q == hyperquadric(2)
    D, red = projective_degree(p)
    assert D == 2 and red.bidegree == (1, 1) and red.verify()


def test_projective_degree_of_hyperquadric_and_refusals():
    assert projective_degree(hyperquadric(3))[0] == 2
    with pytest.raises(ValueError):
        projective_degree(parse_expression("1 + |z1|^2"))
    with pytest.raises(ValueError):
        projective_degree(HermPoly(2, {}))


def test_gcd_rejects_inexact_fields():
    with pytest.raises(CoefficientFieldError):
        poly_gcd([{(1, 0): sqrt(2)}, {(0, 1): mpq(1)}])


def test_stabilization():
    p = parse_expression("|z1|^4 - |z1|^2*|z2|^2 + |z2|^4")
    # (x^2 - xy + y^2)(x + y)^d first has all coefficients positive at d = 3
    res = stabilization_search(p, 4)
    assert res.d == 3 and res.triple == (6, 0, 0)
    assert stabilization_search(p, 2).d is None
    with pytest.raises(ValueError):
        stabilization_search(hyperquadric(1), 2)


poly2 = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-4, 4).filter(bool).map(mpq),
    min_size=1,
    max_size=5,
)


def _mul(a, b):
    out = {}
    for e, c in a.items():
        for f, d in b.items():
            k = (e[0] + f[0], e[1] + f[1])
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


@settings(max_examples=150)
@given(f=poly2, g=poly2, h=poly2)
def test_gcd_against_sympy(f, g, h):
    a, b = _mul(f, h), _mul(g, h)
    ours = _to_sympy(poly_gcd([a, b]))
    theirs = sympy.gcd(_to_sympy(a), _to_sympy(b))
    ratio = sympy.cancel(ours / theirs)
    assert ratio.free_symbols == set()


@given(p=herm_polys(max_vars=3, max_deg=2))
def test_content_factorization_reassembles(p):
    if p.is_zero():
        return
    p = p if p.is_bihomogeneous() else p * p
    if not p.is_bihomogeneous():
        return
    D, red = projective_degree(p)
    assert red.verify()
    assert D <= 2 * p.degree()


@given(p=herm_polys(max_vars=2, max_deg=2), e=st.tuples(st.integers(0, 2), st.integers(0, 2)))
def test_projective_degree_ignores_monomial_factors(p, e):
    p = p.pad(2)
    if p.is_zero() or not p.is_bihomogeneous():
        return
    assert projective_degree(p.mul_abs2(e))[0] == projective_degree(p)[0]
