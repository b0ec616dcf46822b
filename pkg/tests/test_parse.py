import pytest
from hypothesis import given

from hermsig.expr import ParseError, format_poly, parse_expression
from hermsig.polyring import HermitianSymmetryError, HermPoly, RealPoly, hyperquadric
from hermsig.scalar import Q, sqrt
from property_suites import herm_polys, real_polys


def test_hyperquadric_literal():
    assert parse_expression("|z1|^2 + |z2|^2 - |z3|^2") == hyperquadric(2)


def test_abs_of_sum_expands():
    p = parse_expression("|z1 + z2|^2")
    assert format_poly(p) == "z1*~z1 + z1*~z2 + z2*~z1 + z2*~z2"


def test_precedence_and_unary_minus():
    assert parse_expression("-2^2 + 1", kind="real") == RealPoly.constant(-3, 1)
    assert parse_expression("2*x1^2 - x1/2") == RealPoly(1, {(2,): 2, (1,): Q(-1, 2)})
    assert parse_expression("x1^{3}") == parse_expression("x1*x1*x1")


def test_radicals_and_imaginary_unit():
    p = parse_expression("sqrt(2)*|z1|^2")
    assert p.terms[((1,), (1,))] == sqrt(2)
    q = parse_expression("i*z1*~z2 - i*z2*~z1")
    assert not q.is_diagonal()


def test_padding():
    p = parse_expression("|z1|^2", nvars=3)
    assert p.nvars == 3


@pytest.mark.parametrize(
    "text, pos",
    [("(z1 +", 5), ("z1^-1", 3), ("z1/z2", 2), ("z1 $ z2", 3)],
)
def test_parse_errors_report_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.pos == pos


def test_mixing_and_symmetry_errors():
    with pytest.raises(ParseError):
        parse_expression("z1 + x1")
    with pytest.raises(HermitianSymmetryError):
        parse_expression("z1")


@given(p=herm_polys())
def test_herm_round_trip(p):
    q = parse_expression(format_poly(p), nvars=p.nvars, kind="herm")
    assert isinstance(q, HermPoly) and q == p


@given(P=real_polys())
def test_real_round_trip(P):
    assert parse_expression(format_poly(P), nvars=P.nvars, kind="real") == P
