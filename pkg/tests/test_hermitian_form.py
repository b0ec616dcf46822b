import pytest
from hypothesis import given

from hermsig.expr import parse_expression
from hermsig.hermitian_form import (
    AmbientError,
    congruence_diagonalize,
    eigen_oracle,
    form_matrix,
    inertia,
    is_indefinite,
    rank,
    signature_pair,
)
from hermsig.polyring import bihomogenize, hyperquadric, lift_univariate, moment_lift, sign_counts
from hermsig.scalar import ZERO, Q, conj, sqrt
from property_suites import form_matrix_inertia_agrees, herm_polys, real_polys


def _sandwich(T, M):
    n = len(M)
    TM = [[sum((conj(T[k][i]) * M[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]
    return [[sum((TM[i][k] * T[k][j] for k in range(n)), ZERO) for j in range(n)] for i in range(n)]


def test_hyperquadric_inertia():
    assert inertia(hyperquadric(3)).triple == (3, 1, 0)
    assert signature_pair(hyperquadric(1)) == (1, 1)
    assert is_indefinite(hyperquadric(1))


def test_ambient_padding_adds_zero_eigenvalues():
    p = parse_expression("|z1|^2")
    assert inertia(p).triple == (1, 0, 0)
    assert inertia(p, nvars=3).triple == (1, 0, 2)
    with pytest.raises(AmbientError):
        inertia(parse_expression("|z1|^2 + |z2|^2"), nvars=1)
    with pytest.raises(AmbientError):
        inertia(parse_expression("|z1|^2"), degree=2)


def test_non_bihomogeneous_input_is_bihomogenized():
    p = parse_expression("1 + |z1|^2 - |z1|^4")
    res = inertia(p)
    assert res.ambient == (2, 2)
    assert res.triple == (2, 1, 0)
    assert res.triple == inertia(bihomogenize(p)).triple


def test_off_diagonal_pivot_needs_rotation():
    # z1 w2 + z2 w1 has zero diagonal: (1, 1)
    p = parse_expression("z1*~z2 + z2*~z1")
    res = inertia(p)
    assert res.triple == (1, 1, 0)
    assert res.verify_witness()
    q = parse_expression("i*z1*~z2 - i*z2*~z1")
    assert signature_pair(q) == (1, 1)


def test_witness_is_a_congruence():
    M = [[Q(0), Q(1), Q(2)], [Q(1), Q(0), Q(-1)], [Q(2), Q(-1), Q(3)]]
    diag, T = congruence_diagonalize(M)
    D = _sandwich(T, M)
    for i in range(3):
        for j in range(3):
            assert D[i][j] == (diag[i] if i == j else 0)


def test_irrational_coefficients():
    # (1 - sqrt2 t + t^2) has sign counts (2, 1)
    from hermsig.polyring import RealPoly

    P = RealPoly.univariate([1, -sqrt(2), 1])
    assert signature_pair(lift_univariate(P)) == (2, 1)


def test_form_matrix_matches_oracle():
    p = parse_expression("(|z1|^2 + |z2|^2 - |z3|^2)*(|z1|^2 - |z2|^2)")
    fm = form_matrix(p)
    assert fm.dim == 6
    assert eigen_oracle(fm) == inertia(p).triple
    assert rank(p) == 4


def test_zero_polynomial():
    p = parse_expression("|z1|^2 - |z1|^2", nvars=2)
    assert signature_pair(p) == (0, 0)


@given(p=herm_polys(max_vars=2))
def test_block_inertia_equals_dense_congruence(p):
    p = bihomogenize(p) if not p.is_bihomogeneous() else p
    if p.is_zero():
        return
    assert form_matrix_inertia_agrees(p)
    assert inertia(p).verify_witness()


@given(p=herm_polys(max_vars=2))
def test_negation_swaps_signature(p):
    A, B = signature_pair(p)
    assert signature_pair(-p) == (B, A)


@given(p=herm_polys(max_vars=2))
def test_scaling_by_positive_constant_is_invisible(p):
    assert signature_pair(p * Q(7, 3)) == signature_pair(p)


@given(P=real_polys())
def test_diagonal_forms_count_coefficient_signs(P):
    assert signature_pair(moment_lift(P)) == sign_counts(P)
