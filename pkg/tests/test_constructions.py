import json

import pytest

from hermsig.constructions import (
    Certificate,
    Refusal,
    cyclotomic_factor,
    example_suite,
    gap_family,
    gap_polynomial,
    lemma31_identities,
    reflect,
    theorem41_construct,
    whitney,
    whitney_polynomial,
)
from hermsig.constructions.collapse import LAMBDA_DEFAULTS, expected_lambda, lambda_element
from hermsig.hermitian_form import signature_pair
from hermsig.polyring import RealPoly, lift_univariate, sign_counts
from hermsig.quotient import divide_real, in_ideal_r
from hermsig.scalar import Q


def test_whitney_json():
    doc = json.loads(whitney(2).to_json())
    assert doc["signature"] == [3, 1]
    assert doc["status"] == "verified"
    assert doc["construction"] == "whitney"
    assert {"construction", "params", "status", "claims", "chosen_parameters", "polynomials"} <= set(doc)
    assert all(c["status"] == "verified" for c in doc["claims"])


def test_corrupted_claim_fails():
    cert = whitney(3)
    cert.claims[1].expected = (9, 9)
    assert not cert.verified
    doc = json.loads(cert.to_json(polynomials=False))
    assert doc["status"] == "failed"
    assert "polynomials" not in doc


def test_certificate_without_claims_is_computed():
    cert = Certificate("bare")
    assert cert.status == "computed"


def test_reflection_is_an_involution():
    P = RealPoly.univariate([1, 2, 0, 5])
    assert reflect(reflect(P)) == P
    assert reflect(P).coeffs_univariate() == [1, -2, 0, -5]


def test_identities_are_exact_products():
    ids = lemma31_identities()
    for name, entry in ids.items():
        P, P1, P2 = entry
        assert P1 * P2 == P, name
    assert sign_counts(ids["quartic"][1]) == (3, 0)


def test_cyclotomic_exact_low_depth():
    cert = cyclotomic_factor(3)
    Qt = cert.output
    coeffs = Qt.coeffs_univariate()
    assert len(coeffs) == 5
    minus = RealPoly.univariate([c * (-1) ** i for i, c in enumerate(coeffs)])
    assert Qt * minus == RealPoly.univariate([1] + [0] * 7 + [1])
    assert cert.verified


def test_whitney_polynomial_is_one_on_the_line():
    for d in range(1, 7):
        W = whitney_polynomial(d)
        assert divide_real(W - RealPoly.constant(1, 2)).member
        assert sign_counts(W) == (d + 1, 0)


def test_gap_polynomials_match_first_cases():
    assert gap_polynomial(1) == RealPoly(2, {(1, 0): 1, (0, 1): 1})
    assert gap_polynomial(2) == RealPoly(2, {(2, 0): 1, (0, 2): -1, (0, 1): 2})
    assert gap_family(4).verified


def test_theorem41_small_cases():
    for A, B in [(2, 0), (1, 1), (3, 1), (1, 3), (2, 2), (4, 3)]:
        cert = theorem41_construct(A, B)
        r1, r2 = cert.polynomials["r1"], cert.polynomials["r2"]
        assert signature_pair(r1)[0] >= 1 and signature_pair(r1)[1] >= 1
        assert signature_pair(r2)[0] >= 1 and signature_pair(r2)[1] >= 1
        assert signature_pair(r1 * r2) == (A, B)
    for pair in [(0, 0), (1, 0), (0, 1)]:
        with pytest.raises(Refusal):
            theorem41_construct(*pair)


def test_theorem41_swapped_cases_negate_a_factor():
    a, b = theorem41_construct(3, 0), theorem41_construct(0, 3)
    assert not a.chosen["negated"] and b.chosen["negated"]
    assert b.polynomials["r1"] == -a.polynomials["r1"]
    assert signature_pair(b.polynomials["result"]) == (0, 3)
    c = theorem41_construct(2, 5)
    assert signature_pair(c.polynomials["result"]) == (2, 5)


def test_squared_norm_example_family():
    for eps in ["1/2", "1/3", "3/4"]:
        cert = example_suite("4.1", eps=eps)
        assert cert.verified
    r = cert.polynomials["r"]
    assert signature_pair(r * r) == (9, 0)


def test_lambda_elements():
    for lam in LAMBDA_DEFAULTS:
        p = lambda_element(lam)
        assert in_ideal_r(p)
        assert signature_pair(p) == expected_lambda(lam)


def test_degree_example_values():
    cert = example_suite("6.1", m=2)
    assert [c.computed for c in cert.claims if c.kind == "projective_degree"] == [2, 6, 2]


def test_unknown_example():
    with pytest.raises((KeyError, ValueError)):
        example_suite("9.9")


def test_lifted_whitney_is_in_the_ideal():
    for d in (1, 4):
        cert = whitney(d)
        assert in_ideal_r(cert.polynomials["result"])
        assert signature_pair(cert.polynomials["result"]) == (d + 1, 1)
    assert signature_pair(lift_univariate(RealPoly.univariate([1, Q(-1)]))) == (1, 1)
