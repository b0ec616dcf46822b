import math

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from hermsig.scalar import (
    CosineField,
    IndeterminateSignError,
    Interval,
    cos_pi_over,
    interval_from_iv,
    sign_of,
    sqrt,
    to_float,
)


def test_enclosure_of_exact_value_refines():
    x = Interval.of(sqrt(2), prec=64)
    assert x.lo < x.hi
    assert x.contains(sqrt(2))
    y = x.refined(512)
    assert y.width < mpq(1, 2**500)
    assert y.sign() == 1


def test_interval_arithmetic_contains_true_value():
    a = Interval.of(sqrt(2))
    b = Interval.of(mpq(1, 3))
    c = (a * a - b) / (a + 1)
    want = (2 - 1 / 3) / (math.sqrt(2) + 1)
    assert float(c.lo) <= want <= float(c.hi)


def test_sign_refines_until_decided():
    # 2cos(pi/64) - 1.99759 is positive but tiny relative to a coarse grid
    c = cos_pi_over(6, prec=8)
    diff = c - mpq(199759, 100000)
    assert diff.sign() == 1


def test_mpmath_route_agrees_with_cosine_field():
    for m in range(2, 7):
        exact = cos_pi_over(m, prec=200)
        iv = interval_from_iv(lambda v, m=m: 2 * v.cos(v.pi / 2**m), prec=200)
        assert iv.lo <= exact.hi and exact.lo <= iv.hi
        assert iv.width < mpq(1, 10**50)


def test_zero_without_shadow_is_indeterminate(monkeypatch):
    monkeypatch.setenv("HERMSIG_MAX_PREC", "256")
    zero = interval_from_iv(lambda v: v.sqrt(v.mpf(2)) ** 2 - 2, prec=64)
    with pytest.raises(IndeterminateSignError, match="HERMSIG_MAX_PREC"):
        zero.sign()


def test_zero_with_shadow_is_decided():
    s = Interval.of(sqrt(2))
    assert (s * s - 2).sign() == 0


def test_cosine_field_minimal_polynomial():
    # 2cos(pi/8) has degree 4 over Q
    F = CosineField(3)
    assert F.degree == 4
    c = F.gen()
    assert math.isclose(to_float(c), 2 * math.cos(math.pi / 8), rel_tol=1e-12)
    # (c^2 - 2)^2 = 2
    assert (c * c - 2) ** 2 == 2


@given(st.integers(1, 31), st.integers(4, 6))
def test_cosine_chebyshev_values(j, m):
    F = CosineField(m)
    x = F.chebyshev(j)
    assert math.isclose(to_float(x), 2 * math.cos(j * math.pi / 2**m), abs_tol=1e-12)
    want = 2 * math.cos(j * math.pi / 2**m)
    if abs(want) > 1e-9:
        assert sign_of(x) == (1 if want > 0 else -1)
