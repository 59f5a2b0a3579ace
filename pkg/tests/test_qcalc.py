"""Deformed exponential/logarithm: values, domains, algebraic identities."""

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qdimer import (
    EPS_SWITCH,
    DomainError,
    QParams,
    q_cosh,
    q_exp,
    q_exp_continued,
    q_exp_mixed_product,
    q_exp_pair_product,
    q_log,
    q_sinh,
)

QS = st.floats(min_value=-1.0, max_value=2.9, allow_nan=False)
XS = st.floats(min_value=-6.0, max_value=6.0, allow_nan=False)


def in_domain(q: float, x: float) -> bool:
    return abs(q - 1.0) < EPS_SWITCH or (1.0 - q) * x > -1.0


class TestQExp:
    def test_zero_argument_is_one(self):
        for q in (0.2, 0.5, 1.0, 1.7, 2.0, 2.8):
            assert q_exp(q, 0.0) == 1.0

    def test_classical_limit(self):
        assert q_exp(1.0, 1.0) == pytest.approx(math.e, rel=1e-15)

    def test_direct_evaluation_q2(self):
        # [1 + (1-2)(-1)]^(1/(1-2)) = 2^-1
        assert q_exp(2.0, -1.0) == pytest.approx(0.5, abs=1e-15)

    def test_cutoff_below_one(self):
        # 1 + 0.5*(-2.5) = -0.25 <= 0 with q < 1
        assert q_exp(0.5, -2.5) == 0.0
        assert q_exp(0.5, -2.0) == 0.0  # exactly at the cutoff edge

    def test_pole_above_one_raises(self):
        with pytest.raises(DomainError):
            q_exp(2.0, 1.0)
        with pytest.raises(DomainError):
            q_exp(2.0, 1.5)

    def test_nonfinite_rejected(self):
        with pytest.raises(DomainError):
            q_exp(math.nan, 1.0)
        with pytest.raises(DomainError):
            q_exp(1.5, math.inf)

    @given(x=st.floats(min_value=-5.0, max_value=5.0, allow_nan=False))
    @settings(max_examples=200, deadline=None)
    def test_continuity_at_q1(self, x):
        for dq in (1e-8, -1e-8):
            assert abs(q_exp(1.0 + dq, x) - math.exp(x)) <= 1e-6 * math.exp(x)

    @given(q=QS, x=XS)
    @settings(max_examples=300, deadline=None)
    def test_pair_product_identity(self, q, x):
        assume(in_domain(q, x) and in_domain(q, -x))
        assume(in_domain(q, (q - 1.0) * x * x))
        lhs = q_exp_pair_product(q, x)
        rhs = q_exp(q, (q - 1.0) * x * x)
        assume(rhs > 1e-12)  # relative comparison needs a nonzero target
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    def test_pair_product_with_cutoff_factors(self):
        # q < 1 with one factor cut off: both sides vanish together.
        q, x = 0.5, 3.0
        assert q_exp(q, -x) == 0.0
        assert q_exp_pair_product(q, x) == 0.0
        assert q_exp(q, (q - 1.0) * x * x) == 0.0

    def test_mixed_product_differs_from_pair(self):
        # One classical factor does not close under the q-algebra.
        q, x = 2.0, 0.5
        pair = q_exp_pair_product(q, x)
        mixed = q_exp_mixed_product(q, x)
        assert pair == pytest.approx(q_exp(q, (q - 1.0) * x * x), rel=1e-14)
        assert abs(mixed - pair) > 1e-2
        assert q_exp_mixed_product(1.0, x) == pytest.approx(1.0, rel=1e-14)


class TestQLog:
    def test_identity_cases(self):
        for q in (0.3, 1.0, 2.5):
            assert q_log(q, 1.0) == 0.0

    def test_classical_limit(self):
        assert q_log(1.0, math.e) == pytest.approx(1.0, rel=1e-15)

    def test_inverse_of_q_exp_value(self):
        # (0.5^-1 - 1)/(-1) = -1, inverting q_exp(2, -1) = 0.5
        assert q_log(2.0, 0.5) == pytest.approx(-1.0, abs=1e-15)

    def test_nonpositive_rejected(self):
        for bad in (0.0, -1.0):
            with pytest.raises(DomainError):
                q_log(1.5, bad)

    @given(q=QS, x=XS)
    @settings(max_examples=300, deadline=None)
    def test_roundtrip(self, q, x):
        assume(in_domain(q, x))
        y = q_exp(q, x)
        assume(y > 0.0 and math.isfinite(y))
        assert abs(q_log(q, y) - x) <= 1e-10


class TestQCoshSinh:
    def test_zero_argument(self):
        for q in (0.4, 1.0, 1.8):
            assert q_cosh(q, 0.0) == 1.0
            assert q_sinh(q, 0.0) == 0.0

    def test_classical_cosh(self):
        assert q_cosh(1.0, 1.0) == pytest.approx(1.5430806348152437, rel=1e-14)

    def test_parity(self):
        for q in (0.5, 1.3):
            for x in (0.2, 0.7):
                assert q_cosh(q, x) == q_cosh(q, -x)
                assert q_sinh(q, x) == -q_sinh(q, -x)

    def test_guard_boundary_raises(self):
        # exp_q(+1) at q = 2 sits exactly on the pole 1 + (1-q)x = 0
        with pytest.raises(DomainError):
            q_sinh(2.0, 1.0)

    @given(q=QS, x=st.floats(min_value=-1.5, max_value=1.5, allow_nan=False))
    @settings(max_examples=300, deadline=None)
    def test_hyperbolic_identity(self, q, x):
        assume(in_domain(q, x) and in_domain(q, -x))
        lhs = q_cosh(q, x) ** 2 - q_sinh(q, x) ** 2
        rhs = q_exp_pair_product(q, x)
        assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))


class TestContinuation:
    def test_matches_strict_inside_domain(self):
        for q, x in ((2.0, 0.5), (2.0, -3.0), (0.5, -1.0), (1.0, 0.3)):
            assert q_exp_continued(q, x) == q_exp(q, x)

    def test_q2_past_pole_is_rational(self):
        # exp_2(x) = 1/(1-x) continues to negative values past x = 1
        assert q_exp_continued(2.0, 2.0) == pytest.approx(-1.0, rel=1e-15)
        assert q_exp_continued(2.0, 1.25) == pytest.approx(-4.0, rel=1e-15)

    def test_integer_exponent_family(self):
        # q = 1.5 has exponent 1/(1-q) = -2: continues with positive sign
        assert q_exp_continued(1.5, 4.0) == pytest.approx(1.0, rel=1e-15)

    def test_non_integer_exponent_raises(self):
        with pytest.raises(DomainError):
            q_exp_continued(3.0, 0.6)

    def test_pole_itself_raises(self):
        with pytest.raises(DomainError):
            q_exp_continued(2.0, 1.0)

    def test_below_one_keeps_cutoff(self):
        assert q_exp_continued(0.5, -3.0) == 0.0


class TestQParams:
    def test_validation(self):
        with pytest.raises(DomainError):
            QParams(q=math.nan)
        with pytest.raises(DomainError):
            QParams(q=math.inf)

    def test_flags(self):
        assert QParams(q=1.0).is_classical
        assert QParams(q=1.0 + 1e-10).is_classical
        assert not QParams(q=1.2).is_classical
        assert QParams(q=1.2).chi2_compatible
        assert not QParams(q=0.8).chi2_compatible
