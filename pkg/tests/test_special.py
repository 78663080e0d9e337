import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hyperpow import ConvergenceControl, MinusOnePolicy, PFQSpec, cot_pi, digamma, eval_base, pfq_truncated
from hyperpow.errors import ConvergenceError, DomainError, PoleError

# mpmath at 40 digits, computed once
PSI_1 = -0.57721566490153286061
PSI_HALF = -1.9635100260214234794
TWO_LN2 = 1.3862943611198906188
LI2_HALF_OVER_HALF = 1.1644810529300250118


class TestDigamma:
    def test_unit_step(self):
        assert abs(digamma(2.0) - digamma(1.0) - 1.0) <= 1e-14

    def test_euler_mascheroni(self):
        assert digamma(1.0) == pytest.approx(PSI_1, abs=1e-14)

    def test_half(self):
        # -gamma - 2 ln 2
        assert digamma(0.5) == pytest.approx(PSI_HALF, abs=1e-14)

    def test_against_mpmath_positive(self):
        mpmath.mp.dps = 30
        rng = np.random.default_rng(7)
        xs = 10.0 ** rng.uniform(-3, 6, size=1500)
        for x in xs:
            ref = float(mpmath.digamma(float(x)))
            # one ulp of psi exceeds 1e-13 once |psi| > ~880 (x near 1e-3)
            assert abs(digamma(x) - ref) <= max(1e-13, math.ulp(ref)), x

    def test_against_mpmath_negative(self):
        mpmath.mp.dps = 30
        rng = np.random.default_rng(8)
        for x in rng.uniform(-50, 0, size=500):
            if abs(x - round(x)) < 1e-3:
                continue
            ref = float(mpmath.digamma(float(x)))
            assert digamma(x) == pytest.approx(ref, rel=1e-12, abs=1e-12)

    def test_recurrence(self):
        rng = np.random.default_rng(1)
        for x in rng.uniform(0.1, 50, size=1000):
            assert abs(digamma(x + 1) - digamma(x) - 1 / x) <= 1e-13

    def test_reflection(self):
        rng = np.random.default_rng(2)
        checked = 0
        for x in rng.uniform(-10, 0, size=1100):
            if abs(x - round(x)) < 1e-9:
                continue
            lhs = digamma(1 - x) - digamma(x)
            assert abs(lhs - math.pi * cot_pi(x)) <= 1e-11 * (1 + abs(digamma(x)))
            checked += 1
        assert checked >= 1000

    @pytest.mark.parametrize("x", [0.0, -1.0, -2.0, -17.0, -1e-300])
    def test_poles(self, x):
        with pytest.raises(PoleError):
            digamma(x)

    @pytest.mark.parametrize("x", [math.nan, math.inf, -math.inf])
    def test_nonfinite(self, x):
        with pytest.raises(DomainError):
            digamma(x)

    @settings(max_examples=200, deadline=None)
    @given(st.floats(min_value=0.01, max_value=1e4))
    def test_monotone_increasing(self, x):
        assert digamma(x * 1.001 + 1e-9) > digamma(x)


class TestCotPi:
    def test_quarter(self):
        assert cot_pi(0.25) == pytest.approx(1.0, rel=1e-15)

    def test_half(self):
        assert cot_pi(0.5) == 0.0

    def test_sixth(self):
        assert cot_pi(1 / 6) == pytest.approx(math.sqrt(3.0), rel=2e-16)

    def test_periodic_large_argument(self):
        assert cot_pi(1e6 + 0.25) == pytest.approx(1.0, rel=1e-9)
        assert cot_pi(-3.75) == pytest.approx(1.0, rel=1e-14)

    def test_odd(self):
        for q in (0.1, 0.37, 0.49):
            assert cot_pi(-q) == -cot_pi(q)

    @pytest.mark.parametrize("q", [0.0, 1.0, -3.0, 1e6])
    def test_poles(self, q):
        with pytest.raises(PoleError):
            cot_pi(q)


class TestPFQ:
    def test_zero_argument(self):
        r = pfq_truncated(PFQSpec([2.0, 0.3, 1.7], [1.3, 2.2], 0.0))
        assert r.value == 1.0 and r.converged

    def test_log(self):
        # 2F1(1,1;2;x) = -ln(1-x)/x
        r = pfq_truncated(PFQSpec([1, 1], [2], 0.5))
        assert r.value == pytest.approx(TWO_LN2, rel=1e-12)
        assert r.converged and r.tail_estimate <= 1e-12 * abs(r.value)

    def test_dilog(self):
        # 3F2(1,1,1;2,2;x) = Li2(x)/x
        r = pfq_truncated(PFQSpec([1, 1, 1], [2, 2], 0.5))
        assert r.value == pytest.approx(LI2_HALF_OVER_HALF, rel=1e-12)

    def test_terminating(self):
        # 2F1(-2, 1; 1; x) = (1 - x)^2
        r = pfq_truncated(PFQSpec([-2, 1], [1], 0.3))
        assert r.value == pytest.approx(0.49, rel=1e-15)
        assert r.tail_estimate == 0.0

    def test_minus_one_alternating(self):
        mpmath.mp.dps = 30
        spec = PFQSpec([2.0, 1.5, 1.75], [2.5, 2.75], -1.0)
        ref = float(mpmath.hyp3f2(2, 1.5, 1.75, 2.5, 2.75, -1))
        assert pfq_truncated(spec).value == pytest.approx(ref, rel=1e-12)

    def test_minus_one_rejected(self):
        ctrl = ConvergenceControl(minus_one_policy=MinusOnePolicy.REJECT)
        with pytest.raises(DomainError):
            pfq_truncated(PFQSpec([1, 0.5], [1.5], -1.0), ctrl)

    def test_pole_in_denominator(self):
        with pytest.raises(PoleError):
            PFQSpec([1, 1], [-2.0], 0.5)

    @pytest.mark.parametrize("x", [1.0, 1.5, -1.01, math.nan])
    def test_bad_argument(self, x):
        with pytest.raises(DomainError):
            PFQSpec([1, 1], [2], x)

    def test_divergent_at_minus_one(self):
        with pytest.raises(DomainError):
            PFQSpec([3, 3], [1], -1.0)

    def test_cap_reached(self):
        with pytest.raises(ConvergenceError) as info:
            pfq_truncated(PFQSpec([1, 1], [2], 0.999), ConvergenceControl(max_terms=10))
        assert info.value.result is not None and not info.value.result.converged

    @pytest.mark.parametrize("alpha", [0.25, 0.5, 1.5])
    @pytest.mark.parametrize("x", [0.5, -0.5, 0.9, -0.9])
    def test_matches_base_series(self, alpha, x):
        ctrl = ConvergenceControl(tolerance=1e-14)
        a = pfq_truncated(PFQSpec([1, alpha], [alpha + 1], x), ctrl).value
        b = eval_base(alpha, x, ctrl).value
        assert abs(a - b) <= 1e-12 * abs(b)
