import random

import pytest
from hypothesis import given, settings, strategies as st

from tetraclausen.mpcore import DomainError, PrecisionCtx, to_decimal
from tetraclausen.polylog import (
    bernoulli_over_factorial,
    cl2,
    cl2_series_reference,
    li2,
    log_sin_product_integral,
    log_tan_integral,
)
from tetraclausen.quad import integrate
from oracles import catalan_alternating, li2_brute
from fractions import Fraction


def test_bernoulli_values():
    assert bernoulli_over_factorial(0) == 1
    assert bernoulli_over_factorial(1) == Fraction(-1, 2)
    assert bernoulli_over_factorial(2) == Fraction(1, 12)   # B_2 = 1/6
    assert bernoulli_over_factorial(3) == 0
    assert bernoulli_over_factorial(12) * 479001600 == Fraction(-691, 2730)


class TestCl2:
    def test_zero(self, ctx50):
        assert cl2(0, ctx50) == 0

    def test_pi_vanishes(self, ctx50):
        assert abs(cl2(ctx50.pi, ctx50)) < ctx50.pow10(-48)

    def test_third_pi_ratio(self, ctx50):
        res = cl2(ctx50.pi / 3, ctx50) - ctx50.mpf(Fraction(3, 2)) * cl2(2 * ctx50.pi / 3, ctx50)
        assert abs(res) < ctx50.pow10(-48)

    def test_half_pi_is_catalan(self, ctx50):
        oracle = catalan_alternating(ctx50)
        assert abs(cl2(ctx50.pi / 2, ctx50) - oracle) < ctx50.pow10(-45)

    def test_oddness_exact(self, ctx50):
        for text in ("0.31", "1.9", "2.7", "5.1"):
            t = ctx50.mpf(text)
            assert cl2(-t, ctx50) == -cl2(t, ctx50)

    def test_periodicity(self, ctx50):
        t = ctx50.mpf("0.75")
        assert to_decimal(cl2(t + 2 * ctx50.pi, ctx50), ctx50) == \
            to_decimal(cl2(t, ctx50), ctx50)
        assert to_decimal(cl2(t - 6 * ctx50.pi, ctx50), ctx50) == \
            to_decimal(cl2(t, ctx50), ctx50)

    def test_duplication_formula(self, ctx50):
        rng = random.Random(7)
        for _ in range(25):
            x = ctx50.mpf(rng.uniform(-9, 9))
            res = cl2(2 * x, ctx50) - 2 * cl2(x, ctx50) + 2 * cl2(ctx50.pi - x, ctx50)
            assert abs(res) < ctx50.pow10(-45)

    def test_large_angle_reduction(self, ctx50):
        t = ctx50.mpf("1.25")
        big = t + 2 * ctx50.pi * 100000
        assert abs(cl2(big, ctx50) - cl2(t, ctx50)) < ctx50.pow10(-44)

    def test_agrees_with_series_reference(self, ctx50):
        rng = random.Random(21)
        for _ in range(30):
            t = ctx50.mpf(rng.uniform(0.01, 6.27))
            assert abs(cl2(t, ctx50) - cl2_series_reference(t, ctx50)) < ctx50.pow10(-45)

    def test_series_reference_term_count_insensitive(self, ctx50):
        t = ctx50.mpf("2.13")
        a = cl2_series_reference(t, ctx50, terms=64)
        b = cl2_series_reference(t, ctx50, terms=512)
        assert abs(a - b) < ctx50.pow10(-45)

    def test_non_finite_rejected(self, ctx50):
        with pytest.raises(DomainError):
            cl2(ctx50.inf, ctx50)


class TestLi2:
    def test_zero(self, ctx50):
        assert li2(0, ctx50) == 0

    def test_one(self, ctx50):
        # forced by the reflection identity at x=1 with Li2(0)=0
        assert abs(li2(1, ctx50) - ctx50.pi ** 2 / 6) < ctx50.pow10(-48)

    def test_half(self, ctx50):
        expected = ctx50.pi ** 2 / 12 - ctx50.ln2 ** 2 / 2
        assert abs(li2(ctx50.mpf(1) / 2, ctx50) - expected) < ctx50.pow10(-48)

    def test_against_defining_series(self, ctx50):
        for text in ("0.25", "-0.3", "0.45"):
            x = ctx50.mpf(text)
            assert abs(li2(x, ctx50) - li2_brute(x, ctx50)) < ctx50.pow10(-45)

    def test_unit_circle_imaginary_part_is_cl2(self, ctx50):
        rng = random.Random(5)
        for _ in range(12):
            theta = ctx50.mpf(rng.uniform(0.05, 6.2))
            z = ctx50.mpc(ctx50.cos(theta), ctx50.sin(theta))
            assert abs(li2(z, ctx50).imag - cl2(theta, ctx50)) < ctx50.pow10(-45)

    def test_real_input_real_output(self, ctx50):
        assert isinstance(li2(ctx50.mpf("-7.5"), ctx50), ctx50._mp.mpf)
        assert isinstance(li2(ctx50.mpf("0.999"), ctx50), ctx50._mp.mpf)

    def test_branch_cut_above_one(self, ctx50):
        v = li2(ctx50.mpf(2), ctx50)
        assert isinstance(v, ctx50._mp.mpc)
        assert abs(v.imag + ctx50.pi * ctx50.ln2) < ctx50.pow10(-45)

    def test_reflection_identity_random(self, ctx50):
        rng = random.Random(9)
        for _ in range(10):
            x = ctx50.mpf(rng.uniform(0.01, 0.99))
            res = li2(x, ctx50) + li2(1 - x, ctx50) - ctx50.pi ** 2 / 6 \
                + ctx50.log(x) * ctx50.log(1 - x)
            assert abs(res) < ctx50.pow10(-45)

    def test_non_finite_rejected(self, ctx50):
        with pytest.raises(DomainError):
            li2(ctx50.inf, ctx50)

    def test_landen_and_inversion_identities_random(self, ctx50):
        rng = random.Random(41)
        tol = ctx50.pow10(-45)
        for _ in range(8):
            x = ctx50.mpf(rng.uniform(0.01, 0.99))
            assert abs(li2(x, ctx50) + li2(-x, ctx50) - li2(x * x, ctx50) / 2) < tol
            assert abs(li2(x, ctx50) + li2(-x / (1 - x), ctx50)
                       + ctx50.log(1 - x) ** 2 / 2) < tol
            assert abs(li2(1 / (1 + x), ctx50) - li2(-x, ctx50) - ctx50.pi ** 2 / 6
                       + ctx50.log(1 + x) * ctx50.log((1 + x) / (x * x)) / 2) < tol
            y = ctx50.mpf(rng.uniform(0.01, float(1 - x) - 0.005))
            abel = (li2(x / (1 - x) * y / (1 - y), ctx50)
                    - li2(x / (1 - y), ctx50) - li2(y / (1 - x), ctx50)
                    + li2(x, ctx50) + li2(y, ctx50)
                    + ctx50.log(1 - x) * ctx50.log(1 - y))
            assert abs(abel) < tol


_ctx = PrecisionCtx(30)


@given(st.floats(min_value=-40, max_value=40, allow_nan=False))
@settings(max_examples=80, deadline=None)
def test_cl2_oddness_property(theta):
    t = _ctx.mpf(theta)
    assert cl2(-t, _ctx) == -cl2(t, _ctx)


class TestLogSinProductIntegral:
    def test_empty_interval(self, ctx50):
        form = log_sin_product_integral(1, 1, 2, 1, ctx50.mpf("0.5"), ctx50)
        assert form.value == 0

    def test_log_cos_quarter_period(self, ctx50):
        # a=1, b=0, c=0 on [0, pi/2] is the classical -pi/2 log 2
        form = log_sin_product_integral(0, ctx50.pi / 2, 1, 0, 0, ctx50)
        assert abs(form.value + ctx50.pi / 2 * ctx50.ln2) < ctx50.pow10(-45)
        oracle = integrate(lambda x: ctx50.log(ctx50.cos(x)), (0, ctx50.pi / 2),
                           ctx50.pow10(-40), ctx50)
        assert abs(form.value - oracle.value) < ctx50.pow10(-39)

    def _random_case(self, rng, ctx):
        while True:
            a = ctx.mpf(rng.uniform(-2, 2))
            b = ctx.mpf(rng.uniform(-2, 2))
            r2 = a * a + b * b
            if r2 < ctx.mpf("0.01"):
                continue
            c = ctx.mpf(rng.uniform(-0.9, 0.9)) * ctx.sqrt(r2)
            psi = ctx.atan2(b, a)
            s = ctx.acos(-c / ctx.sqrt(r2))
            span = 2 * s
            lo = psi - s + ctx.mpf(rng.uniform(0.05, 0.4)) * span
            hi = psi + s - ctx.mpf(rng.uniform(0.05, 0.4)) * span
            if hi > lo:
                return a, b, c, lo, hi

    def test_random_cases_match_quadrature(self, ctx50):
        rng = random.Random(13)
        for _ in range(6):
            a, b, c, lo, hi = self._random_case(rng, ctx50)
            form = log_sin_product_integral(lo, hi, a, b, c, ctx50)
            oracle = integrate(
                lambda x: ctx50.log(a * ctx50.cos(x) + b * ctx50.sin(x) + c),
                (lo, hi), ctx50.pow10(-42), ctx50)
            assert abs(form.value - oracle.value) < ctx50.pow10(-40)

    def test_factorization_invariant(self, ctx50):
        rng = random.Random(3)
        for _ in range(10):
            a, b, c, lo, hi = self._random_case(rng, ctx50)
            form = log_sin_product_integral(lo, hi, a, b, c, ctx50)
            r = ctx50.sqrt(a * a + b * b)
            for frac in (0.13, 0.5, 0.92):
                x = lo + (hi - lo) * ctx50.mpf(frac)
                lhs = a * ctx50.cos(x) + b * ctx50.sin(x) + c
                rhs = 2 * r * ctx50.sin((form.delta2 - x) / 2) * ctx50.sin((form.delta1 + x) / 2)
                assert abs(lhs - rhs) < ctx50.pow10(-45)

    def test_degenerate_hypothesis_boundary(self, ctx50):
        # a^2+b^2 = c^2 is allowed (root term exactly zero)
        form = log_sin_product_integral(ctx50.mpf("0.2"), ctx50.mpf("0.9"),
                                        1, 0, 1, ctx50)
        oracle = integrate(lambda x: ctx50.log(ctx50.cos(x) + 1),
                           (ctx50.mpf("0.2"), ctx50.mpf("0.9")),
                           ctx50.pow10(-42), ctx50)
        assert abs(form.value - oracle.value) < ctx50.pow10(-40)

    def test_hypothesis_violation(self, ctx50):
        with pytest.raises(DomainError):
            log_sin_product_integral(0, 1, 1, 0, 2, ctx50)

    def test_negative_integrand_detected(self, ctx50):
        # cos(x) - 0.5 is negative on part of [0, pi]
        with pytest.raises(DomainError):
            log_sin_product_integral(0, ctx50.pi, 1, 0, ctx50.mpf("-0.5"), ctx50)


class TestLogTanIntegral:
    def test_empty_interval(self, ctx50):
        assert log_tan_integral(ctx50.mpf("0.3"), ctx50.mpf("0.3"), 0, ctx50) == 0

    def test_log_tan_is_minus_catalan(self, ctx50):
        v = log_tan_integral(0, ctx50.pi / 4, 0, ctx50)
        assert abs(v + catalan_alternating(ctx50)) < ctx50.pow10(-45)
        oracle = integrate(lambda x: ctx50.log(ctx50.tan(x)), (0, ctx50.pi / 4),
                           ctx50.pow10(-42), ctx50)
        assert abs(v - oracle.value) < ctx50.pow10(-40)

    def test_random_cases_match_quadrature(self, ctx50):
        rng = random.Random(17)
        for _ in range(6):
            d = ctx50.mpf(rng.uniform(-1.2, 1.2))
            lo = d + ctx50.mpf(rng.uniform(0.01, 0.3))
            hi = lo + ctx50.mpf(rng.uniform(0.05, 0.5))
            if hi >= ctx50.pi / 2 - ctx50.mpf("0.01"):
                continue
            v = log_tan_integral(lo, hi, d, ctx50)
            oracle = integrate(lambda x: ctx50.log(ctx50.tan(x) - ctx50.tan(d)),
                               (lo, hi), ctx50.pow10(-42), ctx50)
            assert abs(v - oracle.value) < ctx50.pow10(-40)

    def test_log_split_identity(self, ctx50):
        # log(tan x - tan d) = log(2 sin(x-d)) - log(2 cos x) - log(cos d)
        rng = random.Random(29)
        for _ in range(10):
            d = ctx50.mpf(rng.uniform(-1.0, 1.0))
            x = d + ctx50.mpf(rng.uniform(0.05, 0.5))
            if x >= ctx50.pi / 2:
                continue
            lhs = ctx50.log(ctx50.tan(x) - ctx50.tan(d))
            rhs = ctx50.log(2 * ctx50.sin(x - d)) - ctx50.log(2 * ctx50.cos(x)) \
                - ctx50.log(ctx50.cos(d))
            assert abs(lhs - rhs) < ctx50.pow10(-45)

    @pytest.mark.parametrize("lo,hi,d", [
        (0.5, 0.4, 0.0),        # reversed interval
        (0.3, 0.6, 0.4),        # delta inside the interval
        (0.0, 1.6, 0.0),        # beta beyond pi/2
        (-1.6, 0.5, -1.58),     # alpha beyond -pi/2
    ])
    def test_domain_errors(self, ctx50, lo, hi, d):
        with pytest.raises(DomainError):
            log_tan_integral(ctx50.mpf(lo), ctx50.mpf(hi), ctx50.mpf(d), ctx50)
