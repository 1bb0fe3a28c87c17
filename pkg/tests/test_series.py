from functools import reduce

import pytest
from hypothesis import given, settings as hyp_settings
from hypothesis import strategies as st

from app.core.errors import InvalidParameterError, NonUnitConstantTermError
from app.services.counts import w_count
from app.services.series import (
    Polynomial,
    TruncatedSeries,
    W_NUMERATOR,
    series_from_rational,
    series_mul,
    series_mul_rational,
    series_pow,
    w_denominator,
    w_series,
)

small_ints = st.integers(min_value=-5, max_value=5)


def series_strategy(order):
    return st.lists(small_ints, min_size=order + 1, max_size=order + 1).map(TruncatedSeries)


def poly_times_series(p: Polynomial, s: TruncatedSeries):
    return [sum(p[j] * s[i - j] for j in range(i + 1)) for i in range(len(s))]


class TestPolynomial:
    def test_from_terms_merges_like_powers(self):
        assert Polynomial.from_terms({2: 3, 0: 1}).coeffs == (1, 0, 3)
        # r = 1: -2x and +x^r land on the same power
        assert w_denominator(1).coeffs == (1, -1, -1)
        assert w_denominator(3).coeffs == (1, -2, 0, 1, -1)

    def test_degree_ignores_trailing_zeros(self):
        assert Polynomial((1, 2, 0, 0)).degree == 1
        assert Polynomial((0, 0)).degree == -1
        assert Polynomial(()).degree == -1

    def test_indexing_past_end_is_zero(self):
        assert Polynomial((1, -1))[5] == 0


class TestTruncatedSeries:
    def test_order_matches_length(self):
        s = TruncatedSeries([3, 1, 4])
        assert s.order == 2
        assert len(s) == 3

    def test_empty_rejected(self):
        with pytest.raises(InvalidParameterError):
            TruncatedSeries([])

    def test_truncate(self):
        s = TruncatedSeries([1, 2, 3, 4])
        assert s.truncate(1) == TruncatedSeries([1, 2])
        with pytest.raises(InvalidParameterError):
            s.truncate(4)
        with pytest.raises(InvalidParameterError):
            s.truncate(-1)


class TestSeriesFromRational:
    def test_identity(self):
        one_minus_x = Polynomial((1, -1))
        assert series_from_rational(one_minus_x, one_minus_x, 4).coeffs == (1, 0, 0, 0, 0)

    def test_fibonacci_with_prepended_one(self):
        s = series_from_rational(Polynomial((1, -1)), Polynomial((1, -1, -1)), 7)
        assert s.coeffs == (1, 0, 1, 1, 2, 3, 5, 8)

    def test_r2_denominator(self):
        s = series_from_rational(Polynomial((1, -1)), Polynomial((1, -2, 1, -1)), 6)
        assert s.coeffs == (1, 1, 1, 2, 4, 7, 12)

    def test_negative_unit_constant(self):
        # 1 / (-1 + x) = -(1 + x + x^2 + ...)
        s = series_from_rational(Polynomial((1,)), Polynomial((-1, 1)), 3)
        assert s.coeffs == (-1, -1, -1, -1)

    @pytest.mark.parametrize("constant", [0, 2, -3])
    def test_non_unit_constant_rejected(self, constant):
        with pytest.raises(NonUnitConstantTermError) as exc:
            series_from_rational(Polynomial((1,)), Polynomial((constant, 1)), 3)
        assert exc.value.coefficient == constant
        assert str(constant) in str(exc.value)

    @given(
        numer=st.lists(small_ints, min_size=1, max_size=6),
        c0=st.sampled_from([1, -1]),
        tail=st.lists(small_ints, max_size=5),
        order=st.integers(min_value=0, max_value=12),
    )
    def test_denominator_times_result_gives_numerator(self, numer, c0, tail, order):
        numer_p = Polynomial(numer)
        denom = Polynomial([c0] + tail)
        s = series_from_rational(numer_p, denom, order)
        assert s.order == order
        assert poly_times_series(denom, s) == [numer_p[i] for i in range(order + 1)]


class TestWSeries:
    def test_r1(self):
        assert w_series(1, 6).coeffs == (1, 0, 1, 1, 2, 3, 5)

    def test_r2_initial_values(self):
        assert w_series(2, 2).coeffs == (1, 1, 1)

    def test_r5_order1(self):
        assert w_series(5, 1).coeffs == (1, 1)

    def test_r0_rejected(self):
        with pytest.raises(InvalidParameterError):
            w_series(0, 4)

    def test_run_length_beyond_order(self):
        assert w_series(10**12, 5).coeffs == (1, 1, 2, 4, 8, 16)

    def test_denominator_truncated_at_order(self):
        assert w_denominator(10**12, 5).coeffs == (1, -2)
        assert w_denominator(3, 3).coeffs == (1, -2, 0, 1)
        assert w_denominator(3, 10).coeffs == w_denominator(3).coeffs

    @pytest.mark.parametrize("r", range(1, 9))
    def test_matches_recurrence(self, r):
        s = w_series(r, 64)
        assert list(s.coeffs) == [w_count(n, r) for n in range(65)]

    @pytest.mark.parametrize("r", range(1, 9))
    def test_coefficients_nonnegative(self, r):
        assert all(c >= 0 for c in w_series(r, 200).coeffs)


class TestSeriesMul:
    def test_square(self):
        assert series_mul(TruncatedSeries([1, 1, 1]), TruncatedSeries([1, 1, 1])).coeffs == (1, 2, 3)

    def test_shift(self):
        assert series_mul(TruncatedSeries([1, 0, 0]), TruncatedSeries([0, 1, 0])).coeffs == (0, 1, 0)

    def test_zero_factor(self):
        assert series_mul(TruncatedSeries([0, 0]), TruncatedSeries([5, 7])).coeffs == (0, 0)

    def test_orders_must_match(self):
        with pytest.raises(InvalidParameterError):
            series_mul(TruncatedSeries([1, 1]), TruncatedSeries([1, 1, 1]))

    def test_w2_cubed(self):
        assert (w_series(2, 2) ** 3).coeffs == (1, 3, 6)


class TestSeriesPow:
    def test_zero_exponent(self):
        assert series_pow(TruncatedSeries([4, 5, 6]), 0).coeffs == (1, 0, 0)

    def test_first_power(self):
        a = TruncatedSeries([4, 5, 6])
        assert series_pow(a, 1) == a

    def test_negative_exponent_rejected(self):
        with pytest.raises(InvalidParameterError):
            series_pow(TruncatedSeries([1]), -1)

    def test_w1_squared_matches_enumeration(self):
        from app.services.oracle import brute_count_exact

        assert series_pow(w_series(1, 6), 2)[5] == brute_count_exact(6, 1, 1)

    @given(a=st.integers(min_value=0, max_value=8).flatmap(series_strategy), e=st.integers(min_value=0, max_value=6))
    def test_matches_repeated_multiplication(self, a, e):
        folded = reduce(series_mul, [a] * e, TruncatedSeries.one(a.order))
        assert series_pow(a, e) == folded


class TestSeriesMulRational:
    @hyp_settings(max_examples=50)
    @given(
        a=st.integers(min_value=0, max_value=10).flatmap(series_strategy),
        r=st.integers(min_value=1, max_value=6),
    )
    def test_matches_expanded_product(self, a, r):
        denom = w_denominator(r)
        expanded = series_from_rational(W_NUMERATOR, denom, a.order)
        assert series_mul_rational(a, W_NUMERATOR, denom) == series_mul(a, expanded)

    def test_repeated_application_gives_powers(self):
        w = w_series(3, 40)
        power = w
        for e in range(2, 8):
            power = series_mul_rational(power, W_NUMERATOR, w_denominator(3))
            assert power == series_pow(w, e)
