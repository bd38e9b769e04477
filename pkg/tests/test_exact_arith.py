import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from giftcount.errors import PreconditionError
from giftcount.exact_arith import (
    N,
    Polynomial,
    PowerSeries,
    binomial,
    factorial,
    poly_eval,
    series_exp,
    series_mul,
    series_reciprocal,
    series_sqrt,
)


def naive_convolution(a, b, order):
    return [sum(a[i] * b[j] for i in range(order + 1) for j in range(order + 1) if i + j == m)
            for m in range(order + 1)]


def exp_series(order):
    return PowerSeries([Fraction(1, math.factorial(j)) for j in range(order + 1)])


@pytest.mark.parametrize("k, expected", [(0, 1), (5, 120), (9, 362880)])
def test_factorial(k, expected):
    assert factorial(k) == expected


def test_factorial_negative():
    with pytest.raises(PreconditionError):
        factorial(-1)


@pytest.mark.parametrize("k, i, expected", [(4, 2, 6), (7, 0, 1), (0, 0, 1), (2, 3, 0)])
def test_binomial(k, i, expected):
    assert binomial(k, i) == expected


def test_factorial_and_binomial_recurrences():
    for k in range(1, 201):
        assert factorial(k) == k * factorial(k - 1)
    for k in range(1, 40):
        for i in range(1, k + 1):
            assert binomial(k, i) == binomial(k - 1, i - 1) + binomial(k - 1, i)


class TestPolynomial:
    def test_eval_examples(self):
        assert poly_eval(9 * N**2 - 9 * N - 3, 2) == 15
        assert poly_eval(Polynomial(), 17) == 0
        assert poly_eval(N - 2, 2) == 0

    def test_canonical_form_strips_trailing_zeros(self):
        assert Polynomial([1, 2, 0, 0]).coefficients == (1, 2)
        assert Polynomial([0, 0]).is_zero()
        assert Polynomial([0, 0]).degree == -1
        assert (N - N) == Polynomial()

    def test_arithmetic(self):
        p = (N + 1) * (N - 1)
        assert p == N**2 - 1
        assert (p / 2)(3) == 4
        assert (3 - N)(1) == 2

    def test_integer_roots(self):
        assert (N - 2).integer_roots() == [2]
        assert ((N - 3) * (2 * N + 1) * (N + 4)).integer_roots() == [-4, 3]
        assert (64 * N**3 - 360 * N**2 + 762 * N - 547).integer_roots() == []
        with pytest.raises(PreconditionError):
            Polynomial().integer_roots()

    def test_str(self):
        assert str(2 * N - 1) == "2*n - 1"
        assert str(-(N**2) + Fraction(1, 2)) == "-n^2 + 1/2"
        assert str(Polynomial()) == "0"

    def test_immutable(self):
        with pytest.raises(AttributeError):
            N.coefficients = ()


class TestSeriesExamples:
    def test_mul(self):
        assert series_mul(PowerSeries([1, 1], 3), PowerSeries([1, -1], 3)) == PowerSeries([1, 0, -1], 3)
        a = PowerSeries([3, 1, 4, 1], 3)
        assert series_mul(a, PowerSeries.one(3)) == a

    def test_mul_exp_squared_against_convolution_oracle(self):
        e = exp_series(4)
        got = series_mul(e, e)
        assert list(got.coefficients) == naive_convolution(e, e, 4)
        # e^x * e^x = e^{2x}
        assert got[2] == 2

    def test_mismatched_orders_truncate_to_minimum(self):
        prod = series_mul(PowerSeries([1, 1], 5), PowerSeries([1, 1], 2))
        assert prod.order == 2
        assert (PowerSeries([1], 4) + PowerSeries([1], 1)).order == 1

    def test_exp(self):
        assert list(series_exp(PowerSeries.x(4)).coefficients) == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]
        assert series_exp(PowerSeries([0], 3)) == PowerSeries.one(3)

    def test_exp_involutions(self):
        # exp(x + x^2/2) counts involutions; brute-force the count for size 3
        inv = sum(1 for p in itertools.permutations(range(3)) if all(p[p[i]] == i for i in range(3)))
        s = series_exp(PowerSeries([0, 1, Fraction(1, 2)], 5))
        assert s[3] == Fraction(inv, 6) == Fraction(2, 3)

    def test_exp_precondition(self):
        with pytest.raises(PreconditionError):
            series_exp(PowerSeries([1, 1], 3))

    def test_sqrt(self):
        assert series_sqrt(PowerSeries.one(5)) == PowerSeries.one(5)
        a = PowerSeries([1, -2], 6)
        s = series_sqrt(a)
        assert series_mul(s, s) == a
        assert list(s.coefficients[:4]) == [1, -1, Fraction(-1, 2), Fraction(-1, 2)]
        assert series_sqrt(PowerSeries([1, 2, 1], 6)) == PowerSeries([1, 1], 6)

    def test_sqrt_precondition(self):
        with pytest.raises(PreconditionError):
            series_sqrt(PowerSeries([4, 1], 3))

    def test_reciprocal(self):
        assert series_reciprocal(PowerSeries([1, -1], 5)) == PowerSeries([1] * 6, 5)
        assert series_reciprocal(PowerSeries.one(3)) == PowerSeries.one(3)
        root = series_sqrt(PowerSeries([1, -2], 6))
        inv = series_reciprocal(root)
        assert series_mul(inv, root) == PowerSeries.one(6)
        assert inv[2] == Fraction(3, 2)

    def test_reciprocal_precondition(self):
        with pytest.raises(PreconditionError):
            series_reciprocal(PowerSeries([0, 1], 3))

    def test_derivative_and_shift(self):
        s = PowerSeries([1, 2, 3, 4])
        assert s.derivative() == PowerSeries([2, 6, 12], 2)
        assert s.shift() == PowerSeries([0, 1, 2, 3, 4], 4)


ORDER = 6
fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
series = st.lists(fractions, min_size=ORDER + 1, max_size=ORDER + 1).map(lambda c: PowerSeries(c, ORDER))
zero_const = series.map(lambda s: PowerSeries([0] + list(s.coefficients[1:]), ORDER))
unit_const = series.map(lambda s: PowerSeries([1] + list(s.coefficients[1:]), ORDER))


@settings(max_examples=60, deadline=None)
@given(series, series, series)
def test_mul_commutative_associative(a, b, c):
    assert series_mul(a, b) == series_mul(b, a)
    assert series_mul(series_mul(a, b), c) == series_mul(a, series_mul(b, c))
    assert list(series_mul(a, b).coefficients) == naive_convolution(a, b, ORDER)


@settings(max_examples=60, deadline=None)
@given(unit_const)
def test_sqrt_squares_back(a):
    s = series_sqrt(a)
    assert series_mul(s, s) == a


@settings(max_examples=60, deadline=None)
@given(series.filter(lambda s: s[0] != 0))
def test_reciprocal_inverts(a):
    assert series_mul(series_reciprocal(a), a) == PowerSeries.one(ORDER)


@settings(max_examples=40, deadline=None)
@given(zero_const, zero_const)
def test_exp_of_sum_is_product(a, b):
    assert series_exp(a + b) == series_mul(series_exp(a), series_exp(b))
