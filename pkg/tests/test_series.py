import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import naive_div, naive_mul, one_minus_exp_neg_coeffs
from polybern.polynomial import Polynomial, X
from polybern.series import (
    TruncatedSeries,
    constant_series,
    exp_series,
    log1p_series,
    pow1p_series,
    t_series,
)


def series(*coeffs):
    return TruncatedSeries(tuple(F(c) for c in coeffs))


def one(order):
    return constant_series(F(1), order)


def t_over_log1p(order):
    return t_series(order + 1).div_valuation(log1p_series(order + 1), 1)


# -- constructors ---------------------------------------------------------


def test_from_coeffs_examples():
    s = TruncatedSeries.from_coeffs([1, 0, 0], 2)
    assert s.coeffs == (F(1), F(0), F(0)) and s.order == 2
    assert TruncatedSeries.from_coeffs([0, 1], 1).coeffs == (F(0), F(1))

    # First Gregory coefficients, via the independent unit-division route:
    # divide 1 by log(1+t)/t instead of t by log(1+t).
    log1p_over_t = TruncatedSeries(log1p_series(3).coeffs[1:])
    oracle = one(2).div_unit(log1p_over_t)
    frozen = TruncatedSeries.from_coeffs([F(1), F(1, 2), F(-1, 12)], 2)
    assert oracle == frozen


def test_from_coeffs_length_mismatch():
    with pytest.raises(ValueError, match="coefficient count must equal order"):
        TruncatedSeries.from_coeffs([1, 2], 2)


def test_add_examples():
    assert series(1, 1) + series(1, -1) == series(2, 0)
    s = series(3, -4, F(1, 7))
    assert s + constant_series(F(0), 2) == s
    minus_t = -t_series(3)
    assert log1p_series(3) + minus_t == series(0, 0, F(-1, 2), F(1, 3))


def test_mul_examples():
    assert series(1, 1, 0) * series(1, -1, 0) == series(1, 0, -1)
    s = series(2, F(1, 3), -5)
    assert s * one(2) == s
    # Inverse pair: (t/log(1+t)) * (log(1+t)/t) == 1 through t^6.
    a = t_over_log1p(6)
    b = log1p_series(7).div_valuation(t_series(7), 1)
    assert a * b == one(6)


def test_div_unit_examples():
    geom = one(3).div_unit(series(1, -1, 0, 0))
    assert geom == series(1, 1, 1, 1)
    s = series(5, F(2, 3))
    assert s.div_unit(one(1)) == s

    num = series(1, F(-1, 4), F(1, 36))
    den = series(1, F(-1, 2), F(1, 3))
    expected = [F(1), F(1, 4), F(-13, 72)]
    assert list(num.div_unit(den).coeffs) == expected
    assert naive_div(list(num.coeffs), list(den.coeffs), 2) == expected


def test_div_unit_rejects_non_unit():
    with pytest.raises(ValueError, match="not a unit; use div_valuation"):
        t_series(2).div_unit(t_series(2))


def test_div_valuation_examples():
    q = t_series(4).div_valuation(t_series(4), 1)
    assert q == one(3)

    # Li_1(1 - e^(-t)) is exactly t, so this is t/log(1+t) again.
    from polybern.polybernoulli import polylog_series

    inner = TruncatedSeries(tuple(one_minus_exp_neg_coeffs(4)))
    li1 = polylog_series(1, inner)
    q1 = li1.div_valuation(log1p_series(4), 1)
    assert list(q1.coeffs) == [F(1), F(1, 2), F(-1, 12), F(1, 24)]

    inner3 = TruncatedSeries(tuple(one_minus_exp_neg_coeffs(3)))
    q2 = polylog_series(2, inner3).div_valuation(log1p_series(3), 1)
    assert list(q2.coeffs) == [F(1), F(1, 4), F(-13, 72)]
    assert q2.order == 2


def test_div_valuation_errors_name_offending_index():
    with pytest.raises(ValueError, match="numerator has nonzero coefficient at index 0"):
        one(3).div_valuation(t_series(3), 1)
    with pytest.raises(ValueError, match="denominator has nonzero coefficient at index 1"):
        series(0, 0, 1, 0).div_valuation(series(0, 1, 1, 0), 2)
    with pytest.raises(ValueError, match="index 1 is zero"):
        t_series(3).div_valuation(series(0, 0, 1, 0), 1)
    with pytest.raises(ValueError, match="exceeds series order"):
        t_series(2).div_valuation(t_series(2), 5)


def test_compose_examples():
    n = 5
    expm1 = exp_series(F(1), n) - one(n)
    assert log1p_series(n).compose(expm1) == t_series(n)

    s = series(2, F(-1, 3), F(4, 7), 0)
    assert s.compose(t_series(3)) == s

    # Brute force: sum_m inner^m / m^2, accumulated with naive list products.
    inner = one_minus_exp_neg_coeffs(3)
    outer = TruncatedSeries.from_coeffs([F(0), F(1), F(1, 4), F(1, 9)], 3)
    composed = outer.compose(TruncatedSeries(tuple(inner)))
    brute = [F(0)] * 4
    power = list(inner)
    for m in (1, 2, 3):
        for idx in range(4):
            brute[idx] += F(1, m * m) * power[idx]
        power = naive_mul(power, inner, 3)
    assert list(composed.coeffs) == brute == [F(0), F(1), F(-1, 4), F(1, 36)]


def test_compose_rejects_nonzero_constant_term():
    with pytest.raises(ValueError, match="zero constant term"):
        log1p_series(3).compose(one(3))


def test_exp_series_examples():
    assert exp_series(F(0), 2) == series(1, 0, 0)
    assert exp_series(F(-1), 3) == series(1, -1, F(1, 2), F(-1, 6))
    assert exp_series(F(2), 2) == series(1, 2, 2)


def test_log1p_series_examples():
    assert log1p_series(0) == TruncatedSeries((F(0),))
    assert log1p_series(3) == series(0, 1, F(-1, 2), F(1, 3))


def test_pow1p_series_examples():
    assert pow1p_series(F(0), 2) == series(1, 0, 0)
    assert pow1p_series(F(1, 2), 2) == series(1, F(1, 2), F(-1, 8))

    symbolic = pow1p_series(X, 2)
    assert symbolic.ring == "polynomial"
    assert symbolic.coeffs == (
        Polynomial.constant(1),
        X,
        (X * X - X) / 2,
    )


def test_egf_coefficient_examples():
    s = t_over_log1p(4)
    assert s.egf_coefficient(1) == F(1, 2)
    assert s.egf_coefficient(0) == s.coeffs[0]
    assert s.egf_coefficient(2) == F(-1, 6)
    with pytest.raises(ValueError, match="out of range"):
        s.egf_coefficient(5)


# -- mismatches -----------------------------------------------------------


def test_order_mismatch_is_an_error():
    with pytest.raises(ValueError, match="order mismatch"):
        one(2) + one(3)
    with pytest.raises(ValueError, match="order mismatch"):
        one(2) * one(3)


def test_ring_mismatch_is_an_error():
    rational = one(2)
    lifted = one(2).to_polynomial_ring()
    with pytest.raises(ValueError, match="ring mismatch"):
        rational + lifted
    with pytest.raises(ValueError, match="ring mismatch"):
        rational * lifted
    assert rational != lifted


# -- exact algebraic properties -------------------------------------------

small_fractions = st.fractions(min_value=-8, max_value=8, max_denominator=30)


def series_strategy(max_order=20):
    return st.integers(min_value=0, max_value=max_order).flatmap(
        lambda n: st.lists(small_fractions, min_size=n + 1, max_size=n + 1).map(
            lambda cs: TruncatedSeries(tuple(cs))
        )
    )


def triple_strategy(max_order=20):
    return st.integers(min_value=0, max_value=max_order).flatmap(
        lambda n: st.tuples(
            *(
                st.lists(small_fractions, min_size=n + 1, max_size=n + 1).map(
                    lambda cs: TruncatedSeries(tuple(cs))
                )
                for _ in range(3)
            )
        )
    )


@given(triple_strategy())
def test_ring_axioms(abc):
    a, b, c = abc
    zero = constant_series(F(0), a.order)
    e = one(a.order)
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * e == a


@given(series_strategy(), series_strategy())
def test_div_mul_round_trip(n, d):
    order = min(n.order, d.order)
    n = n.truncate(order)
    d = d.truncate(order)
    if d.coeffs[0] == 0:
        d = d + one(order)
    q = n.div_unit(d)
    assert q * d == n


def test_compose_inverse_pairs_through_order_20():
    for n in range(21):
        expm1 = exp_series(F(1), n) - one(n)
        assert log1p_series(n).compose(expm1) == t_series(n)
        assert expm1.compose(log1p_series(n)) == t_series(n)


@given(small_fractions, small_fractions)
@settings(max_examples=40)
def test_pow1p_product_law(a, b):
    n = 15
    assert pow1p_series(a, n) * pow1p_series(b, n) == pow1p_series(a + b, n)


@given(series_strategy(max_order=10))
def test_egf_round_trip(s):
    for n in range(s.order + 1):
        assert s.egf_coefficient(n) / math.factorial(n) == s.coeffs[n]


@given(series_strategy(max_order=12), series_strategy(max_order=12))
def test_outputs_stay_canonical(a, b):
    order = min(a.order, b.order)
    a = a.truncate(order)
    b = b.truncate(order)
    outputs = [a + b, a - b, a * b, -a]
    if b.coeffs[0] != 0:
        outputs.append(a.div_unit(b))
    for out in outputs:
        for c in out.coeffs:
            assert isinstance(c, F)
            assert c.denominator > 0
            assert math.gcd(c.numerator, c.denominator) == 1
