import math
from fractions import Fraction
from itertools import islice

import pytest

from calclab.series import (
    babylonian_iterates,
    babylonian_sqrt,
    basel_sum,
    basel_sum_corrected,
    convergence_radius,
    cos_series,
    coth_series_coeff,
    eval_series,
    exp_series,
    pi_leibnitz,
    recip_sqrt_one_minus_4t,
    sin_series,
    sqrt_one_minus_4t,
    PowerSeries,
)


def long_divide_exp_series(n_terms):
    """Exact coefficients of x/(e^x - 1) by long division, as Fractions."""
    # divide 1 by (e^x - 1)/x = sum_{k>=0} x^k/(k+1)!
    denom = [Fraction(1, math.factorial(k + 1)) for k in range(n_terms)]
    out = []
    rem = [Fraction(1)] + [Fraction(0)] * (n_terms - 1)
    for k in range(n_terms):
        c = rem[k] / denom[0]
        out.append(c)
        for j in range(n_terms - k):
            rem[k + j] -= c * denom[j]
    return out


def test_eval_series_exp():
    value, bound = eval_series(exp_series(), 1.0, 30)
    assert value == pytest.approx(math.e, abs=1e-14)
    assert bound < 1e-12
    # bound covers truncation; allow a few ulps of summation roundoff
    assert abs(value - math.e) <= bound + 1e-15
    value_neg, _ = eval_series(exp_series(), -1.0, 40)
    assert value_neg == pytest.approx(1.0 / math.e, abs=1e-14)


def test_eval_series_at_zero_gives_constant_term():
    s = PowerSeries(lambda k: float(k + 7))
    value, bound = eval_series(s, 0.0, 5)
    assert value == 7.0
    assert bound == 0.0


def test_eval_series_respects_radius():
    with pytest.raises(ValueError):
        eval_series(sqrt_one_minus_4t(), 0.3, 10)


def test_eval_series_tail_bound_is_honest_alternating():
    # Leibnitz-type series: arctan(1) coefficients
    s = PowerSeries(lambda k: ((-1.0) ** ((k - 1) // 2) / k) if k % 2 else 0.0)
    value, bound = eval_series(s, 1.0, 100)
    assert math.isfinite(bound)
    assert abs(value - math.pi / 4) <= bound


def test_convergence_radius():
    ones = [1.0] * 64
    assert convergence_radius(ones, 64) == pytest.approx(1.0)
    twos = [2.0**k for k in range(64)]
    assert convergence_radius(twos, 64) == pytest.approx(0.5, rel=1e-12)
    # 1/k! underflows to exactly 0.0 beyond k ~ 170, so a late window is all
    # zeros and the estimate must report the infinite-radius sentinel.
    inv_fact = [0.0] * 400
    acc = 1.0
    for k in range(400):
        inv_fact[k] = acc
        acc /= k + 1
    assert convergence_radius(inv_fact, 400) == math.inf
    with pytest.raises(ValueError):
        convergence_radius(ones, 4)


def test_pi_leibnitz():
    value, bound = pi_leibnitz(1)
    assert value == 4.0
    value, bound = pi_leibnitz(500)
    assert bound <= 4e-3
    assert abs(value - math.pi) <= bound
    value, _ = pi_leibnitz(200000)
    assert value == pytest.approx(math.pi, abs=1e-5)


def test_basel():
    assert basel_sum(1) == 1.0
    # integral-comparison bracket for the tail
    n = 1000
    tail = math.pi**2 / 6 - basel_sum(n)
    assert 1.0 / (n + 1) < tail < 1.0 / n
    estimate, err = basel_sum_corrected(10**6)
    assert abs(estimate - math.pi**2 / 6) < 1e-6


def test_babylonian_sqrt():
    assert babylonian_sqrt(4.0, 1e-12) == pytest.approx(2.0)
    assert babylonian_sqrt(3.0, 1e-12) == pytest.approx(1.7320508075688772)
    x = babylonian_sqrt(2.0, 1e-13)
    assert x * x == pytest.approx(2.0, abs=1e-13)
    with pytest.raises(ValueError):
        babylonian_sqrt(-1.0, 1e-6)


def test_babylonian_contraction():
    its = list(islice(babylonian_iterates(3.0), 12))
    # monotone decreasing once above sqrt(a)
    above = [x for x in its if x >= math.sqrt(3.0)]
    assert all(a >= b for a, b in zip(above, above[1:]))


def test_coth_series_coeff_against_long_division():
    # x/(e^x-1) = sum B_n/n! x^n gives the oracle for the 4^k B_2k/(2k)! form
    oracle = long_divide_exp_series(12)
    assert oracle[:5] == [
        Fraction(1),
        Fraction(-1, 2),
        Fraction(1, 12),
        Fraction(0),
        Fraction(-1, 720),
    ]
    assert coth_series_coeff(0) == 1
    for k in range(1, 6):
        assert coth_series_coeff(k) == Fraction(4**k) * oracle[2 * k]
    assert coth_series_coeff(1) == Fraction(1, 3)
    assert coth_series_coeff(2) == Fraction(-1, 45)


def test_sqrt_series():
    s = sqrt_one_minus_4t()
    assert s.coefficient(0) == 1.0
    assert s.coefficient(2) == -2.0  # -2*C_1
    value, _ = eval_series(s, 0.0, 4)
    assert value == 1.0
    # floating square-root oracle; tail at 60 terms is ~4e-9 by the
    # geometric comparison of the Catalan coefficients
    value, _ = eval_series(s, 0.2, 60)
    assert value == pytest.approx(math.sqrt(1 - 0.8), abs=1e-8)
    value, _ = eval_series(s, 0.2, 160)
    assert value == pytest.approx(math.sqrt(1 - 0.8), abs=1e-12)
    r, _ = eval_series(recip_sqrt_one_minus_4t(), 0.2, 160)
    assert r == pytest.approx(1.0 / math.sqrt(0.2), abs=1e-10)


def test_sqrt_series_square_identity():
    s = sqrt_one_minus_4t()
    for t in (-0.2, -0.1, 0.0, 0.05, 0.1, 0.15, 0.2):
        value, _ = eval_series(s, t, 200)
        assert value * value + 4 * t - 1 == pytest.approx(0.0, abs=1e-9)


def test_exp_functional_equation():
    s = exp_series()
    for x, y in [(0.5, 1.5), (-2.0, 3.0), (1.0, 1.0), (-3.0, -0.25)]:
        fx, _ = eval_series(s, x, 60)
        fy, _ = eval_series(s, y, 60)
        fxy, _ = eval_series(s, x + y, 60)
        assert fxy == pytest.approx(fx * fy, abs=1e-10 * abs(fxy))


def test_sin_cos_pythagoras():
    sin_s, cos_s = sin_series(), cos_series()
    for i in range(13):
        x = -math.pi + i * (2 * math.pi / 12)
        sx, _ = eval_series(sin_s, x, 40)
        cx, _ = eval_series(cos_s, x, 40)
        assert sx * sx + cx * cx == pytest.approx(1.0, abs=1e-10)
