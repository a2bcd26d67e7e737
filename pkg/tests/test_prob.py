import cmath
import math
from fractions import Fraction

import numpy as np
import pytest

from calclab.combinat import (
    catalan,
    central_binomial,
    count_matching_pairings,
    factorial,
    middle_binomial,
)
from calclab.prob import (
    Law,
    arcsine_law,
    arcsine_transform,
    bernoulli_law,
    binomial_law,
    binomial_stats,
    cauchy_transform,
    clt_moment_gap,
    complex_gaussian_moment,
    convolve,
    derangement_probability_exact,
    gaussian_fourier,
    gaussian_law,
    gaussian_moment,
    graph_loop_moment,
    hankel_check,
    law_fourier,
    marcsine_law,
    marcsine_transform,
    moments,
    mp_law,
    mp_transform,
    orthopoly_from_moments,
    plt_distance,
    poisson_fourier,
    poisson_law,
    poisson_moment,
    semicircle_law,
    semicircle_transform,
    sn_fixed_point_counts,
    sn_fixed_point_law,
    stieltjes_density,
    su2_character_moment,
    su2_character_moment_mc,
    wick,
)
from calclab.rng import RandomSource


def test_law_validation():
    with pytest.raises(ValueError):
        Law(atoms=((0.0, -0.5),))
    with pytest.raises(ValueError):
        Law(density=lambda x: 1.0)  # support missing
    assert abs(gaussian_law(1.0).total_mass() - 1.0) < 1e-9


def test_moments_dirac():
    delta = Law(atoms=((1.7, 1.0),))
    assert moments(delta, 4) == pytest.approx([1.7**k for k in range(5)])


def test_moments_uniform():
    uniform = Law(density=lambda x: 1.0, support=(0.0, 1.0))
    got = moments(uniform, 6)
    assert got == pytest.approx([1.0 / (k + 1) for k in range(7)], abs=1e-10)


def test_builtin_law_moment_sequences():
    # combinatorial moment sequences of the four continuous laws
    semi = moments(semicircle_law(), 6)
    assert semi == pytest.approx([1, 0, 1, 0, 2, 0, 5], abs=1e-6)
    mp = moments(mp_law(), 6)
    assert mp == pytest.approx([catalan(k) for k in range(7)], abs=1e-6)
    arc = moments(arcsine_law(), 6)
    assert arc == pytest.approx([central_binomial(k) for k in range(7)], abs=1e-6)
    marc = moments(marcsine_law(), 6)
    assert marc == pytest.approx([middle_binomial(k) for k in range(7)], abs=1e-6)


def test_bernoulli_binomial():
    assert bernoulli_law(0.0).atoms[1][1] == 0.0  # delta_0
    law = binomial_law(0.3, 10)
    mean, var = binomial_stats(0.3, 10)
    assert mean == pytest.approx(3.0)
    assert var == pytest.approx(2.1)
    m = moments(law, 2)
    assert m[1] == pytest.approx(mean, abs=1e-12)
    assert m[2] - m[1] ** 2 == pytest.approx(var, abs=1e-12)
    with pytest.raises(ValueError):
        binomial_law(1.5, 3)


def test_poisson_law_and_moments():
    t = 1.5
    law = poisson_law(t)
    assert abs(law.total_mass() - 1.0) < 1e-11
    assert poisson_moment(t, 1) == pytest.approx(t)
    assert poisson_moment(t, 2) == pytest.approx(t + t * t)
    assert poisson_fourier(t, 0.0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        poisson_law(-1.0)


@pytest.mark.parametrize("t", [0.5, 1.0, 2.0])
def test_poisson_partition_vs_atom_moments(t):
    # the default 1e-12 residual truncation biases order-8 moments at the
    # ~1e-7 relative level; a tighter truncation meets 1e-8
    law = poisson_law(t, residual=1e-20)
    atom = moments(law, 8)
    for k in range(9):
        pm = poisson_moment(t, k)
        assert abs(pm - atom[k]) <= 1e-8 * max(1.0, pm)
    default_atom = moments(poisson_law(t), 8)
    assert abs(poisson_moment(t, 8) - default_atom[8]) <= 1e-6 * poisson_moment(t, 8)


def test_poisson_moments_are_bell_numbers_at_t1():
    # M_k(p_1) = Bell_k
    from calclab.combinat import bell

    for k in range(9):
        assert poisson_moment(1.0, k) == pytest.approx(bell(k))


def test_gaussian():
    t = 1.3
    law = gaussian_law(t)
    m = moments(law, 4)
    assert m[2] == pytest.approx(t, abs=1e-9)
    assert m[1] == pytest.approx(0.0, abs=1e-12)
    assert m[3] == pytest.approx(0.0, abs=1e-10)
    assert gaussian_moment(t, 2) == pytest.approx(t)
    assert gaussian_moment(1.0, 4) == pytest.approx(3.0)
    assert gaussian_moment(t, 5) == 0.0
    # quadrature oracle for M4
    assert m[4] == pytest.approx(gaussian_moment(t, 4), rel=1e-8)
    assert gaussian_fourier(2.0, 0.5) == pytest.approx(math.exp(-0.25))


def test_complex_gaussian_moment():
    assert complex_gaussian_moment(1.0, "") == 1.0
    assert complex_gaussian_moment(1.0, "ob") == pytest.approx(1.0)
    assert complex_gaussian_moment(1.0, "oo") == 0.0
    assert complex_gaussian_moment(2.0, "obob") == pytest.approx(2.0**2 * 2)
    # uniform word of length 2p gives t^p p!
    assert complex_gaussian_moment(0.5, "ooobbb") == pytest.approx(0.5**3 * 6)
    assert complex_gaussian_moment(1.0, "obb") == 0.0


def test_wick():
    t = 1.7
    assert wick(t, [(3, "o"), (3, "b")]) == pytest.approx(t)
    assert wick(t, [(3, "o"), (4, "b")]) == 0.0
    assert wick(t, [(1, "o"), (1, "b"), (1, "o"), (1, "b")]) == pytest.approx(2 * t * t)
    assert wick(t, []) == 1.0
    assert wick(t, [(1, "o")]) == 0.0
    # all indices equal reduces to the single-variable colored moment
    for word in ("ob", "obob", "oobb", "obbo"):
        factors = [(7, c) for c in word]
        assert wick(t, factors) == pytest.approx(complex_gaussian_moment(t, word))


def test_convolve_atoms():
    a = Law(atoms=((1.0, 1.0),))
    b = Law(atoms=((2.5, 1.0),))
    c = convolve(a, b)
    assert c.atoms == ((3.5, 1.0),)
    assert c.density is None


def test_convolve_gaussian_semigroup():
    s, t = 1.0, 2.0
    c = convolve(gaussian_law(s), gaussian_law(t))
    got = moments(c, 4)
    expected = [gaussian_moment(s + t, k) if k % 2 == 0 else 0.0 for k in range(5)]
    assert got == pytest.approx(expected, abs=1e-6)


def test_convolve_poisson_semigroup():
    c = convolve(poisson_law(0.5), poisson_law(1.5))
    got = moments(c, 4)
    expected = moments(poisson_law(2.0), 4)
    assert got == pytest.approx(expected, abs=1e-6)


def test_convolve_mixed_atom_density():
    mix = convolve(gaussian_law(1.0), bernoulli_law(0.5))
    m = moments(mix, 2)
    # mean 1/2, variance 1 + 1/4
    assert m[1] == pytest.approx(0.5, abs=1e-8)
    assert m[2] - m[1] ** 2 == pytest.approx(1.25, abs=1e-8)


def test_fourier_linearizes_convolution():
    a = binomial_law(0.4, 3)
    b = bernoulli_law(0.7)
    c = convolve(a, b)
    for y in (0.1, 0.9, 2.3):
        lhs = law_fourier(c, y)
        rhs = law_fourier(a, y) * law_fourier(b, y)
        assert abs(lhs - rhs) < 1e-8


def test_plt():
    # n-fold convolved biased coin approaches the Poisson law in moments
    gap = plt_distance(1.0, 500, upto=4)
    assert gap <= 0.02
    assert plt_distance(1.0, 2000, upto=4) < gap


def test_clt_moment_gap():
    coin = Law(atoms=((-1.0, 0.5), (1.0, 0.5)))
    assert clt_moment_gap(coin, 1, upto=2) == pytest.approx(0.0, abs=1e-14)
    # fourth moment of the normalized coin sum is 3 - 2/n exactly
    for n in (10, 50, 100):
        assert clt_moment_gap(coin, n, upto=4) == pytest.approx(2.0 / n, abs=1e-12)
    gaps = [clt_moment_gap(coin, n, upto=4) for n in (10, 20, 40, 80)]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    with pytest.raises(ValueError):
        clt_moment_gap(Law(atoms=((1.0, 1.0),)), 3)  # not centered


def test_cauchy_transform_series():
    # leading behavior 1/xi
    xi = 50.0 + 3.0j
    val = cauchy_transform([1.0, 0.0, 1.0, 0.0, 2.0], xi)
    assert abs(val - 1.0 / xi) < 1e-3
    # semicircle series vs closed form at a comfortably large point
    ms = [1.0 if k == 0 else (0.0 if k % 2 else float(catalan(k // 2))) for k in range(40)]
    xi = 3.0 + 0.5j
    assert abs(cauchy_transform(ms, xi) - semicircle_transform(xi)) < 1e-6


def test_closed_transforms():
    assert semicircle_transform(3.0 + 0j) == pytest.approx((3.0 - math.sqrt(5.0)) / 2.0)
    # Marchenko-Pastur series identity
    ms = [float(catalan(k)) for k in range(40)]
    xi = 9.0 + 1.0j
    assert abs(cauchy_transform(ms, xi) - mp_transform(xi)) < 1e-8
    # arcsine series identity
    ds = [float(central_binomial(k)) for k in range(60)]
    xi = 9.0 + 1.0j
    assert abs(cauchy_transform(ds, xi) - arcsine_transform(xi)) < 1e-6
    # modified arcsine series identity
    es = [float(middle_binomial(k)) for k in range(60)]
    xi = 5.0 + 1.0j
    assert abs(cauchy_transform(es, xi) - marcsine_transform(xi)) < 1e-8


def test_stieltjes_density_semicircle():
    for x in (0.0, 1.0, -1.0):
        target = math.sqrt(4.0 - x * x) / (2.0 * math.pi)
        assert stieltjes_density("semicircle", x, 1e-3) == pytest.approx(target, abs=1e-2)
    assert stieltjes_density("semicircle", 3.0, 1e-4) == pytest.approx(0.0, abs=1e-3)


def test_stieltjes_density_other_laws():
    assert stieltjes_density("mp", 1.0, 1e-3) == pytest.approx(
        math.sqrt(3.0) / (2.0 * math.pi), abs=1e-2
    )
    assert stieltjes_density("mp", 2.0, 1e-3) == pytest.approx(
        mp_law().density(2.0), abs=1e-2
    )
    assert stieltjes_density("arcsine", 2.0, 1e-3) == pytest.approx(
        1.0 / (2.0 * math.pi), abs=1e-2
    )
    assert stieltjes_density("arcsine", 1.0, 1e-3) == pytest.approx(
        arcsine_law().density(1.0), abs=1e-2
    )
    assert stieltjes_density("marcsine", 1.0, 1e-3) == pytest.approx(
        marcsine_law().density(1.0), abs=1e-2
    )
    with pytest.raises(ValueError):
        stieltjes_density("nope", 0.0, 1e-3)


def test_stieltjes_halving_t_improves():
    target = 1.0 / math.pi
    e1 = abs(stieltjes_density("semicircle", 0.0, 1e-3) - target)
    e2 = abs(stieltjes_density("semicircle", 0.0, 5e-4) - target)
    assert e1 / e2 >= 1.5


def test_stieltjes_from_moment_sequence():
    ms = [1.0 if k == 0 else (0.0 if k % 2 else float(catalan(k // 2))) for k in range(60)]
    # at moderate height the truncated series is usable on the support edge
    got = stieltjes_density(ms, 2.5, 0.5)
    closed = stieltjes_density("semicircle", 2.5, 0.5)
    assert got == pytest.approx(closed, abs=1e-3)


def test_hankel_check():
    assert hankel_check([1.0, 0.0, 0.0, 0.0, 0.0], 3) == pytest.approx([1.0, 0.0, 0.0])
    dets = hankel_check([1.0, 0.0, 1.0, 0.0, 2.0, 0.0, 5.0], 4)
    assert all(d >= -1e-9 for d in dets)
    # M2 < M1^2 is not a moment sequence: negative 2x2 determinant
    bad = hankel_check([1.0, 1.0, 0.5], 2)
    assert bad[1] < 0
    with pytest.raises(ValueError):
        hankel_check([1.0, 0.0], 3)


def test_orthopoly_from_moments():
    ms = [1.0, 0.25, 0.4, 0.1, 0.3, 0.05]
    assert orthopoly_from_moments(ms, 0).coefficients == [1.0]
    p1 = orthopoly_from_moments(ms, 1)
    assert p1.coefficients == pytest.approx([-0.25, 1.0])
    # uniform on [-1, 1]: P2 is proportional to 3x^2 - 1, monic (x^2 - 1/3)
    uniform = [1.0, 0.0, 1 / 3, 0.0, 1 / 5, 0.0]
    p2 = orthopoly_from_moments(uniform, 2)
    assert p2.coefficients == pytest.approx([-1 / 3, 0.0, 1.0], abs=1e-12)
    # orthogonality to all lower powers under the moment functional
    for k in (1, 2):
        p = orthopoly_from_moments(ms, k)
        for j in range(k):
            pairing = sum(c * ms[i + j] for i, c in enumerate(p.coefficients))
            assert abs(pairing) < 1e-8
    with pytest.raises(ValueError):
        orthopoly_from_moments([1.0, 0.0, 0.0, 0.0], 2)  # degenerate Hankel


def test_orthopoly_gram_schmidt_oracle():
    # Gram-Schmidt on 1, x, x^2 under the semicircle moments
    ms = [1.0, 0.0, 1.0, 0.0, 2.0, 0.0]

    def inner(c1, c2):
        return sum(
            a * b * ms[i + j] for i, a in enumerate(c1) for j, b in enumerate(c2)
        )

    e0 = [1.0]
    x1 = [0.0, 1.0]
    e1 = [x1[0] - inner(x1, e0) / inner(e0, e0), 1.0]
    x2 = [0.0, 0.0, 1.0]
    proj0 = inner(x2, e0) / inner(e0, e0)
    proj1 = inner(x2, e1 + [0.0]) / inner(e1, e1)
    e2 = [
        -proj0 - proj1 * e1[0],
        -proj1 * e1[1] + 0.0,
        1.0,
    ]
    got = orthopoly_from_moments(ms, 2)
    assert got.coefficients == pytest.approx(e2, abs=1e-10)


def test_sn_fixed_points_exact():
    counts = sn_fixed_point_counts(4, 1.0)
    assert counts[0] == 9  # the derangements of S_4
    assert sum(counts.values()) == factorial(4)
    res = sn_fixed_point_law(1, 1.0)
    assert res.exact
    assert dict(res.law.atoms).get(0.0, 0.0) == 0.0 or 0.0 not in dict(res.law.atoms)
    # mass at 0 equals the inclusion-exclusion value, exactly as rationals
    for N in range(1, 8):
        counts = sn_fixed_point_counts(N, 1.0)
        p0 = Fraction(counts.get(0, 0), factorial(N))
        assert p0 == derangement_probability_exact(N, 1.0)


def test_sn_fixed_points_truncated():
    # t < 1: no fixed points among the first m = floor(tN) positions
    N, t = 6, 0.5
    counts = sn_fixed_point_counts(N, t)
    p0 = Fraction(counts[0], factorial(N))
    assert p0 == derangement_probability_exact(N, t)


def test_sn_fixed_points_sampled():
    res = sn_fixed_point_law(12, 1.0, rng=RandomSource(5), samples=20000)
    assert not res.exact
    p0 = dict(res.law.atoms)[0.0]
    assert p0 == pytest.approx(1.0 / math.e, abs=0.02)
    with pytest.raises(ValueError):
        sn_fixed_point_law(12, 1.0)  # sampling needs a seed


def test_graph_loop_moments():
    path = [[1 if abs(i - j) == 1 else 0 for j in range(12)] for i in range(12)]
    for m in range(5):
        assert graph_loop_moment(path, 0, 2 * m) == catalan(m)
    assert graph_loop_moment(path, 0, 5) == 0  # bipartite: odd loops vanish
    line = [[1 if abs(i - j) == 1 else 0 for j in range(21)] for i in range(21)]
    assert graph_loop_moment(line, 10, 4) == central_binomial(2)
    with pytest.raises(ValueError):
        graph_loop_moment([[0, 2], [2, 0]], 0, 2)


def test_su2_character_moments():
    raw, rescaled = su2_character_moment(0)
    assert raw == 1.0 and rescaled == 1.0
    raw, rescaled = su2_character_moment(1)
    assert raw == pytest.approx(0.25)
    assert rescaled == pytest.approx(1.0)
    # rescaled moments are the Catalan numbers = semicircle even moments
    semi = moments(semicircle_law(), 8)
    for k in range(5):
        _, rescaled = su2_character_moment(k)
        assert rescaled == pytest.approx(catalan(k), rel=1e-12)
        assert rescaled == pytest.approx(semi[2 * k], abs=1e-6)


def test_su2_character_moment_mc():
    for k in (1, 2):
        est, se = su2_character_moment_mc(k, 200_000, RandomSource(31))
        assert abs(est - catalan(k)) <= 4 * se
