"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance is pinned here.
"""

import itertools
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from calclab.combinat import bernoulli, catalan, factorial
from calclab.dynamics import (
    ChargeConfig,
    OrbitState,
    conic_fit,
    dalembert,
    disk_map,
    divergence_check,
    einstein_add_1d,
    einstein_add_3d,
    flux_through_sphere,
    green_check,
    kepler_integrate,
    orbit_params,
    orbit_period,
    simulate_wave,
    stokes_check,
)
from calclab.hydrogen import (
    bohr_energy,
    bohr_radius,
    line_wavelength,
    radial_wavefunction,
    rydberg_constant,
    spherical_harmonic,
)
from calclab.prob import (
    Law,
    arcsine_law,
    convolve,
    mp_law,
    plt_distance,
    semicircle_law,
    sn_fixed_point_counts,
    stieltjes_density,
    su2_character_moment,
    su2_character_moment_mc,
)
from calclab.quad import (
    SphereMomentKey,
    sample_complex_sphere,
    sample_real_sphere,
    simpson,
    sphere_moment,
    stirling_ratio,
    verify_fresnel,
    verify_gauss,
)
from calclab.rng import RandomSource
from calclab.series import basel_sum_corrected


def check(name: str, ok: bool, detail: str = ""):
    line = f"{'PASS' if ok else 'FAIL'}: {name}"
    if detail:
        line += f"  [{detail}]"
    print(line)
    assert ok, line


def test_criterion_01_gauss_integral():
    start = time.perf_counter()
    residual = verify_gauss(L=8.0, nodes=10_000)
    elapsed = time.perf_counter() - start
    check(
        "1 Gauss integral (Simpson 1e4 nodes on [-8,8], 1e-8)",
        residual < 1e-8 and elapsed < 1.0,
        f"residual={residual:.2e}, {elapsed:.2f}s",
    )


def test_criterion_02_fresnel():
    residual = verify_fresnel(T=20.0, averaging=8)
    check("2 Fresnel sine integral (T=20, 8 half-periods, 1e-3)", residual < 1e-3, f"residual={residual:.2e}")


def test_criterion_03_basel():
    estimate, _ = basel_sum_corrected(10**6)
    gap = abs(estimate - math.pi**2 / 6.0)
    check("3 Basel sum (1e6 terms + midpoint tail, 1e-6)", gap < 1e-6, f"gap={gap:.2e}")


def test_criterion_04_bernoulli_table():
    table = [
        Fraction(1),
        Fraction(-1, 2),
        Fraction(1, 6),
        Fraction(0),
        Fraction(-1, 30),
        Fraction(0),
        Fraction(1, 42),
        Fraction(0),
        Fraction(-1, 30),
        Fraction(0),
        Fraction(5, 66),
        Fraction(0),
        Fraction(-691, 2730),
    ]
    ok = all(bernoulli(n) == table[n] for n in range(13))
    check("4 Bernoulli numbers B0..B12 exact", ok)


def test_criterion_05_stieltjes_densities():
    t = 1e-3
    worst = 0.0
    for x in (0.0, 1.0, -1.0):
        target = math.sqrt(4.0 - x * x) / (2.0 * math.pi)
        worst = max(worst, abs(stieltjes_density("semicircle", x, t) - target))
    for x in (1.0, 2.0):
        worst = max(worst, abs(stieltjes_density("mp", x, t) - mp_law().density(x)))
        worst = max(
            worst, abs(stieltjes_density("arcsine", x, t) - arcsine_law().density(x))
        )
    check("5 Stieltjes inversion at t=1e-3 (1e-2 abs)", worst < 1e-2, f"worst={worst:.2e}")


def _sorted_keys(N: int, total: int):
    out = set()
    for combo in itertools.combinations_with_replacement(range(total + 1), N):
        if sum(combo) <= total:
            out.add(tuple(sorted(combo, reverse=True)))
    return sorted(out)


def test_criterion_06_sphere_moments_mc():
    start = time.perf_counter()
    samples = 10**6
    worst_sigma = 0.0
    count = 0
    for N in range(1, 6):
        pts = sample_real_sphere(N, samples, RandomSource(7100 + N))
        for key in _sorted_keys(N, 6):
            k = SphereMomentKey(key)
            values = np.ones(samples)
            for i, e in enumerate(key):
                if e:
                    values = values * pts[:, i] ** e
            est = float(values.mean())
            se = float(values.std(ddof=1)) / math.sqrt(samples)
            gap = abs(est - sphere_moment(k))
            if se > 0:
                worst_sigma = max(worst_sigma, gap / se)
            else:
                assert gap == 0.0
            count += 1
    for N in range(1, 5):
        pts = sample_complex_sphere(N, samples, RandomSource(7200 + N))
        mags = np.abs(pts) ** 2
        for key in _sorted_keys(N, 3):
            k = SphereMomentKey(key, field="complex")
            values = np.ones(samples)
            for i, e in enumerate(key):
                if e:
                    values = values * mags[:, i] ** e
            est = float(values.mean())
            se = float(values.std(ddof=1)) / math.sqrt(samples)
            gap = abs(est - sphere_moment(k))
            if se > 0:
                worst_sigma = max(worst_sigma, gap / se)
            else:
                assert gap == 0.0
            count += 1
    elapsed = time.perf_counter() - start
    check(
        "6 sphere moments vs 1e6-sample MC (4 sigma, <30s)",
        worst_sigma <= 4.0 and elapsed < 30.0,
        f"{count} keys, worst={worst_sigma:.2f} sigma, {elapsed:.1f}s",
    )


def test_criterion_07_stirling():
    gap = abs(stirling_ratio(100) - 1.0)
    check("7 Stirling ratio at N=100 (1e-3)", gap < 1e-3, f"gap={gap:.2e}")


def test_criterion_08_hydrogen_numbers():
    e1 = bohr_energy(1).ev
    R = rydberg_constant()
    a = bohr_radius()
    lines = [line_wavelength(2, n2) * 1e9 for n2 in (3, 4, 5, 6)]
    targets = [656.279, 486.135, 434.047, 410.173]
    ok = (
        abs(e1 - (-13.591)) < 0.005
        and abs(R - 1.0968e7) / 1.0968e7 < 1e-3
        and abs(a - 5.29e-11) / 5.29e-11 < 5e-3
        and all(abs(l - t) < 0.1 for l, t in zip(lines, targets))
    )
    check(
        "8 hydrogen E1/R/a/Balmer lines",
        ok,
        f"E1={e1:.4f}eV R={R:.5g} a={a:.4g} lines={[round(l,3) for l in lines]}",
    )


def test_criterion_09_wavefunction_normalization():
    start = time.perf_counter()
    worst = 0.0
    for n in range(1, 4):
        for l in range(n):
            rho = radial_wavefunction(n, l)
            radial = simpson(lambda r: rho(r) ** 2 * r * r, 0.0, 40.0 * n, 4000)
            for m in range(-l, l + 1):
                Y = spherical_harmonic(l, m)
                angular = simpson(
                    lambda s: abs(Y(s, 0.0)) ** 2 * 2.0 * math.pi * math.sin(s),
                    0.0,
                    math.pi,
                    800,
                )
                worst = max(worst, abs(radial * angular - 1.0))
    elapsed = time.perf_counter() - start
    check(
        "9 wavefunction normalization, n <= 3 (1e-4, <10s)",
        worst < 1e-4 and elapsed < 10.0,
        f"worst={worst:.2e}, {elapsed:.1f}s",
    )


def test_criterion_10_derangements():
    ok = True
    for N in range(1, 10):
        counts = sn_fixed_point_counts(N, 1.0)
        p0 = Fraction(counts.get(0, 0), factorial(N))
        formula = sum(
            Fraction((-1) ** r, factorial(r)) for r in range(N + 1)
        )
        ok &= p0 == formula
        ok &= abs(float(p0) - 1.0 / math.e) <= 1.0 / factorial(N + 1)
    check("10 derangement probabilities exact, |P - 1/e| <= 1/(N+1)!", ok)


def test_criterion_11_plt():
    gap = plt_distance(1.0, 500, upto=4)
    check(
        "11 Poisson limit: 500-fold coin vs Poisson(1), order <= 4 (0.02)",
        gap <= 0.02,
        f"gap={gap:.4f}",
    )


def test_criterion_12_clt_fourth_moment():
    n = 100
    # combinatorial oracle: of the n^2 * n^2 index quadruples in E[(sum x)^4],
    # the 3n(n-1) fully-paired ones and the n diagonal ones survive
    oracle = Fraction(3 * n * (n - 1) + n, n * n)
    assert oracle == Fraction(3) - Fraction(2, n)
    coin = Law(atoms=((-1.0, 0.5), (1.0, 0.5)))
    law = coin
    for _ in range(n - 1):
        law = convolve(law, coin)
    root = math.sqrt(n)
    m4 = sum(mass * (loc / root) ** 4 for loc, mass in law.atoms)
    gap = abs(m4 - float(oracle))
    check(
        "12 CLT fourth moment of 100 coins = 3 - 2/100 (1e-12)",
        gap <= 1e-12,
        f"gap={gap:.2e}",
    )


def test_criterion_13_dalembert_vs_lattice():
    sigma = 0.5
    g = lambda x: math.exp(-((x - 10.0) ** 2) / (2.0 * sigma**2))
    zero = lambda x: 0.0
    grid = simulate_wave(g, zero, 1.0, 0.0, 20.0, 0.01, 0.5, 5.0)
    exact = np.array(
        [dalembert(g, zero, 1.0, float(x), grid.time, nodes=2) for x in grid.x]
    )
    gap = float(np.abs(grid.values - exact).max())
    check("13 d'Alembert vs leapfrog lattice at t=5 (1e-2 sup)", gap <= 1e-2, f"gap={gap:.2e}")


def test_criterion_14_kepler():
    s0 = OrbitState(2.0 / 3.0, 0.0, 0.0, 1.5, 1.0)  # eps = 0.5
    _, eps, _, _ = orbit_params(s0)
    assert eps == pytest.approx(0.5)
    T = orbit_period(s0)
    traj = kepler_integrate(s0, T, T / 10**4)
    J0 = traj[0].angular_momentum
    drift = max(abs(p.angular_momentum - J0) for p in traj) / abs(J0)
    residual = conic_fit(traj)[3]
    check(
        "14 Kepler eps=0.5 orbit: J drift <= 1e-6, conic residual <= 1e-5",
        drift <= 1e-6 and residual <= 1e-5,
        f"drift={drift:.2e}, residual={residual:.2e}",
    )


def test_criterion_15_gauss_flux():
    cfg = ChargeConfig(
        charges=(
            (1.0, (0.2, 0.1, -0.3)),
            (-0.5, (-0.4, 0.2, 0.1)),
            (2.0, (1.8, 0.5, 0.2)),
        ),
        k=1.0,
    )
    flux = flux_through_sphere(cfg, (0.0, 0.0, 0.0), 1.0, order=64)
    expected = cfg.enclosed((0.0, 0.0, 0.0), 1.0) / cfg.epsilon0
    rel = abs(flux - expected) / abs(expected)
    check("15 Gauss flux law, 3 charges at order 64 (1e-3 rel)", rel <= 1e-3, f"rel={rel:.2e}")


def test_criterion_16_integral_theorems():
    lhs, rhs, g_gap = green_check(lambda x, y: -y, lambda x, y: x, disk_map(), n=64)
    ok = abs(lhs - 2 * math.pi) < 1e-4 and g_gap <= 1e-4
    flat_disk = (
        lambda u, v: (u * math.cos(v), u * math.sin(v), 0.0),
        (0.0, 1.0),
        (0.0, 2 * math.pi),
    )
    lhs, rhs, s_gap = stokes_check(lambda p: (-p[1], p[0], 0.0), flat_disk, n=48)
    ok &= abs(lhs - 2 * math.pi) < 1e-4 and s_gap <= 1e-4
    lhs, rhs, d_gap = divergence_check(
        lambda p: (p[0], p[1], p[2]), order=24, radial_nodes=32
    )
    ok &= abs(lhs - 4 * math.pi) < 1e-4 and d_gap <= 1e-4
    check(
        "16 Green/Stokes/divergence checks (1e-4)",
        ok,
        f"gaps={g_gap:.1e}/{s_gap:.1e}/{d_gap:.1e}",
    )


def test_criterion_17_su2_character():
    ok = True
    for k in range(6):
        _, rescaled = su2_character_moment(k)
        ok &= rescaled == float(catalan(k))
    worst = 0.0
    for k in (1, 2, 3):
        est, se = su2_character_moment_mc(k, 10**6, RandomSource(4200 + k))
        worst = max(worst, abs(est - catalan(k)) / se)
    check(
        "17 SU(2) character moments: exact Catalan k<=5, MC within 4 sigma",
        ok and worst <= 4.0,
        f"worst={worst:.2f} sigma",
    )


def test_criterion_18_einstein_suite():
    rng = RandomSource(20240818).generator()
    worst_identity = 0.0
    worst_absorption = 0.0
    worst_lightnorm = 0.0
    worst_collinear = 0.0
    ok_contraction = True
    for _ in range(10**4):
        u = rng.standard_normal(3)
        v = rng.standard_normal(3)
        u *= rng.uniform(0.0, 0.9999) / np.linalg.norm(u)
        v *= rng.uniform(0.0, 0.9999) / np.linalg.norm(v)
        s = einstein_add_3d(u, v)
        ok_contraction &= bool(np.linalg.norm(s) < 1.0)
        dot = float(u @ v)
        expected = (
            float(np.linalg.norm(u + v)) ** 2
            - float(np.linalg.norm(u)) ** 2 * float(np.linalg.norm(v)) ** 2
            + dot * dot
        ) / (1.0 + dot) ** 2
        worst_identity = max(worst_identity, abs(np.linalg.norm(s) ** 2 - expected))
        # light-cone absorption: the correction scales as sqrt(1 - |u|^2),
        # so a float-normalized unit vector can only absorb to ~sqrt(eps)
        unit_u = u / np.linalg.norm(u)
        worst_absorption = max(
            worst_absorption,
            float(np.abs(einstein_add_3d(unit_u, v) - unit_u).max()),
        )
        # |v| = 1 keeps the result exactly on the light cone (no sqrt there)
        worst_lightnorm = max(
            worst_lightnorm,
            abs(float(np.linalg.norm(einstein_add_3d(u, v / np.linalg.norm(v)))) - 1.0),
        )
        # collinear pairs reduce to the 1D formula
        lam = rng.uniform(-0.9, 0.9)
        w = einstein_add_3d(u, lam * u)
        nu = float(np.linalg.norm(u))
        expected_1d = einstein_add_1d(nu, lam * nu)
        worst_collinear = max(
            worst_collinear, float(np.abs(w - expected_1d * u / nu).max())
        )
    # exactly representable light-cone vectors absorb to full precision
    for exact_u in ([1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.6, 0.8, 0.0]):
        got = einstein_add_3d(exact_u, [0.1, 0.2, -0.3])
        worst_absorption_exact = float(np.abs(got - np.asarray(exact_u)).max())
        assert worst_absorption_exact <= 1e-12
    ok = (
        ok_contraction
        and worst_identity <= 1e-12
        and worst_absorption <= 1e-7
        and worst_lightnorm <= 1e-12
        and worst_collinear <= 1e-12
    )
    check(
        "18 Einstein addition property suite on 1e4 seeded pairs",
        ok,
        f"identity={worst_identity:.1e} absorb={worst_absorption:.1e} "
        f"lightnorm={worst_lightnorm:.1e} collinear={worst_collinear:.1e}",
    )
