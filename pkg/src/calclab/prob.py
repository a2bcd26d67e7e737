"""Classical probability laws and their moment calculus.

A Law is a finite atom list plus an optional density on a compact support
interval.  The module provides the discrete laws (Bernoulli, binomial,
Poisson), the real and complex Gaussian laws with their pairing/partition
moment formulas, convolution, the Poisson and central limit theorems as
moment-gap computations, the Cauchy transform with Stieltjes inversion for
the four combinatorial laws (semicircle, Marchenko-Pastur, arcsine, modified
arcsine), Hankel positivity, orthogonal polynomials from moments, and the
fixed-point statistics of random permutations.
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np

from .combinat import (
    binomial as binom,
    count_matching_pairings,
    factorial,
    matching_pairings,
    semi_factorial,
    set_partitions,
)
from .linalg import Polynomial
from .quad import SphereMomentKey, sphere_moment, sphere_moment_mc
from .rng import RandomSource

__all__ = [
    "Law",
    "moments",
    "law_fourier",
    "bernoulli_law",
    "binomial_law",
    "binomial_stats",
    "poisson_law",
    "poisson_fourier",
    "poisson_moment",
    "gaussian_law",
    "gaussian_moment",
    "gaussian_fourier",
    "complex_gaussian_moment",
    "wick",
    "convolve",
    "plt_distance",
    "clt_moment_gap",
    "cauchy_transform",
    "semicircle_law",
    "mp_law",
    "arcsine_law",
    "marcsine_law",
    "semicircle_transform",
    "mp_transform",
    "arcsine_transform",
    "marcsine_transform",
    "stieltjes_density",
    "hankel_check",
    "orthopoly_from_moments",
    "sn_fixed_point_counts",
    "sn_fixed_point_law",
    "SnFixedPointResult",
    "derangement_probability_exact",
    "su2_character_moment_mc",
    "BUILTIN_CONTINUOUS_LAWS",
    "graph_loop_moment",
    "su2_character_moment",
]


@dataclass(frozen=True)
class Law:
    """A probability law: atoms (location, mass) plus an optional density.

    The density lives on the compact interval ``support``; total mass
    (atoms + density integral) must be 1, which :meth:`total_mass` checks by
    quadrature.  Densities with inverse-square-root endpoint singularities
    are fine: all density quadrature goes through a cosine substitution that
    absorbs them.
    """

    atoms: tuple[tuple[float, float], ...] = ()
    density: Callable[[float], float] | None = None
    support: tuple[float, float] | None = None

    def __post_init__(self):
        if any(mass < -1e-12 for _, mass in self.atoms):
            raise ValueError("atom masses must be nonnegative")
        if (self.density is None) != (self.support is None):
            raise ValueError("density and support come together")
        if self.support is not None and not self.support[0] < self.support[1]:
            raise ValueError("support must be a nondegenerate interval")

    def total_mass(self, nodes: int = 8000) -> float:
        total = sum(mass for _, mass in self.atoms)
        if self.density is not None:
            total += _density_integral(self, lambda x: 1.0, nodes)
        return total


class _GridDensity:
    """Density backed by uniform samples, as produced by grid convolution."""

    def __init__(self, x: np.ndarray, values: np.ndarray):
        self.x = x
        self.values = values

    def __call__(self, t: float) -> float:
        return float(np.interp(t, self.x, self.values, left=0.0, right=0.0))


def _density_integral(law: Law, f: Callable[[float], float], nodes: int) -> float:
    """Integral of f against the density part.

    Grid-backed densities are integrated on their native grid (Simpson);
    everything else goes through the substitution x = mid - half*cos(u),
    whose sin(u) Jacobian cancels inverse-square-root singularities at
    either endpoint of the support.
    """
    if isinstance(law.density, _GridDensity):
        xs = law.density.x
        vals = law.density.values * np.array([f(float(t)) for t in xs])
        n = len(xs) - 1
        h = float(xs[1] - xs[0])
        if n % 2:  # Simpson needs an even interval count; fold the last one
            head = float(
                (vals[0] + vals[n - 1] + 4.0 * vals[1 : n - 1 : 2].sum() + 2.0 * vals[2 : n - 1 : 2].sum())
                * h
                / 3.0
            )
            return head + 0.5 * h * float(vals[n - 1] + vals[n])
        return float(
            (vals[0] + vals[-1] + 4.0 * vals[1:-1:2].sum() + 2.0 * vals[2:-1:2].sum()) * h / 3.0
        )
    a, b = law.support
    mid, half = 0.5 * (a + b), 0.5 * (b - a)
    nodes = max(nodes, 8)
    if nodes % 2:
        nodes += 1
    u = np.linspace(0.0, math.pi, nodes + 1)
    x = mid - half * np.cos(u)
    vals = np.empty_like(x)
    for i in range(1, nodes):
        vals[i] = law.density(float(x[i])) * f(float(x[i]))
    vals[1:-1] *= half * np.sin(u[1:-1])
    # the substituted integrand extends smoothly to u = 0, pi even when the
    # density blows up like an inverse square root there; extrapolate the
    # endpoint values quadratically from the interior nodes
    vals[0] = 3.0 * (vals[1] - vals[2]) + vals[3]
    vals[-1] = 3.0 * (vals[-2] - vals[-3]) + vals[-4]
    h = math.pi / nodes
    return float((vals[0] + vals[-1] + 4.0 * vals[1:-1:2].sum() + 2.0 * vals[2:-1:2].sum()) * h / 3.0)


def moments(law: Law, upto: int, nodes: int = 8000) -> list[float]:
    """The moment sequence M_0..M_upto of a law (atom sums + quadrature)."""
    if upto < 0:
        raise ValueError("need upto >= 0")
    out = []
    for k in range(upto + 1):
        m = sum(mass * loc**k for loc, mass in law.atoms)
        if law.density is not None:
            m += _density_integral(law, lambda x: x**k, nodes)
        out.append(float(m))
    return out


def law_fourier(law: Law, y: float, nodes: int = 8000) -> complex:
    """E(exp(iyX)) for the law."""
    out = sum(mass * cmath.exp(1j * y * loc) for loc, mass in law.atoms)
    if law.density is not None:
        re = _density_integral(law, lambda x: math.cos(y * x), nodes)
        im = _density_integral(law, lambda x: math.sin(y * x), nodes)
        out += complex(re, im)
    return out


def bernoulli_law(x: float) -> Law:
    """(1-x) delta_0 + x delta_1."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("need x in [0, 1]")
    return Law(atoms=((0.0, 1.0 - x), (1.0, x)))


def binomial_law(x: float, n: int) -> Law:
    """Atoms binom(n, k) x^k (1-x)^(n-k) at k = 0..n."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("need x in [0, 1]")
    if n < 1:
        raise ValueError("need n >= 1")
    atoms = tuple(
        (float(k), binom(n, k) * x**k * (1.0 - x) ** (n - k)) for k in range(n + 1)
    )
    return Law(atoms=atoms)


def binomial_stats(x: float, n: int) -> tuple[float, float]:
    """(mean, variance) = (nx, nx(1-x))."""
    if not 0.0 <= x <= 1.0:
        raise ValueError("need x in [0, 1]")
    return n * x, n * x * (1.0 - x)


def poisson_law(t: float, residual: float = 1e-12) -> Law:
    """Atoms e^-t t^k/k! at k = 0, 1, ..., truncated at the residual mass.

    High moments of heavily truncated laws are biased low; the default
    residual 1e-12 keeps moments up to order ~10 accurate for moderate t.
    """
    if t <= 0:
        raise ValueError("need t > 0")
    atoms = []
    cumulative = 0.0
    mass = math.exp(-t)
    k = 0
    while 1.0 - cumulative >= residual:
        atoms.append((float(k), mass))
        cumulative += mass
        k += 1
        mass *= t / k
    return Law(atoms=tuple(atoms))


def poisson_fourier(t: float, y: float) -> complex:
    """exp((e^{iy} - 1) t)."""
    if t <= 0:
        raise ValueError("need t > 0")
    return cmath.exp((cmath.exp(1j * y) - 1.0) * t)


def poisson_moment(t: float, k: int) -> float:
    """k-th Poisson moment as the partition sum of t^(number of blocks).

    Enumerates set partitions, so k is capped at 12; the atom-sum route is
    ``moments(poisson_law(t), k)``, and the two agree to quadrature accuracy.
    """
    if t <= 0:
        raise ValueError("need t > 0")
    if k > 12:
        raise ValueError("partition enumeration is capped at k = 12")
    return float(sum(t ** len(p) for p in set_partitions(k)))


def gaussian_law(t: float) -> Law:
    """Centered Gaussian of variance t, truncated to [-12 sqrt(t), 12 sqrt(t)].

    The truncated mass is below 1e-30 and is not renormalized.
    """
    if t <= 0:
        raise ValueError("need t > 0")
    s = math.sqrt(t)
    norm = 1.0 / math.sqrt(2.0 * math.pi * t)

    def density(x: float) -> float:
        return norm * math.exp(-x * x / (2.0 * t))

    return Law(density=density, support=(-12.0 * s, 12.0 * s))


def gaussian_moment(t: float, k: int) -> float:
    """t^(k/2) k!! for even k (shifted double factorial), 0 for odd k."""
    if t <= 0:
        raise ValueError("need t > 0")
    if k % 2:
        return 0.0
    return t ** (k // 2) * semi_factorial(k)


def gaussian_fourier(t: float, x: float) -> float:
    """exp(-t x^2/2)."""
    if t <= 0:
        raise ValueError("need t > 0")
    return math.exp(-t * x * x / 2.0)


def complex_gaussian_moment(t: float, word: str) -> float:
    """Moment of the complex Gaussian for a colored word over {'o', 'b'}.

    Equals t^(|word|/2) times the number of matching pairings: t^p p! for a
    uniform word of length 2p, and 0 otherwise.
    """
    if t <= 0:
        raise ValueError("need t > 0")
    if word == "":
        return 1.0
    n = len(word)
    if n % 2:
        return 0.0
    return t ** (n // 2) * count_matching_pairings(word)


def wick(t: float, factors: Sequence[tuple[int, str]]) -> float:
    """Joint moment of independent complex Gaussians f_i.

    ``factors`` lists (index, color) pairs, color 'o' for f_i and 'b' for
    its conjugate.  The value is t^(s/2) times the number of matching
    pairings whose blocks respect the index kernel (odd length gives 0).
    """
    if t <= 0:
        raise ValueError("need t > 0")
    s = len(factors)
    if s == 0:
        return 1.0
    if s % 2:
        return 0.0
    word = "".join(color for _, color in factors)
    idx = [i for i, _ in factors]
    compatible = sum(
        1
        for pairing in matching_pairings(word)
        if all(idx[a] == idx[b] for a, b in pairing)
    )
    return t ** (s // 2) * compatible


def _merge_atoms(atoms: list[tuple[float, float]], tol: float) -> tuple[tuple[float, float], ...]:
    atoms = sorted(atoms)
    merged: list[list[float]] = []
    for loc, mass in atoms:
        if merged and abs(loc - merged[-1][0]) <= tol:
            total = merged[-1][1] + mass
            if total > 0:
                merged[-1][0] = (merged[-1][0] * merged[-1][1] + loc * mass) / total
            merged[-1][1] = total
        else:
            merged.append([loc, mass])
    return tuple((loc, mass) for loc, mass in merged)


def convolve(a: Law, b: Law, grid: int = 4096) -> Law:
    """The law of the sum of independent variables with laws a and b.

    Atom pairs convolve exactly; any density parts are convolved on a
    uniform grid of about ``grid`` points and interpolated linearly.
    """
    scale = max(
        [abs(loc) for loc, _ in a.atoms + b.atoms]
        + [abs(x) for law in (a, b) if law.support for x in law.support]
        + [1.0]
    )
    tol = 1e-12 * scale
    new_atoms = []
    if a.atoms and b.atoms:
        new_atoms = [
            (la + lb, ma * mb) for la, ma in a.atoms for lb, mb in b.atoms if ma * mb != 0.0
        ]
    elif a.atoms or b.atoms:
        new_atoms = []  # a pure-density partner absorbs the atoms below

    if a.density is None and b.density is None:
        return Law(atoms=_merge_atoms(new_atoms, tol))

    # at least one density part: build the density of the sum on a grid
    pieces: list[Callable[[float], float]] = []
    supports: list[tuple[float, float]] = []

    def add_shifted(law_d: Law, atom_law: Law):
        # sum of a density law and an atomic law: mixture of shifted densities
        a0, b0 = law_d.support
        for loc, mass in atom_law.atoms:
            if mass == 0.0:
                continue
            supports.append((a0 + loc, b0 + loc))

        def piece(x: float, law_d=law_d, atom_law=atom_law) -> float:
            return sum(
                mass * law_d.density(x - loc)
                for loc, mass in atom_law.atoms
                if law_d.support[0] <= x - loc <= law_d.support[1]
            )

        pieces.append(piece)

    if a.density is not None and b.density is not None:
        a0, a1 = a.support
        b0, b1 = b.support
        dx = (a1 - a0 + b1 - b0) / grid
        xa = np.arange(a0, a1 + dx / 2, dx)
        xb = np.arange(b0, b1 + dx / 2, dx)
        fa = np.array([a.density(float(x)) for x in xa])
        fb = np.array([b.density(float(x)) for x in xb])
        conv = np.convolve(fa, fb) * dx
        xc = a0 + b0 + dx * np.arange(len(conv))
        pieces.append(_GridDensity(xc, conv))
        supports.append((float(xc[0]), float(xc[-1])))
        if a.atoms:
            add_shifted(b, a)
        if b.atoms:
            add_shifted(a, b)
    elif a.density is not None:
        add_shifted(a, b)
    else:
        add_shifted(b, a)

    lo = min(s[0] for s in supports)
    hi = max(s[1] for s in supports)

    if len(pieces) == 1:
        density = pieces[0]  # keep grid densities detectable for quadrature
    else:

        def density(x: float) -> float:
            return sum(p(x) for p in pieces)

    return Law(atoms=_merge_atoms(new_atoms, tol), density=density, support=(lo, hi))


def _atomic_moments(law: Law, upto: int) -> list[float]:
    return [sum(mass * loc**k for loc, mass in law.atoms) for k in range(upto + 1)]


def plt_distance(t: float, n: int, upto: int = 4) -> float:
    """Relative moment gap between the n-fold convolved t/n-coin and Poisson(t).

    The coin law is convolved exactly (atoms), its moments are compared with
    the partition-sum Poisson moments, and the largest discrepancy relative
    to max(1, |Poisson moment|) is returned.  (The absolute gap of the
    fourth moment is already ~0.06 at t=1, n=500; relative is the meaningful
    normalization for moments that grow like Bell numbers.)
    """
    if n < 1:
        raise ValueError("need n >= 1")
    coin = bernoulli_law(t / n)
    law = coin
    for _ in range(n - 1):
        law = convolve(law, coin)
    got = _atomic_moments(law, upto)
    gap = 0.0
    for k in range(1, upto + 1):
        target = poisson_moment(t, k)
        gap = max(gap, abs(got[k] - target) / max(1.0, abs(target)))
    return gap


def clt_moment_gap(base: Law, n: int, upto: int = 4) -> float:
    """Largest absolute moment gap between the normalized n-fold sum and its Gaussian limit.

    ``base`` must be atomic and centered; the sum is rescaled by 1/sqrt(n)
    and compared against the Gaussian of the base variance, for moments up
    to ``upto``.
    """
    if base.density is not None:
        raise ValueError("clt_moment_gap needs an atomic base law")
    if n < 1:
        raise ValueError("need n >= 1")
    mean = sum(mass * loc for loc, mass in base.atoms)
    if abs(mean) > 1e-9:
        raise ValueError("base law must be centered")
    var = sum(mass * loc**2 for loc, mass in base.atoms)
    law = base
    for _ in range(n - 1):
        law = convolve(law, base)
    root = math.sqrt(n)
    scaled = Law(atoms=tuple((loc / root, mass) for loc, mass in law.atoms))
    got = _atomic_moments(scaled, upto)
    gap = 0.0
    for k in range(1, upto + 1):
        gap = max(gap, abs(got[k] - gaussian_moment(var, k)))
    return gap


def cauchy_transform(moment_seq: Sequence[float], xi: complex) -> complex:
    """Truncated Cauchy transform sum_k M_k xi^-(k+1) of a moment sequence.

    The truncation order is len(moment_seq) - 1; the series only makes
    sense for |xi| beyond the moment growth radius.
    """
    inv = 1.0 / xi
    out = 0j
    for m in reversed(moment_seq):
        out = (out + m) * inv
    return out


def semicircle_law() -> Law:
    """Wigner semicircle on [-2, 2]: density sqrt(4 - x^2)/(2 pi)."""
    return Law(
        density=lambda x: math.sqrt(max(0.0, 4.0 - x * x)) / (2.0 * math.pi),
        support=(-2.0, 2.0),
    )


def mp_law() -> Law:
    """Marchenko-Pastur on [0, 4]: density sqrt(4/x - 1)/(2 pi)."""
    return Law(
        density=lambda x: math.sqrt(max(0.0, 4.0 / x - 1.0)) / (2.0 * math.pi)
        if x > 0
        else 0.0,
        support=(0.0, 4.0),
    )


def arcsine_law() -> Law:
    """Arcsine law on [0, 4]: density 1/(pi sqrt(x(4-x)))."""

    def density(x: float) -> float:
        inside = x * (4.0 - x)
        return 1.0 / (math.pi * math.sqrt(inside)) if inside > 0 else 0.0

    return Law(density=density, support=(0.0, 4.0))


def marcsine_law() -> Law:
    """Modified arcsine law on [-2, 2]: density sqrt((2+x)/(2-x))/(2 pi)."""

    def density(x: float) -> float:
        if not -2.0 < x < 2.0:
            return 0.0
        return math.sqrt((2.0 + x) / (2.0 - x)) / (2.0 * math.pi)

    return Law(density=density, support=(-2.0, 2.0))


def semicircle_transform(xi: complex) -> complex:
    """(xi - sqrt(xi-2) sqrt(xi+2))/2, the branch with G ~ 1/xi at infinity."""
    return (xi - cmath.sqrt(xi - 2.0) * cmath.sqrt(xi + 2.0)) / 2.0


def mp_transform(xi: complex) -> complex:
    """1/2 - sqrt(1 - 4/xi)/2."""
    return 0.5 - 0.5 * cmath.sqrt(1.0 - 4.0 / xi)


def arcsine_transform(xi: complex) -> complex:
    """1/(sqrt(xi) sqrt(xi - 4))."""
    return 1.0 / (cmath.sqrt(xi) * cmath.sqrt(xi - 4.0))


def marcsine_transform(xi: complex) -> complex:
    """(sqrt(xi+2)/sqrt(xi-2) - 1)/2."""
    return 0.5 * (cmath.sqrt(xi + 2.0) / cmath.sqrt(xi - 2.0) - 1.0)


_BUILTIN_TRANSFORMS = {
    "semicircle": semicircle_transform,
    "mp": mp_transform,
    "arcsine": arcsine_transform,
    "marcsine": marcsine_transform,
}

BUILTIN_CONTINUOUS_LAWS = {
    "semicircle": semicircle_law,
    "mp": mp_law,
    "arcsine": arcsine_law,
    "marcsine": marcsine_law,
}


def stieltjes_density(
    law: str | Sequence[float], x: float, t: float
) -> float:
    """Pointwise density estimate -Im(G(x + it))/pi at height t.

    ``law`` is a builtin transform name (semicircle, mp, arcsine, marcsine)
    or a moment sequence (truncated-series transform).  The estimator is
    biased O(t) near smooth density points; the t -> 0 limit is the exact
    density, realized in tests as a convergence check, never automatically.
    """
    if t <= 0:
        raise ValueError("need t > 0")
    xi = complex(x, t)
    if isinstance(law, str):
        try:
            transform = _BUILTIN_TRANSFORMS[law]
        except KeyError:
            raise ValueError(f"unknown builtin law {law!r}") from None
        g = transform(xi)
    else:
        g = cauchy_transform(law, xi)
    return -g.imag / math.pi


def hankel_check(moment_seq: Sequence[float], depth: int) -> list[float]:
    """Determinants of the nested Hankel matrices (M_{i+j}) of sizes 1..depth.

    All must be nonnegative (within tolerance) for a genuine moment
    sequence.
    """
    if depth < 1:
        raise ValueError("need depth >= 1")
    if len(moment_seq) < 2 * depth - 1:
        raise ValueError("need moments up to order 2*(depth-1)")
    out = []
    for d in range(depth):
        H = np.array(
            [[moment_seq[i + j] for j in range(d + 1)] for i in range(d + 1)],
            dtype=float,
        )
        out.append(float(np.linalg.det(H)))
    return out


def orthopoly_from_moments(moment_seq: Sequence[float], k: int) -> Polynomial:
    """Monic orthogonal polynomial of degree k for the given moments.

    Built from the bordered Hankel determinant with last row (1, x, ...,
    x^k), normalized by the leading Hankel minor.  Degenerate (numerically
    singular) Hankel minors are rejected.
    """
    if k < 0:
        raise ValueError("need k >= 0")
    if len(moment_seq) < 2 * k:
        raise ValueError("need moments up to order 2k - 1")
    if k == 0:
        return Polynomial([1.0])
    rows = [[float(moment_seq[i + j]) for j in range(k + 1)] for i in range(k)]
    lead_minor = np.array([row[:k] for row in rows], dtype=float)
    delta = float(np.linalg.det(lead_minor))
    scale = float(np.abs(lead_minor).max()) or 1.0
    if abs(delta) <= 1e-12 * scale**k:
        raise ValueError("degenerate Hankel minor: orthogonal polynomial undefined")
    coeffs = []
    for j in range(k + 1):
        minor = np.array([row[:j] + row[j + 1 :] for row in rows], dtype=float)
        cof = (-1.0) ** (k + j) * float(np.linalg.det(minor))
        coeffs.append(cof / delta)
    return Polynomial(coeffs)


@dataclass(frozen=True)
class SnFixedPointResult:
    law: Law
    exact: bool
    samples: int


def sn_fixed_point_counts(N: int, t: float = 1.0) -> dict[int, int]:
    """Exact counts of permutations of {1..N} by fixed points among 1..floor(tN).

    Enumerates the full symmetric group; N is capped at 9.
    """
    if not 1 <= N <= 9:
        raise ValueError("exact enumeration is for 1 <= N <= 9")
    if not 0.0 < t <= 1.0:
        raise ValueError("need t in (0, 1]")
    m = int(t * N)
    counts: dict[int, int] = {}
    for perm in itertools.permutations(range(N)):
        fixed = sum(1 for i in range(m) if perm[i] == i)
        counts[fixed] = counts.get(fixed, 0) + 1
    return counts


def sn_fixed_point_law(
    N: int,
    t: float = 1.0,
    rng: RandomSource | None = None,
    samples: int = 10**6,
) -> SnFixedPointResult:
    """Law of the number of fixed points among 1..floor(tN) of a random permutation.

    Exact by enumeration for N <= 9; beyond that, seeded Fisher-Yates
    sampling (an explicit RandomSource is then required).  The result
    reports which mode was used.
    """
    if N < 1:
        raise ValueError("need N >= 1")
    if not 0.0 < t <= 1.0:
        raise ValueError("need t in (0, 1]")
    if N <= 9:
        counts = sn_fixed_point_counts(N, t)
        total = factorial(N)
        atoms = tuple(
            (float(r), counts[r] / total) for r in sorted(counts)
        )
        return SnFixedPointResult(Law(atoms=atoms), exact=True, samples=0)
    if rng is None:
        raise ValueError("sampling mode needs an explicit RandomSource")
    m = int(t * N)
    gen = rng.generator()
    hits = np.zeros(m + 1, dtype=np.int64)
    for _ in range(samples):
        perm = gen.permutation(N)
        fixed = int(np.sum(perm[:m] == np.arange(m)))
        hits[fixed] += 1
    atoms = tuple(
        (float(r), hits[r] / samples) for r in range(m + 1) if hits[r] > 0
    )
    return SnFixedPointResult(Law(atoms=atoms), exact=False, samples=samples)


def derangement_probability_exact(N: int, t: float = 1.0) -> Fraction:
    """Exact inclusion-exclusion value of P(no fixed points among 1..floor(tN))."""
    if N < 1:
        raise ValueError("need N >= 1")
    m = int(t * N)
    total = Fraction(0)
    for r in range(m + 1):
        term = Fraction(binom(m, r) * factorial(N - r), factorial(N))
        total += -term if r % 2 else term
    return total


def graph_loop_moment(adjacency: Sequence[Sequence[int]], base: int, k: int) -> int:
    """Number of length-k loops based at ``base``: the (base, base) entry of A^k.

    The adjacency matrix must be symmetric with 0/1 integer entries; the
    power is computed in exact integer arithmetic.
    """
    A = [[int(v) for v in row] for row in adjacency]
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("adjacency matrix must be square")
    if any(A[i][j] not in (0, 1) or A[i][j] != A[j][i] for i in range(n) for j in range(n)):
        raise ValueError("adjacency matrix must be symmetric 0/1")
    if not 0 <= base < n:
        raise ValueError("base vertex out of range")
    if k < 0:
        raise ValueError("need k >= 0")
    M = np.array(A, dtype=object)
    out = np.eye(n, dtype=int).astype(object)
    for _ in range(k):
        out = out @ M
    return int(out[base, base])


def su2_character_moment(k: int) -> tuple[float, float]:
    """Even moments of twice the first coordinate of the 3-sphere.

    Returns (raw, rescaled): the raw moment of a^(2k) over the unit sphere
    of R^4 (which is C_k/4^k) and its 4^k rescaling (the Catalan number,
    i.e. the even moment of the semicircle law).
    """
    if k < 0:
        raise ValueError("need k >= 0")
    raw = sphere_moment(SphereMomentKey((2 * k, 0, 0, 0)))
    return raw, 4.0**k * raw


def su2_character_moment_mc(
    k: int, samples: int, rng: RandomSource
) -> tuple[float, float]:
    """Monte Carlo version of the rescaled character moment, with stderr."""
    est, se = sphere_moment_mc(SphereMomentKey((2 * k, 0, 0, 0)), samples, rng)
    return 4.0**k * est, 4.0**k * se
