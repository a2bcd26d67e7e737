"""Mechanics, field theory and PDE solvers in low dimensions.

Vector products and rotating-frame kinematics, relativistic velocity
addition, the one-dimensional free-fall closed form, a fourth-order two-body
integrator with conic-fit verification, conic classification, ellipse
area/length, stereographic projection, the d'Alembert wave solution and its
lattice counterpart, forward-Euler heat stepping with the Gaussian kernel,
second-order linear ODEs, and numerical verification of the flux/Green/
Stokes/divergence theorems by product quadrature.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .quad import simpson

__all__ = [
    "cross",
    "einstein_add_1d",
    "einstein_add_3d",
    "rotating_acceleration",
    "gravity1d_time",
    "gravity1d_stop_time",
    "OrbitState",
    "kepler_step",
    "kepler_integrate",
    "canonicalize_orbit",
    "orbit_params",
    "orbit_period",
    "conic_fit",
    "classify_conic",
    "ellipse_area",
    "ellipse_length",
    "stereographic_to_sphere",
    "stereographic_to_plane",
    "dalembert",
    "Grid1D",
    "wave_lattice_step",
    "heat_lattice_step",
    "simulate_wave",
    "simulate_heat",
    "heat_kernel",
    "heat_solve",
    "ode2_solve",
    "ChargeConfig",
    "electric_field",
    "flux_through_sphere",
    "disk_map",
    "green_check",
    "stokes_check",
    "divergence_check",
]


def cross(u: Sequence[float], v: Sequence[float]) -> np.ndarray:
    """Vector product in R^3 by the 2x2-determinant rule."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return np.array(
        [
            u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0],
        ]
    )


def einstein_add_1d(u: float, v: float) -> float:
    """Relativistic speed addition (u + v)/(1 + uv), in c = 1 units."""
    if abs(u) > 1 + 1e-12 or abs(v) > 1 + 1e-12:
        raise ValueError("speeds must satisfy |u|, |v| <= 1")
    denom = 1.0 + u * v
    if denom == 0.0:
        raise ValueError("antipodal light-speed inputs")
    return (u + v) / denom


def einstein_add_3d(u: Sequence[float], v: Sequence[float]) -> np.ndarray:
    """Relativistic velocity addition in 3D, in c = 1 units.

    (u + v + u x (u x v)/(1 + sqrt(1 - |u|^2)))/(1 + <u, v>).  Collinear
    inputs reduce to the 1D formula; |u| = 1 absorbs v; the result never
    exceeds the light cone.  Not commutative.
    """
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    nu, nv = float(np.linalg.norm(u)), float(np.linalg.norm(v))
    if nu > 1 + 1e-12 or nv > 1 + 1e-12:
        raise ValueError("speeds must satisfy |u|, |v| <= 1")
    dot = float(u @ v)
    if 1.0 + dot <= 1e-300:
        raise ValueError("antipodal light-speed inputs")
    gamma = 1.0 + math.sqrt(max(0.0, 1.0 - min(nu, 1.0) ** 2))
    return (u + v + cross(u, cross(u, v)) / gamma) / (1.0 + dot)


def rotating_acceleration(
    a: Sequence[float],
    omega: Sequence[float],
    v: Sequence[float],
    x: Sequence[float],
) -> np.ndarray:
    """Inertial-frame acceleration a + 2 omega x v + omega x (omega x x)."""
    a = np.asarray(a, dtype=float)
    omega = np.asarray(omega, dtype=float)
    return a + 2.0 * cross(omega, v) + cross(omega, cross(omega, x))


def gravity1d_time(x: float, x0: float, k: float) -> float:
    """Fall time to height x from rest at x0 under xdd = -k/x^2."""
    if k <= 0:
        raise ValueError("need k > 0")
    if not 0.0 <= x <= x0:
        raise ValueError("need 0 <= x <= x0")
    y = x / x0
    return math.sqrt(x0**3 / (2.0 * k)) * (
        math.sqrt(max(0.0, y * (1.0 - y))) + math.acos(math.sqrt(y))
    )


def gravity1d_stop_time(x0: float, k: float) -> float:
    """Total fall time pi sqrt(x0^3/(8k))."""
    if k <= 0 or x0 <= 0:
        raise ValueError("need x0, k > 0")
    return math.pi * math.sqrt(x0**3 / (8.0 * k))


@dataclass(frozen=True)
class OrbitState:
    """Planar two-body state: position, velocity, attraction constant, time."""

    x: float
    y: float
    vx: float
    vy: float
    K: float
    time: float = 0.0

    @property
    def r(self) -> float:
        return math.hypot(self.x, self.y)

    @property
    def angular_momentum(self) -> float:
        """J_z = x v_y - y v_x (per unit mass)."""
        return self.x * self.vy - self.y * self.vx

    @property
    def energy(self) -> float:
        return 0.5 * (self.vx**2 + self.vy**2) - self.K / self.r


def _kepler_rhs(state: np.ndarray, K: float) -> np.ndarray:
    x, y, vx, vy = state
    r3 = (x * x + y * y) ** 1.5
    return np.array([vx, vy, -K * x / r3, -K * y / r3])


def kepler_step(s: OrbitState, dt: float, r_min: float = 1e-12) -> OrbitState:
    """One classical fourth-order step of zdd = -K z/|z|^3."""
    if dt <= 0:
        raise ValueError("need dt > 0")
    state = np.array([s.x, s.y, s.vx, s.vy])
    k1 = _kepler_rhs(state, s.K)
    k2 = _kepler_rhs(state + 0.5 * dt * k1, s.K)
    k3 = _kepler_rhs(state + 0.5 * dt * k2, s.K)
    k4 = _kepler_rhs(state + dt * k3, s.K)
    new = state + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    if math.hypot(new[0], new[1]) < r_min:
        raise ArithmeticError("collision: radius fell below the threshold")
    return OrbitState(new[0], new[1], new[2], new[3], s.K, s.time + dt)


def kepler_integrate(
    s: OrbitState, T: float, dt: float, r_min: float = 1e-12
) -> list[OrbitState]:
    """Trajectory from s over duration T in steps of dt (last step clipped).

    Pass a physically meaningful r_min when collisions are possible; the
    default only catches an exact fall onto the center.
    """
    if T <= 0:
        raise ValueError("need T > 0")
    steps = int(round(T / dt))
    out = [s]
    for _ in range(steps):
        s = kepler_step(s, dt, r_min=r_min)
        out.append(s)
    return out


def canonicalize_orbit(s: OrbitState) -> tuple[OrbitState, float]:
    """Rotate a planar state onto the positive x-axis (theta_0 = 0).

    Returns the rotated state and the rotation angle applied, so outputs can
    be mapped back by rotating through -angle.
    """
    if s.r == 0.0:
        raise ValueError("cannot canonicalize a state at the origin")
    angle = -math.atan2(s.y, s.x)
    c, sn = math.cos(angle), math.sin(angle)
    return (
        OrbitState(
            c * s.x - sn * s.y,
            sn * s.x + c * s.y,
            c * s.vx - sn * s.vy,
            sn * s.vx + c * s.vy,
            s.K,
            s.time,
        ),
        angle,
    )


def orbit_params(s0: OrbitState) -> tuple[float, float, float, float]:
    """(c, epsilon, delta, lambda) of r = c/(1 + eps cos th + delta sin th).

    The state must start on the positive x-axis (theta_0 = 0); lambda is
    the angular momentum sqrt(Kc), c comes from it, eps from the initial
    radius and delta from the initial radial speed.
    """
    if abs(s0.y) > 1e-9 * max(1.0, abs(s0.x)) or s0.x <= 0:
        raise ValueError("orbit parameters need a start on the positive x-axis")
    R = s0.x
    lam = R * s0.vy
    c = lam * lam / s0.K
    eps = c / R - 1.0
    delta = -s0.vx * math.sqrt(c / s0.K)
    return c, eps, delta, lam


def orbit_period(s0: OrbitState) -> float:
    """Period of a bound orbit: 2 pi sqrt(A^3/K), A = c/(1 - e^2)."""
    c, eps, delta, _ = orbit_params(s0)
    e2 = eps * eps + delta * delta
    if e2 >= 1.0:
        raise ValueError("orbit is not bound")
    A = c / (1.0 - e2)
    return 2.0 * math.pi * math.sqrt(A**3 / s0.K)


def conic_fit(traj: Sequence[OrbitState]) -> tuple[float, float, float, float]:
    """Least-squares (c, eps, delta) for the orbit conic, plus sup residual.

    Fits eps*x + delta*y - c = -r linearly over the trajectory and reports
    the worst value of |x^2 + y^2 - (eps x + delta y - c)^2|.
    """
    xs = np.array([p.x for p in traj])
    ys = np.array([p.y for p in traj])
    rs = np.hypot(xs, ys)
    design = np.stack([xs, ys, -np.ones_like(xs)], axis=1)
    sol, *_ = np.linalg.lstsq(design, -rs, rcond=None)
    eps, delta, c = float(sol[0]), float(sol[1]), float(sol[2])
    residual = float(np.abs(xs**2 + ys**2 - (eps * xs + delta * ys - c) ** 2).max())
    return c, eps, delta, residual


def classify_conic(
    a: float, b: float, c: float, d: float, e: float, f: float, tol: float = 1e-9
) -> str:
    """Classify the conic a x^2 + b xy + c y^2 + d x + e y + f = 0.

    Returns ellipse/parabola/hyperbola for the non-degenerate cases, and
    empty/point/line/parallel_lines/crossing_lines/plane for the rest.
    Classification uses the eigenvalue signs of the quadratic part plus the
    3x3 degeneracy determinant, with a relative tolerance band.
    """
    scale = max(abs(a), abs(b), abs(c), abs(d), abs(e), abs(f))
    if scale == 0.0:
        return "plane"
    a, b, c, d, e, f = (v / scale for v in (a, b, c, d, e, f))
    M3 = np.array(
        [[a, b / 2.0, d / 2.0], [b / 2.0, c, e / 2.0], [d / 2.0, e / 2.0, f]]
    )
    det3 = float(np.linalg.det(M3))
    detQ = a * c - b * b / 4.0
    trQ = a + c
    if abs(det3) > tol:
        if detQ > tol:
            # real only when the cubic invariant has the opposite sign
            return "ellipse" if trQ * det3 < 0 else "empty"
        if detQ < -tol:
            return "hyperbola"
        return "parabola"
    # degenerate cases
    if detQ > tol:
        return "point"
    if detQ < -tol:
        return "crossing_lines"
    if max(abs(a), abs(b), abs(c)) <= tol:
        if max(abs(d), abs(e)) > tol:
            return "line"
        return "plane" if abs(f) <= tol else "empty"
    # rank-one quadratic part: (alpha x + beta y)^2 + linear = 0
    # rotate so the quadratic part is lambda X^2
    lam = trQ  # the nonzero eigenvalue (the other is ~0)
    theta = 0.5 * math.atan2(b, a - c) if (b != 0 or a != c) else 0.0
    ct, st = math.cos(theta), math.sin(theta)
    # coefficients in rotated coordinates (X along the eigenvector)
    dX = d * ct + e * st
    dY = -d * st + e * ct
    if abs(dY) > tol:
        return "parabola"  # shouldn't happen: det3 would be nonzero
    # lam X^2 + dX X + f = 0: a quadratic in X only
    disc = dX * dX - 4.0 * lam * f
    if abs(disc) <= tol:
        return "line"
    return "parallel_lines" if disc * lam > 0 else "empty"


def ellipse_area(a: float, b: float) -> float:
    """pi a b."""
    if a <= 0 or b <= 0:
        raise ValueError("need a, b > 0")
    return math.pi * a * b


def ellipse_length(a: float, b: float, nodes: int = 2048) -> float:
    """Perimeter 4 int_0^{pi/2} sqrt(a^2 sin^2 t + b^2 cos^2 t) dt, by quadrature."""
    if a <= 0 or b <= 0:
        raise ValueError("need a, b > 0")
    return 4.0 * simpson(
        lambda t: math.sqrt(a * a * math.sin(t) ** 2 + b * b * math.cos(t) ** 2),
        0.0,
        math.pi / 2.0,
        nodes,
    )


def stereographic_to_sphere(v: Sequence[float]) -> np.ndarray:
    """Map R^N to the unit sphere of R^(N+1) minus the pole (1, 0, ..., 0)."""
    v = np.asarray(v, dtype=float)
    t = 2.0 / (1.0 + float(v @ v))
    return np.concatenate([[1.0 - t], t * v])


def stereographic_to_plane(p: Sequence[float]) -> np.ndarray:
    """Inverse map (c, x) -> x/(1 - c); the pole c = 1 is excluded."""
    p = np.asarray(p, dtype=float)
    c = p[0]
    if abs(1.0 - c) < 1e-15:
        raise ValueError("the north pole has no stereographic image")
    return p[1:] / (1.0 - c)


def dalembert(
    g: Callable[[float], float],
    h: Callable[[float], float],
    v: float,
    x: float,
    t: float,
    nodes: int = 512,
) -> float:
    """Wave solution (g(x-vt) + g(x+vt))/2 + (1/2v) int_{x-vt}^{x+vt} h."""
    if v <= 0:
        raise ValueError("need v > 0")
    out = 0.5 * (g(x - v * t) + g(x + v * t))
    if t != 0.0:
        out += simpson(h, x - v * t, x + v * t, nodes) / (2.0 * v)
    return out


@dataclass(frozen=True)
class Grid1D:
    """Uniform samples of a field on [a, b] with a time stamp."""

    values: np.ndarray
    a: float
    b: float
    time: float = 0.0

    def __post_init__(self):
        if len(self.values) < 3:
            raise ValueError("need at least 3 samples")
        if not self.a < self.b:
            raise ValueError("need a < b")

    @property
    def dx(self) -> float:
        return (self.b - self.a) / (len(self.values) - 1)

    @property
    def x(self) -> np.ndarray:
        return np.linspace(self.a, self.b, len(self.values))


def wave_lattice_step(u_prev: Grid1D, u_curr: Grid1D, v: float, dt: float) -> Grid1D:
    """One leapfrog step of the wave equation, fixed boundary values.

    Refuses unstable parameters: v dt/dx must not exceed 1.
    """
    if dt <= 0 or v <= 0:
        raise ValueError("need v, dt > 0")
    dx = u_curr.dx
    lam = v * dt / dx
    if lam > 1.0 + 1e-12:
        raise ValueError(f"unstable step: v*dt/dx = {lam:.4f} > 1")
    u0, u1 = u_prev.values, u_curr.values
    new = np.copy(u1)
    new[1:-1] = (
        2.0 * u1[1:-1]
        - u0[1:-1]
        + lam * lam * (u1[2:] - 2.0 * u1[1:-1] + u1[:-2])
    )
    return Grid1D(new, u_curr.a, u_curr.b, u_curr.time + dt)


def heat_lattice_step(u: Grid1D, alpha: float, dt: float) -> Grid1D:
    """One forward-Euler step of the heat equation, fixed boundary values.

    Refuses unstable parameters: alpha dt/dx^2 must not exceed 1/2.
    """
    if dt <= 0 or alpha <= 0:
        raise ValueError("need alpha, dt > 0")
    dx = u.dx
    mu = alpha * dt / (dx * dx)
    if mu > 0.5 + 1e-12:
        raise ValueError(f"unstable step: alpha*dt/dx^2 = {mu:.4f} > 1/2")
    vals = u.values
    new = np.copy(vals)
    new[1:-1] = vals[1:-1] + mu * (vals[2:] - 2.0 * vals[1:-1] + vals[:-2])
    return Grid1D(new, u.a, u.b, u.time + dt)


def simulate_wave(
    g: Callable[[float], float],
    h: Callable[[float], float],
    v: float,
    a: float,
    b: float,
    dx: float,
    cfl: float,
    t_final: float,
) -> Grid1D:
    """Leapfrog evolution from displacement g and velocity h to t ~ t_final.

    The first step is the standard Taylor start using the initial velocity
    and the spatial second difference.
    """
    if not 0 < cfl <= 1:
        raise ValueError("need 0 < cfl <= 1")
    n = int(round((b - a) / dx))
    xs = np.linspace(a, b, n + 1)
    dt = cfl * dx / v
    steps = max(1, int(round(t_final / dt)))
    u0 = np.array([g(x) for x in xs])
    hv = np.array([h(x) for x in xs])
    lam2 = (v * dt / dx) ** 2
    u1 = np.copy(u0)
    u1[1:-1] = (
        u0[1:-1]
        + dt * hv[1:-1]
        + 0.5 * lam2 * (u0[2:] - 2.0 * u0[1:-1] + u0[:-2])
    )
    prev = Grid1D(u0, a, b, 0.0)
    curr = Grid1D(u1, a, b, dt)
    for _ in range(steps - 1):
        prev, curr = curr, wave_lattice_step(prev, curr, v, dt)
    return curr


def simulate_heat(
    g: Callable[[float], float],
    alpha: float,
    a: float,
    b: float,
    dx: float,
    cfl: float,
    t_final: float,
) -> Grid1D:
    """Forward-Euler heat evolution from the initial profile g to t ~ t_final."""
    if not 0 < cfl <= 0.5:
        raise ValueError("need 0 < cfl <= 1/2")
    n = int(round((b - a) / dx))
    xs = np.linspace(a, b, n + 1)
    dt = cfl * dx * dx / alpha
    steps = max(1, int(round(t_final / dt)))
    grid = Grid1D(np.array([g(x) for x in xs]), a, b, 0.0)
    for _ in range(steps):
        grid = heat_lattice_step(grid, alpha, dt)
    return grid


def heat_kernel(alpha: float, t: float, x: Sequence[float] | float) -> float:
    """Gaussian fundamental solution (4 pi alpha t)^(-N/2) exp(-|x|^2/(4 alpha t))."""
    if t <= 0 or alpha <= 0:
        raise ValueError("need alpha, t > 0")
    x = np.atleast_1d(np.asarray(x, dtype=float))
    N = len(x)
    return float(
        (4.0 * math.pi * alpha * t) ** (-N / 2.0)
        * math.exp(-float(x @ x) / (4.0 * alpha * t))
    )


def heat_solve(
    g: Callable[[float], float],
    alpha: float,
    t: float,
    x: float,
    half_width: float | None = None,
    nodes: int = 4000,
) -> float:
    """1D heat solution at (x, t) by truncated kernel convolution.

    The window half-width defaults to 14 standard deviations of the kernel,
    which leaves a tail below 1e-40 for bounded initial data.
    """
    if t <= 0 or alpha <= 0:
        raise ValueError("need alpha, t > 0")
    w = half_width or 14.0 * math.sqrt(2.0 * alpha * t)
    return simpson(
        lambda y: heat_kernel(alpha, t, x - y) * g(y), x - w, x + w, nodes
    )


def ode2_solve(
    a: float, b: float, f0: float, f0p: float, root_tol: float = 1e-9
) -> Callable[[float], float]:
    """Closed-form solution of f'' = a f + b f' with f(0), f'(0) given.

    Uses the roots r, s of x^2 = a + bx: combinations of e^(rx), e^(sx) when
    they differ, (l x + m) e^(rx) for a double root.  Complex roots are
    handled in complex arithmetic; the returned callback is real.
    """
    import cmath

    disc = complex(b * b + 4.0 * a)
    sq = cmath.sqrt(disc)
    r = (b + sq) / 2.0
    s = (b - sq) / 2.0
    scale = max(1.0, abs(r), abs(s))
    if abs(r - s) <= root_tol * scale:
        mu = complex(f0)
        lam = complex(f0p) - r * f0

        def solution(x: float) -> float:
            return ((lam * x + mu) * cmath.exp(r * x)).real

        return solution
    delta = (complex(f0p) - r * f0) / (s - r)
    gamma = complex(f0) - delta

    def solution(x: float) -> float:
        return (gamma * cmath.exp(r * x) + delta * cmath.exp(s * x)).real

    return solution


@dataclass(frozen=True)
class ChargeConfig:
    """Point charges (q_i, position_i) with a Coulomb constant.

    The vacuum permittivity used by the flux laws is 1/(4 pi k); the
    dimensionless test mode is k = 1.
    """

    charges: tuple[tuple[float, tuple[float, float, float]], ...]
    k: float = 1.0

    def __post_init__(self):
        pts = [p for _, p in self.charges]
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                if np.allclose(pts[i], pts[j]):
                    raise ValueError("charge positions must be distinct")

    @property
    def epsilon0(self) -> float:
        return 1.0 / (4.0 * math.pi * self.k)

    def enclosed(self, center: Sequence[float], radius: float) -> float:
        center = np.asarray(center, dtype=float)
        return sum(
            q
            for q, p in self.charges
            if np.linalg.norm(np.asarray(p) - center) < radius
        )


def electric_field(cfg: ChargeConfig, x: Sequence[float]) -> np.ndarray:
    """k sum q_i (x - p_i)/|x - p_i|^3."""
    x = np.asarray(x, dtype=float)
    out = np.zeros(3)
    for q, p in cfg.charges:
        d = x - np.asarray(p, dtype=float)
        r = float(np.linalg.norm(d))
        if r == 0.0:
            raise ZeroDivisionError("field evaluated at a charge location")
        out += cfg.k * q * d / r**3
    return out


def _sphere_quadrature(order: int):
    """Product nodes/weights on the unit sphere: Gauss-Legendre in cos(polar),
    uniform in azimuth.  Weights sum to the sphere area 4 pi."""
    u, w = np.polynomial.legendre.leggauss(order)
    ts = np.linspace(0.0, 2.0 * math.pi, 2 * order, endpoint=False)
    dt = 2.0 * math.pi / (2 * order)
    nodes = []
    weights = []
    for ui, wi in zip(u, w):
        sin_s = math.sqrt(max(0.0, 1.0 - ui * ui))
        for t in ts:
            nodes.append((sin_s * math.cos(t), sin_s * math.sin(t), ui))
            weights.append(wi * dt)
    return np.array(nodes), np.array(weights)


def flux_through_sphere(
    cfg: ChargeConfig,
    center: Sequence[float],
    radius: float,
    order: int = 64,
) -> float:
    """Outward flux of the electric field through the given sphere."""
    center = np.asarray(center, dtype=float)
    if radius <= 0:
        raise ValueError("need radius > 0")
    for q, p in cfg.charges:
        if abs(np.linalg.norm(np.asarray(p) - center) - radius) < 1e-9 * radius:
            raise ValueError("a charge lies on the sphere surface")
    nodes, weights = _sphere_quadrature(order)
    total = 0.0
    for n, w in zip(nodes, weights):
        x = center + radius * n
        total += w * float(electric_field(cfg, x) @ n)
    return total * radius * radius


def disk_map(radius: float = 1.0, center: tuple[float, float] = (0.0, 0.0)):
    """Polar parametrization of a disk, for the Green-theorem checker."""

    def mapping(rho: float, theta: float) -> tuple[float, float]:
        return (
            center[0] + radius * rho * math.cos(theta),
            center[1] + radius * rho * math.sin(theta),
        )

    return mapping, (0.0, 1.0), (0.0, 2.0 * math.pi)


def _map_jacobian(mapping, u: float, v: float, h: float = 1e-6):
    xu = (np.array(mapping(u + h, v)) - np.array(mapping(u - h, v))) / (2 * h)
    xv = (np.array(mapping(u, v + h)) - np.array(mapping(u, v - h))) / (2 * h)
    return xu, xv


def green_check(
    P: Callable[[float, float], float],
    Q: Callable[[float, float], float],
    region,
    n: int = 256,
) -> tuple[float, float, float]:
    """Both sides of the plane circulation identity, and their gap.

    ``region`` is (mapping, u_span, v_span) with mapping an
    orientation-preserving chart of the region (see :func:`disk_map`); the
    boundary curve is the mapped rectangle boundary, traversed
    counterclockwise, so degenerate or cancelling edges contribute nothing.
    Returns (line integral of P dx + Q dy, area integral of dQ/dx - dP/dy,
    |difference|).
    """
    mapping, (u0, u1), (v0, v1) = region
    h = 1e-6 * max(u1 - u0, v1 - v0)

    def field_dot_edge(points):
        # line integrand <(P, Q), dx/dt> along a parametrized edge
        def f(t):
            x, y = points(t)
            xt = (np.array(points(t + h)) - np.array(points(t - h))) / (2 * h)
            return P(x, y) * xt[0] + Q(x, y) * xt[1]

        return f

    lhs = 0.0
    edges = [
        (lambda t: mapping(t, v0), u0, u1),
        (lambda t: mapping(u1, t), v0, v1),
        (lambda t: mapping(t, v1), u1, u0),
        (lambda t: mapping(u0, t), v1, v0),
    ]
    for points, t0, t1 in edges:
        if t0 != t1:
            lhs += simpson(field_dot_edge(points), t0, t1, n)

    def curl_z(u, v):
        x, y = mapping(u, v)
        hh = 1e-5
        dQdx = (Q(x + hh, y) - Q(x - hh, y)) / (2 * hh)
        dPdy = (P(x, y + hh) - P(x, y - hh)) / (2 * hh)
        xu, xv = _map_jacobian(mapping, u, v)
        jac = xu[0] * xv[1] - xu[1] * xv[0]
        return (dQdx - dPdy) * jac

    rhs = simpson(lambda u: simpson(lambda v: curl_z(u, v), v0, v1, n), u0, u1, n)
    return lhs, rhs, abs(lhs - rhs)


def _curl(F: Callable[[np.ndarray], Sequence[float]], x: np.ndarray, h: float = 1e-5) -> np.ndarray:
    def partial(i):
        e = np.zeros(3)
        e[i] = h
        return (np.asarray(F(x + e), dtype=float) - np.asarray(F(x - e), dtype=float)) / (2 * h)

    dx, dy, dz = partial(0), partial(1), partial(2)
    return np.array([dy[2] - dz[1], dz[0] - dx[2], dx[1] - dy[0]])


def _divergence(F: Callable[[np.ndarray], Sequence[float]], x: np.ndarray, h: float = 1e-5) -> float:
    out = 0.0
    for i in range(3):
        e = np.zeros(3)
        e[i] = h
        out += (F(x + e)[i] - F(x - e)[i]) / (2 * h)
    return float(out)


def stokes_check(
    F: Callable[[np.ndarray], Sequence[float]],
    surface,
    n: int = 128,
) -> tuple[float, float, float]:
    """Surface integral of <curl F, n> vs the boundary line integral of F.

    ``surface`` is (mapping, u_span, v_span) with mapping: (u, v) -> R^3;
    the normal is S_u x S_v and the boundary is the mapped rectangle edge
    loop, so the orientations match automatically.
    """
    mapping, (u0, u1), (v0, v1) = surface
    h = 1e-6 * max(u1 - u0, v1 - v0)

    def surf_integrand(u, v):
        xu, xv = _map_jacobian(mapping, u, v, h)
        x = np.asarray(mapping(u, v), dtype=float)
        return float(_curl(F, x) @ cross(xu, xv))

    lhs = simpson(
        lambda u: simpson(lambda v: surf_integrand(u, v), v0, v1, n), u0, u1, n
    )

    def line_integrand(points):
        def f(t):
            x = np.asarray(points(t), dtype=float)
            xt = (
                np.asarray(points(t + h), dtype=float)
                - np.asarray(points(t - h), dtype=float)
            ) / (2 * h)
            return float(np.asarray(F(x), dtype=float) @ xt)

        return f

    rhs = 0.0
    edges = [
        (lambda t: mapping(t, v0), u0, u1),
        (lambda t: mapping(u1, t), v0, v1),
        (lambda t: mapping(t, v1), u1, u0),
        (lambda t: mapping(u0, t), v1, v0),
    ]
    for points, t0, t1 in edges:
        if t0 != t1:
            rhs += simpson(line_integrand(points), t0, t1, 2 * n)
    return lhs, rhs, abs(lhs - rhs)


def divergence_check(
    F: Callable[[np.ndarray], Sequence[float]],
    center: Sequence[float] = (0.0, 0.0, 0.0),
    radius: float = 1.0,
    order: int = 32,
    radial_nodes: int = 64,
) -> tuple[float, float, float]:
    """Ball integral of div F vs the outward flux of F through the sphere."""
    center = np.asarray(center, dtype=float)
    nodes, weights = _sphere_quadrature(order)

    def shell(r: float) -> float:
        if r == 0.0:
            return 0.0
        return r * r * sum(
            w * _divergence(F, center + r * n) for n, w in zip(nodes, weights)
        )

    lhs = simpson(shell, 0.0, radius, radial_nodes)
    rhs = radius * radius * sum(
        w * float(np.asarray(F(center + radius * n), dtype=float) @ n)
        for n, w in zip(nodes, weights)
    )
    return lhs, rhs, abs(lhs - rhs)
