"""Unified command-line front end.

One binary with verb-style subcommands dispatching into the library and
emitting CSV (default) or JSON tables.  Numbers are written with full
round-trip precision unless --digits is given; exact rationals print as
p/q.  Exit codes: 0 success, 1 usage error, 2 numerical failure.
The CALCLAB_FORMAT environment variable sets the default output format.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import combinat, diffcalc, dynamics, hydrogen, linalg, prob, quad, series
from .rng import RandomSource

__all__ = ["main", "ResultTable", "run"]


@dataclass
class ResultTable:
    columns: list[str]
    rows: list[tuple]
    note: str = ""

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("rows must match the column count")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        raise _UsageError(message)


def _format_value(v, digits: int | None) -> str:
    if v is None:
        return ""
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool):
        return str(v).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (complex, np.complexfloating)):
        re = _format_value(float(v.real), digits)
        im = _format_value(abs(float(v.imag)), digits)
        sign = "+" if v.imag >= 0 else "-"
        return f"{re}{sign}{im}i"
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.{digits or 17}g}"
    return str(v)


def _json_value(v, digits: int | None):
    if v is None or isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, Fraction):
        return _format_value(v, digits)
    if isinstance(v, (complex, np.complexfloating)) and not isinstance(v, (float, np.floating)):
        return _format_value(v, digits)
    if isinstance(v, (float, np.floating)):
        return float(f"{float(v):.{digits}g}") if digits else float(v)
    return str(v)


def emit(table: ResultTable, fmt: str, sink, digits: int | None = None) -> None:
    if fmt == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([_format_value(v, digits) for v in row])
    elif fmt == "json":
        payload = {
            "columns": table.columns,
            "rows": [[_json_value(v, digits) for v in row] for row in table.rows],
            "note": table.note,
        }
        json.dump(payload, sink, indent=2)
        sink.write("\n")
    else:
        raise _UsageError(f"unknown format {fmt!r}")


def _parse_floats(text: str) -> list[float]:
    return [float(v) for v in text.split(",") if v.strip() != ""]


def _parse_complex(text: str) -> complex:
    return complex(text.strip().replace(" ", "").replace("i", "j"))


def _parse_grid(text: str) -> list[float]:
    """Comma list of values, or start:stop:count."""
    if ":" in text:
        a, b, n = text.split(":")
        return list(np.linspace(float(a), float(b), int(n)))
    return _parse_floats(text)


# ---------------------------------------------------------------- builtins

_INTEGRANDS = {
    "square": lambda x: x * x,
    "cube": lambda x: x**3,
    "exp": math.exp,
    "sin": math.sin,
    "cos": math.cos,
    "gauss": lambda x: math.exp(-x * x),
    "abs_sin_120": lambda x: abs(math.sin(120.0 * x)),
    "runge": lambda x: 1.0 / (1.0 + 25.0 * x * x),
}

_FIELDS = {
    "bowl": (lambda v: float(np.sum(np.asarray(v) ** 2)), 2),
    "saddle": (lambda v: v[0] ** 2 - v[1] ** 2, 2),
    "cubic": (lambda v: v[0] ** 3, 1),
    "xy": (lambda v: v[0] * v[1], 2),
    "re_z3": (lambda v: v[0] ** 3 - 3.0 * v[0] * v[1] ** 2, 2),
    "log_r": (lambda v: math.log(math.hypot(v[0], v[1])), 2),
    "inv_r": (lambda v: 1.0 / math.sqrt(v[0] ** 2 + v[1] ** 2 + v[2] ** 2), 3),
}

_PROFILES = {
    "gaussian": lambda a, b: (lambda x: math.exp(-(((x - (a + b) / 2) / ((b - a) / 20.0)) ** 2) / 2.0)),
    "sine": lambda a, b: (lambda x: math.sin(2.0 * math.pi * (x - a) / (b - a))),
    "step": lambda a, b: (
        lambda x: 1.0 if (a + (b - a) / 3.0) <= x <= (a + 2.0 * (b - a) / 3.0) else 0.0
    ),
}


# ------------------------------------------------------------- subcommands


def _cmd_sequence(args) -> ResultTable:
    n = args.n
    if n < 0:
        raise ValueError("need --n >= 0")
    makers = {
        "factorial": combinat.factorial,
        "catalan": combinat.catalan,
        "central": combinat.central_binomial,
        "middle": combinat.middle_binomial,
        "bell": combinat.bell,
        "bernoulli": combinat.bernoulli,
    }
    fn = makers[args.kind]
    rows = [(k, fn(k)) for k in range(n + 1)]
    return ResultTable(["index", "value"], rows, note=f"{args.kind} sequence")


def _cmd_constants(args) -> ResultTable:
    if args.which == "e":
        value, bound = series.eval_series(series.exp_series(), 1.0, args.terms)
    elif args.which == "pi":
        value, bound = series.pi_leibnitz(args.terms)
    else:
        value, bound = series.basel_sum_corrected(args.terms)
    return ResultTable(
        ["constant", "value", "error_bound"],
        [(args.which, value, bound)],
        note="series evaluation with truncation bound",
    )


def _cmd_roots(args) -> ResultTable:
    coeffs = [_parse_complex(c) for c in args.coeffs.split(",")]
    poly = linalg.Polynomial(coeffs)
    roots = linalg.all_roots(poly, tol=1e-12)
    rows = [(i, r, abs(poly(r))) for i, r in enumerate(roots)]
    return ResultTable(["index", "root", "residual"], rows, note="simultaneous-iteration roots")


def _cmd_eig(args) -> ResultTable:
    with open(args.matrix, newline="") as fh:
        rows = [[_parse_complex(v) for v in line] for line in csv.reader(fh) if line]
    A = np.array(rows)
    if np.abs(A.imag).max() > 0:
        raise ValueError("eig handles real symmetric matrices only")
    U, d = linalg.symmetric_eigen(A.real, tol=1e-10)
    out = [(i, float(v)) for i, v in enumerate(d)]
    return ResultTable(["index", "eigenvalue"], out, note="cyclic Jacobi diagonalization")


def _cmd_integrate(args) -> ResultTable:
    f = _INTEGRANDS[args.fn]
    if args.method == "riemann":
        value, err = quad.riemann(f, args.a, args.b, args.n), None
    elif args.method == "trapezoid":
        value, err = quad.trapezoid(f, args.a, args.b, args.n), None
    else:
        if args.seed is None:
            raise _UsageError("--seed is required for Monte Carlo integration")
        value, err = quad.monte_carlo(f, args.a, args.b, args.n, RandomSource(args.seed))
    return ResultTable(
        ["quantity", "value", "error"],
        [(f"integral[{args.fn}]", value, err)],
        note=f"{args.method} rule on [{args.a}, {args.b}]",
    )


def _cmd_sphere(args) -> ResultTable:
    if args.what == "volume":
        return ResultTable(
            ["quantity", "value", "error"],
            [(f"volume[{args.dim}]", quad.sphere_volume(args.dim), None)],
            note="unit-ball volume closed form",
        )
    if args.what == "area":
        return ResultTable(
            ["quantity", "value", "error"],
            [(f"area[{args.dim}]", quad.sphere_area(args.dim), None)],
            note="unit-sphere area closed form",
        )
    if not args.key:
        raise _UsageError("--key is required for sphere moments")
    exponents = tuple(int(v) for v in args.key.split(","))
    if len(exponents) != args.dim:
        raise _UsageError("--key length must equal --dim")
    key = quad.SphereMomentKey(exponents, field="complex" if args.complex else "real")
    return ResultTable(
        ["quantity", "value", "error"],
        [(f"moment{exponents}", quad.sphere_moment(key), None)],
        note="polynomial sphere moment closed form",
    )


def _cmd_law(args) -> ResultTable:
    name = args.name
    K = args.moments
    note = f"moments of the {name} law"
    if name == "bernoulli":
        law = prob.bernoulli_law(args.x)
        ms = prob.moments(law, K)
    elif name == "binomial":
        law = prob.binomial_law(args.x, args.count)
        ms = prob.moments(law, K)
    elif name == "poisson":
        ms = [prob.poisson_moment(args.t, k) if k <= 12 else None for k in range(K + 1)]
    elif name == "gauss":
        ms = [prob.gaussian_moment(args.t, k) for k in range(K + 1)]
    elif name == "cgauss":
        ms = [prob.complex_gaussian_moment(args.t, "ob" * k) for k in range(K + 1)]
        note = "complex normal moments of the uniform word (ob)^k"
    else:
        law = prob.BUILTIN_CONTINUOUS_LAWS[name]()
        ms = prob.moments(law, K)
    rows = [(k, m) for k, m in enumerate(ms)]
    return ResultTable(["order", "moment"], rows, note=note)


def _cmd_stieltjes(args) -> ResultTable:
    xs = _parse_grid(args.x)
    rows = [(x, prob.stieltjes_density(args.law, x, args.t)) for x in xs]
    return ResultTable(
        ["x", "density"], rows, note=f"pointwise inversion at height t={args.t}"
    )


def _cmd_snchi(args) -> ResultTable:
    rng = RandomSource(args.seed) if args.seed is not None else None
    if args.n > 9 and rng is None:
        raise _UsageError("--seed is required for sampled permutation statistics (n > 9)")
    result = prob.sn_fixed_point_law(args.n, args.t, rng=rng)
    rows = [(int(loc), mass) for loc, mass in result.law.atoms]
    mode = "exact enumeration" if result.exact else f"{result.samples} seeded samples"
    return ResultTable(["fixed_points", "probability"], rows, note=mode)


def _cmd_critical(args) -> ResultTable:
    f, dim = _FIELDS[args.fn]
    x = _parse_floats(args.x)
    if len(x) != dim:
        raise _UsageError(f"--x needs {dim} coordinates for {args.fn}")
    report = diffcalc.classify_critical(f, x)
    rows = [
        ("classification", report.classification),
        ("gradient_norm", report.gradient_norm),
    ]
    rows += [(f"eigenvalue_{i}", v) for i, v in enumerate(report.eigenvalues)]
    return ResultTable(["quantity", "value"], rows, note=f"critical-point report for {args.fn}")


def _cmd_harmonic(args) -> ResultTable:
    f, dim = _FIELDS[args.fn]
    rng = np.random.Generator(np.random.Philox(args.seed if args.seed is not None else 0))
    pts = 0.4 + rng.uniform(0.0, 1.0, size=(args.samples, dim))
    rows = []
    for p in pts:
        rows.append(tuple(float(v) for v in p) + (diffcalc.laplacian(f, p),))
    cols = [f"x{i+1}" for i in range(dim)] + ["laplacian"]
    return ResultTable(cols, rows, note=f"laplacian residuals of {args.fn}")


def _cmd_orbit(args) -> ResultTable:
    s0 = dynamics.OrbitState(args.r0, 0.0, args.vr0, args.vt0, args.K)
    traj = dynamics.kepler_integrate(s0, args.T, args.dt)
    c, eps, delta, residual = dynamics.conic_fit(traj)
    rows = []
    for p in traj:
        point_res = abs(p.x**2 + p.y**2 - (eps * p.x + delta * p.y - c) ** 2)
        rows.append((p.time, p.x, p.y, p.angular_momentum, point_res))
    return ResultTable(
        ["t", "x", "y", "Jz", "conic_residual"],
        rows,
        note=f"fitted conic c={c:.6g} eps={eps:.6g} delta={delta:.6g}",
    )


def _cmd_wave(args) -> ResultTable:
    g = _PROFILES[args.profile](args.a, args.b)
    zero = lambda x: 0.0
    rows = []
    times = np.linspace(0.0, args.t, args.frames + 1)[1:]
    for frame, t in enumerate(times):
        grid = dynamics.simulate_wave(g, zero, args.v, args.a, args.b, args.dx, args.cfl, float(t))
        for x, u in zip(grid.x, grid.values):
            rows.append((frame, grid.time, float(x), float(u)))
    return ResultTable(["frame", "t", "x", "u"], rows, note=f"{args.profile} pulse, leapfrog lattice")


def _cmd_heat(args) -> ResultTable:
    g = _PROFILES[args.profile](args.a, args.b)
    rows = []
    times = np.linspace(0.0, args.t, args.frames + 1)[1:]
    for frame, t in enumerate(times):
        grid = dynamics.simulate_heat(g, args.alpha, args.a, args.b, args.dx, args.cfl, float(t))
        for x, u in zip(grid.x, grid.values):
            rows.append((frame, grid.time, float(x), float(u)))
    return ResultTable(["frame", "t", "x", "u"], rows, note=f"{args.profile} profile, forward-Euler lattice")


def _cmd_flux(args) -> ResultTable:
    with open(args.charges, newline="") as fh:
        raw = [row for row in csv.reader(fh) if row and not row[0].startswith("#")]
    if raw and raw[0][0].strip().lower() == "q":
        raw = raw[1:]
    charges = tuple(
        (float(r[0]), (float(r[1]), float(r[2]), float(r[3]))) for r in raw
    )
    cfg = dynamics.ChargeConfig(charges=charges, k=args.k)
    center = tuple(_parse_floats(args.center))
    flux = dynamics.flux_through_sphere(cfg, center, args.radius, order=args.order)
    enclosed = cfg.enclosed(center, args.radius)
    rows = [
        ("flux", flux),
        ("enclosed_charge", enclosed),
        ("enclosed_over_eps0", enclosed / cfg.epsilon0),
    ]
    return ResultTable(["quantity", "value"], rows, note="product-quadrature flux through a sphere")


def _cmd_hydrogen(args) -> ResultTable:
    if args.hydrogen_cmd == "lines":
        rows = hydrogen.spectral_series(args.series, args.upto)
        return ResultTable(
            ["n1", "n2", "lambda_nm"],
            [tuple(r) for r in rows],
            note=f"{args.series} series, standard air above 200 nm; last row is the limit",
        )
    if args.hydrogen_cmd == "energy":
        e = hydrogen.bohr_energy(args.n)
        return ResultTable(
            ["n", "energy_joules", "energy_ev"],
            [(args.n, e.joules, e.ev)],
            note="bound-state energy",
        )
    rmax, steps = args.grid.split(",")
    rmax, steps = float(rmax), int(steps)
    qn = hydrogen.QuantumNumbers(args.n, args.l, args.m)
    phi = hydrogen.wavefunction(qn)
    s_fixed, t_fixed = math.pi / 2.0, 0.0
    rows = []
    for r in np.linspace(rmax / steps, rmax, steps):
        v = phi(float(r), s_fixed, t_fixed)
        rows.append((float(r), s_fixed, t_fixed, v.real, v.imag, abs(v) ** 2))
    return ResultTable(
        ["r", "s", "t", "re", "im", "density"],
        rows,
        note=f"radial profile of |{qn.n},{qn.l},{qn.m}> at s=pi/2, t=0 (dimensionless a=1)",
    )


# ------------------------------------------------------------------ parser


def _build_parser() -> _Parser:
    parser = _Parser(prog="calclab", description=__doc__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["csv", "json"], default=None)
    common.add_argument("--digits", type=int, default=None, help="significant digits for floats")
    common.add_argument("--output", default=None, help="output path (default: stdout)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("sequence", help="exact combinatorial sequences")
    p.add_argument("--kind", required=True, choices=["factorial", "catalan", "central", "middle", "bell", "bernoulli"])
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn_impl=_cmd_sequence)

    p = add_parser("constants", help="classical constants with error bounds")
    p.add_argument("--which", required=True, choices=["e", "pi", "basel"])
    p.add_argument("--terms", type=int, required=True)
    p.set_defaults(fn_impl=_cmd_constants)

    p = add_parser("roots", help="all roots of a complex polynomial")
    p.add_argument("--coeffs", required=True, help="c0,c1,... ascending, entries like 1+2i")
    p.set_defaults(fn_impl=_cmd_roots)

    p = add_parser("eig", help="symmetric eigendecomposition from a CSV matrix")
    p.add_argument("--matrix", required=True)
    p.set_defaults(fn_impl=_cmd_eig)

    p = add_parser("integrate", help="one-dimensional quadrature")
    p.add_argument("--method", required=True, choices=["riemann", "trapezoid", "mc"])
    p.add_argument("--fn", required=True, choices=sorted(_INTEGRANDS))
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn_impl=_cmd_integrate)

    p = add_parser("sphere", help="sphere volumes, areas and moments")
    p.add_argument("--what", required=True, choices=["volume", "area", "moment"])
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--key", default=None, help="k1,k2,... exponents")
    p.add_argument("--complex", action="store_true")
    p.set_defaults(fn_impl=_cmd_sphere)

    p = add_parser("law", help="moment sequences of the builtin laws")
    p.add_argument("--name", required=True, choices=["bernoulli", "binomial", "poisson", "gauss", "cgauss", "semicircle", "mp", "arcsine", "marcsine"])
    p.add_argument("--moments", type=int, required=True)
    p.add_argument("--x", type=float, default=0.5, help="coin bias for bernoulli/binomial")
    p.add_argument("--count", type=int, default=10, help="binomial trial count")
    p.add_argument("--t", type=float, default=1.0, help="semigroup parameter for poisson/gauss/cgauss")
    p.set_defaults(fn_impl=_cmd_law)

    p = add_parser("stieltjes", help="pointwise density recovery")
    p.add_argument("--law", required=True, choices=["semicircle", "mp", "arcsine", "marcsine"])
    p.add_argument("--x", required=True, help="comma list or start:stop:count")
    p.add_argument("--t", type=float, required=True)
    p.set_defaults(fn_impl=_cmd_stieltjes)

    p = add_parser("snchi", help="fixed-point law of random permutations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn_impl=_cmd_snchi)

    p = add_parser("critical", help="critical-point classification")
    p.add_argument("--fn", required=True, choices=sorted(_FIELDS))
    p.add_argument("--x", required=True, help="x1,...,xN")
    p.set_defaults(fn_impl=_cmd_critical)

    p = add_parser("harmonic", help="laplacian residual samples")
    p.add_argument("--fn", required=True, choices=sorted(_FIELDS))
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(fn_impl=_cmd_harmonic)

    p = add_parser("orbit", help="two-body trajectory with conservation columns")
    p.add_argument("--r0", type=float, required=True)
    p.add_argument("--vt0", type=float, required=True)
    p.add_argument("--vr0", type=float, default=0.0)
    p.add_argument("--K", type=float, required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.set_defaults(fn_impl=_cmd_orbit)

    p = add_parser("wave", help="leapfrog wave lattice frames")
    p.add_argument("--profile", required=True, choices=sorted(_PROFILES))
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=20.0)
    p.add_argument("--dx", type=float, default=0.05)
    p.add_argument("--cfl", type=float, default=0.5)
    p.add_argument("--v", type=float, default=1.0)
    p.add_argument("--t", type=float, default=5.0)
    p.add_argument("--frames", type=int, default=5)
    p.set_defaults(fn_impl=_cmd_wave)

    p = add_parser("heat", help="forward-Euler heat lattice frames")
    p.add_argument("--profile", required=True, choices=sorted(_PROFILES))
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=10.0)
    p.add_argument("--dx", type=float, default=0.05)
    p.add_argument("--cfl", type=float, default=0.25)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--t", type=float, default=0.5)
    p.add_argument("--frames", type=int, default=5)
    p.set_defaults(fn_impl=_cmd_heat)

    p = add_parser("flux", help="electric flux through a sphere")
    p.add_argument("--charges", required=True, help="CSV file with rows q,x,y,z")
    p.add_argument("--center", required=True, help="x,y,z")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--order", type=int, default=64)
    p.add_argument("--k", type=float, default=1.0, help="Coulomb constant")
    p.set_defaults(fn_impl=_cmd_flux)

    p = add_parser("hydrogen", help="spectral lines, energies, wavefunctions")
    hsub = p.add_subparsers(dest="hydrogen_cmd", required=True, parser_class=_Parser)
    ph = hsub.add_parser("lines", parents=[common])
    ph.add_argument("--series", required=True, choices=sorted(hydrogen.SPECTRAL_SERIES_NAMES))
    ph.add_argument("--upto", type=int, required=True)
    ph.set_defaults(fn_impl=_cmd_hydrogen)
    ph = hsub.add_parser("energy", parents=[common])
    ph.add_argument("--n", type=int, required=True)
    ph.set_defaults(fn_impl=_cmd_hydrogen)
    ph = hsub.add_parser("wavefunction", parents=[common])
    ph.add_argument("--n", type=int, required=True)
    ph.add_argument("--l", type=int, required=True)
    ph.add_argument("--m", type=int, required=True)
    ph.add_argument("--grid", required=True, help="rmax,steps")
    ph.set_defaults(fn_impl=_cmd_hydrogen)

    return parser


def run(argv: Sequence[str]) -> ResultTable:
    """Parse argv and execute the subcommand, returning the result table."""
    args = _build_parser().parse_args(argv)
    return args.fn_impl(args)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = _build_parser()
        args = parser.parse_args(argv)
        table = args.fn_impl(args)
    except _UsageError as exc:
        print(f"calclab: usage error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"calclab: {exc}", file=sys.stderr)
        return 2
    fmt = args.format or os.environ.get("CALCLAB_FORMAT", "csv")
    if fmt not in ("csv", "json"):
        print(f"calclab: usage error: bad CALCLAB_FORMAT {fmt!r}", file=sys.stderr)
        return 1
    buffer = io.StringIO()
    emit(table, fmt, buffer, digits=args.digits)
    text = buffer.getvalue()
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
