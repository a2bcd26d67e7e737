"""Complex polynomials and dense matrix algebra.

Polynomials carry their coefficients as plain Python numbers (ascending
order), so exact types such as ``fractions.Fraction`` survive arithmetic;
the numeric root finder converts to complex when it needs to.  Matrices are
numpy arrays.  The permutation-sum determinant and the cyclic Jacobi
eigensolver are implemented directly; the elimination paths delegate to
numpy's LU-based routines.
"""

from __future__ import annotations

import cmath
import itertools
import math
from fractions import Fraction
from typing import Sequence

import numpy as np

from .combinat import signature

__all__ = [
    "Polynomial",
    "solve_quadratic",
    "cardano",
    "resultant",
    "discriminant",
    "all_roots",
    "roots_of_unity",
    "equilateral_test",
    "determinant",
    "det_permutation_sum",
    "det_elimination",
    "inverse",
    "symmetric_eigen",
    "classify_definiteness",
    "fourier_matrix",
    "circulant",
    "circulant_diag",
    "matrix_exp",
]


class Polynomial:
    """Dense polynomial with ascending coefficients.

    Coefficients may be ints, Fractions, floats or complex; arithmetic
    preserves the type, which keeps the orthogonal-polynomial families exact.
    """

    def __init__(self, coefficients: Sequence):
        coeffs = list(coefficients)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs:
            coeffs = [0]
        self.coefficients = coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as degree 0."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def __call__(self, x):
        out = 0
        for c in reversed(self.coefficients):
            out = out * x + c
        return out

    def deriv(self) -> "Polynomial":
        if self.degree == 0:
            return Polynomial([0])
        return Polynomial([k * c for k, c in enumerate(self.coefficients)][1:])

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + [0] * (n - len(self.coefficients))
        b = other.coefficients + [0] * (n - len(other.coefficients))
        return Polynomial([x + y for x, y in zip(a, b)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + other.scale(-1)

    def scale(self, factor) -> "Polynomial":
        return Polynomial([factor * c for c in self.coefficients])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return Polynomial(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.coefficients == other.coefficients

    def __repr__(self) -> str:
        return f"Polynomial({self.coefficients})"


def solve_quadratic(a: complex, b: complex, c: complex) -> tuple[complex, complex]:
    """Both roots of ax^2 + bx + c, for complex coefficients."""
    if a == 0:
        raise ValueError("degree is not 2 (leading coefficient vanishes)")
    d = cmath.sqrt(b * b - 4 * a * c)
    # pick the sign that avoids cancellation in -b +/- d
    if (b.conjugate() * d).real > 0:
        d = -d
    x1 = (-b + d) / (2 * a)
    x2 = c / (a * x1) if x1 != 0 else (-b - d) / (2 * a)
    return x1, x2


def cardano(p: float, q: float) -> tuple[float, complex, complex]:
    """All roots of the normalized cubic x^3 + 3px + 2q.

    The radicals are cbrt(-q +/- sqrt(p^3 + q^2)); the three roots combine
    them with the cube roots of unity.  For a negative discriminant of the
    radicand the two cube roots are taken as a conjugate pair (principal
    branch), which keeps their product equal to -p; this is the branch
    convention used for the all-real-roots case.
    """
    w = cmath.exp(2j * math.pi / 3)
    d = p**3 + q**2
    if d >= 0:
        sq = math.sqrt(d)
        u = _real_cbrt(-q + sq)
        v = _real_cbrt(-q - sq)
        roots = [u + v, w * u + w * w * v, w * w * u + w * v]
        return roots[0].real if isinstance(roots[0], complex) else roots[0], roots[1], roots[2]
    sq = math.sqrt(-d)
    u = (complex(-q, sq)) ** (1.0 / 3.0)
    v = u.conjugate()
    roots = [(u + v).real, w * u + w * w * v, w * w * u + w * v]
    return roots[0], roots[1], roots[2]


def _real_cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1.0 / 3.0), x)


def _sylvester(P: Polynomial, Q: Polynomial):
    k, l = P.degree, Q.degree
    n = k + l
    p = list(reversed(P.coefficients))
    q = list(reversed(Q.coefficients))
    rows = []
    for i in range(l):
        rows.append([0] * i + p + [0] * (l - 1 - i))
    for i in range(k):
        rows.append([0] * i + q + [0] * (k - 1 - i))
    return rows, n


def _is_exact(values) -> bool:
    return all(isinstance(v, (int, Fraction)) for v in values)


def _det_exact(rows) -> Fraction:
    """Fraction-based Gaussian elimination, exact for int/Fraction entries."""
    n = len(rows)
    a = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor:
                for c in range(col, n):
                    a[r][c] -= factor * a[col][c]
    return det


def resultant(P: Polynomial, Q: Polynomial) -> complex:
    """Resultant via the Sylvester determinant.

    Vanishes exactly when P and Q share a root.  Integer or Fraction
    coefficients are eliminated exactly; otherwise LU in floats.
    """
    if P.is_zero() or Q.is_zero():
        raise ValueError("resultant of the zero polynomial is undefined")
    if P.degree == 0 or Q.degree == 0:
        # deg-0 convention: Res(c, Q) = c^deg(Q)
        if P.degree == 0:
            return P.coefficients[0] ** Q.degree
        return Q.coefficients[0] ** P.degree
    rows, n = _sylvester(P, Q)
    if _is_exact(P.coefficients) and _is_exact(Q.coefficients):
        value = _det_exact(rows)
        return int(value) if value.denominator == 1 else value
    return complex(np.linalg.det(np.array(rows, dtype=complex)))


def discriminant(P: Polynomial) -> complex:
    """Discriminant (-1)^(N(N-1)/2) Res(P, P') / leading coefficient."""
    n = P.degree
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    res = resultant(P, P.deriv())
    lead = P.coefficients[-1]
    if isinstance(res, (int, Fraction)) and isinstance(lead, (int, Fraction)):
        value = Fraction(res) / Fraction(lead) * sign
        return int(value) if value.denominator == 1 else value
    return sign * complex(res) / complex(lead)


def all_roots(P: Polynomial, tol: float = 1e-12, max_iter: int = 1000) -> list[complex]:
    """All deg(P) roots, by simultaneous Durand-Kerner iteration.

    Start points are roots of unity scaled to 1 + max |c_k/c_n| and rotated
    by 0.4 radians to break symmetric stagnation.  Roots closer than
    1e3 * tol * scale are merged (reported with multiplicity, as copies of
    their cluster mean).
    """
    n = P.degree
    if n < 1:
        raise ValueError("need degree >= 1")
    coeffs = [complex(c) for c in P.coefficients]
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]

    def peval(x: complex) -> complex:
        out = 0j
        for c in reversed(monic):
            out = out * x + c
        return out

    radius = 1.0 + max(abs(c) for c in monic[:-1]) if n >= 1 else 1.0
    xs = [
        radius * cmath.exp(1j * (0.4 + 2 * math.pi * k / n)) for k in range(n)
    ]
    scale = max(1.0, radius)
    for _ in range(max_iter):
        shift = 0.0
        for i in range(n):
            denom = 1.0 + 0j
            for j in range(n):
                if j != i:
                    denom *= xs[i] - xs[j]
            if denom == 0:
                denom = 1e-300
            delta = peval(xs[i]) / denom
            xs[i] -= delta
            shift = max(shift, abs(delta))
        if shift <= tol * scale:
            break
    else:
        raise ArithmeticError("root iteration did not converge")
    return _cluster_roots(xs, 1e3 * tol * scale)


def _cluster_roots(roots: list[complex], merge_tol: float) -> list[complex]:
    out: list[list[complex]] = []
    for r in sorted(roots, key=lambda z: (z.real, z.imag)):
        for cluster in out:
            mean = sum(cluster) / len(cluster)
            if abs(r - mean) <= merge_tol:
                cluster.append(r)
                break
        else:
            out.append([r])
    merged = []
    for cluster in out:
        mean = sum(cluster) / len(cluster)
        merged.extend([mean] * len(cluster))
    return merged


def roots_of_unity(N: int) -> list[complex]:
    """The N-th roots of unity, counterclockwise from 1."""
    if N < 1:
        raise ValueError("need N >= 1")
    return [cmath.exp(2j * math.pi * k / N) for k in range(N)]


def equilateral_test(I: complex, J: complex, K: complex, tol: float = 1e-9) -> bool:
    """True when the counterclockwise triangle IJK is equilateral.

    Tests |I + wJ + w^2 K| <= tol * scale with w = exp(2 pi i/3).
    """
    w = cmath.exp(2j * math.pi / 3)
    value = I + w * J + w * w * K
    scale = max(abs(I), abs(J), abs(K), 1.0)
    return abs(value) <= tol * scale


def det_permutation_sum(A: np.ndarray) -> complex:
    """Determinant as the signed sum over all permutations (use for N <= 6)."""
    A = np.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    total = 0
    for perm in itertools.permutations(range(1, n + 1)):
        term = signature(perm)
        for i in range(n):
            term = term * A[i, perm[i] - 1]
        total += term
    return total


def det_elimination(A: np.ndarray) -> complex:
    A = np.asarray(A)
    return np.linalg.det(A)


def determinant(A: np.ndarray) -> complex:
    """Determinant: permutation sum for N <= 6, LU elimination beyond."""
    A = np.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    if n <= 6:
        return det_permutation_sum(A)
    return det_elimination(A)


def _adjugate_small(A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    cof = np.empty_like(A)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(A, i, axis=0), j, axis=1)
            cof[i, j] = (-1) ** (i + j) * (minor[0, 0] if n == 2 else det_permutation_sum(minor))
    return cof.T


def inverse(A: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Matrix inverse: adjugate over determinant for N <= 3, LU beyond.

    Raises on (numerically) singular input.
    """
    A = np.asarray(A, dtype=complex if np.iscomplexobj(A) else float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    scale = float(np.abs(A).max()) or 1.0
    det = determinant(A) if n <= 6 else det_elimination(A)
    if abs(det) <= tol * scale**n:
        raise ValueError("matrix is singular to the working tolerance")
    if n == 1:
        return np.array([[1.0 / A[0, 0]]])
    if n <= 3:
        return _adjugate_small(A) / det
    return np.linalg.inv(A)


def symmetric_eigen(A: np.ndarray, tol: float = 1e-12) -> tuple[np.ndarray, np.ndarray]:
    """Diagonalize a real symmetric matrix by cyclic Jacobi rotations.

    Returns (U, d) with A = U diag(d) U^T, U orthogonal, and d sorted in
    descending order.  Sweeps run row by row until the off-diagonal
    Frobenius norm drops below tol * ||A||_F.
    """
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    norm = float(np.linalg.norm(A)) or 1.0
    if float(np.abs(A - A.T).max()) > tol * norm + 1e-300:
        raise ValueError("matrix is not symmetric to the working tolerance")
    work = 0.5 * (A + A.T)
    U = np.eye(n)
    for _ in range(100):
        off = math.sqrt(max(0.0, float(np.sum(work**2) - np.sum(np.diag(work) ** 2))))
        if off <= tol * norm:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = work[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = 0.5 * (work[q, q] - work[p, p]) / apq
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                work = rot.T @ work @ rot
                U = U @ rot
    else:
        raise ArithmeticError("Jacobi sweeps did not converge")
    d = np.diag(work).copy()
    order = np.argsort(-d)
    return U[:, order], d[order]


def classify_definiteness(A: np.ndarray, tol: float = 1e-10) -> str:
    """Sign pattern of the eigenvalues of a symmetric matrix.

    Eigenvalues within +/- tol * ||A|| of zero count as zero.  Returns one
    of: pos_def, pos_semi, neg_def, neg_semi, indefinite, zero.
    """
    A = np.asarray(A, dtype=float)
    _, d = symmetric_eigen(A, tol=max(tol, 1e-12))
    band = tol * (float(np.linalg.norm(A)) or 1.0)
    pos = int(np.sum(d > band))
    neg = int(np.sum(d < -band))
    zero = len(d) - pos - neg
    if pos == 0 and neg == 0:
        return "zero"
    if neg == 0:
        return "pos_def" if zero == 0 else "pos_semi"
    if pos == 0:
        return "neg_def" if zero == 0 else "neg_semi"
    return "indefinite"


def fourier_matrix(N: int) -> np.ndarray:
    """The N x N matrix (w^{ij}) with w = exp(2 pi i/N), indices from 0."""
    if N < 1:
        raise ValueError("need N >= 1")
    idx = np.arange(N)
    return np.exp(2j * math.pi * np.outer(idx, idx) / N)


def circulant(xi: Sequence[complex]) -> np.ndarray:
    """The circulant matrix A_ij = xi_{j-i mod N}."""
    xi = np.asarray(xi, dtype=complex)
    N = len(xi)
    i, j = np.meshgrid(np.arange(N), np.arange(N), indexing="ij")
    return xi[(j - i) % N]


def circulant_diag(xi: Sequence[complex]) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues of the circulant of xi, plus its Fourier reconstruction.

    The eigenvalues are F xi, and the reconstruction F diag(eig) F^*/N
    should reproduce the circulant matrix.
    """
    xi = np.asarray(xi, dtype=complex)
    N = len(xi)
    F = fourier_matrix(N)
    eig = F @ xi
    reconstruction = (F * eig) @ F.conj().T / N
    return eig, reconstruction


def matrix_exp(A: np.ndarray, t: float = 1.0) -> np.ndarray:
    """exp(A t) by scaling-and-squaring of the Taylor series."""
    A = np.asarray(A, dtype=complex if np.iscomplexobj(A) else float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("matrix must be square")
    B = A * t
    norm = float(np.linalg.norm(B, ord=np.inf))
    s = max(0, int(math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0)
    C = B / (2.0**s)
    out = np.eye(n, dtype=C.dtype)
    term = np.eye(n, dtype=C.dtype)
    for k in range(1, 60):
        term = term @ C / k
        out = out + term
        if float(np.linalg.norm(term, ord=np.inf)) < 1e-18 * float(
            np.linalg.norm(out, ord=np.inf)
        ):
            break
    for _ in range(s):
        out = out @ out
    return out
