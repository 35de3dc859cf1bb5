"""Spectra of the matrix family aD(G) + bA(G).

Matrices are plain float64 numpy arrays. The symmetric eigen-solver is a
cyclic Jacobi method; the spectral radius of a nonnegative matrix comes from
shifted power iteration and is cross-checked against the Jacobi spectrum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Sequence

import numpy as np

from .errors import ConvergenceError, DomainError, SpecmatchError
from .graph import Graph

DEFAULT_TOL = 1e-10
MAX_SWEEPS = 100
POWER_MAX_ITER = 200_000
POWER_RESTART_SEED = 0x5EED
_STALL_ITERS = 200


@dataclass(frozen=True)
class SpectralParams:
    """Coefficients of J(G:a,b) = aD(G) + bA(G), with a >= 0 and b > 0."""

    a: Real = 0
    b: Real = 1

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise DomainError(f"non-finite coefficients a={self.a}, b={self.b}")
        if self.a < 0:
            raise DomainError(f"a must be >= 0, got {self.a}")
        if self.b <= 0:
            raise DomainError(f"b must be > 0, got {self.b}")

    @classmethod
    def from_alpha(cls, alpha: Real) -> SpectralParams:
        """A_alpha = alpha*D + (1-alpha)*A for 0 <= alpha < 1.

        alpha = 1 gives the pure degree matrix, see ``degree_matrix``.
        """
        if not 0 <= alpha < 1:
            raise DomainError(f"alpha must lie in [0, 1), got {alpha}")
        return cls(alpha, 1 - alpha)


@dataclass(frozen=True)
class Spectrum:
    values: np.ndarray  # non-increasing
    vectors: np.ndarray  # column i belongs to values[i]
    residual: float


@dataclass(frozen=True)
class QuotientMatrix:
    blocks: tuple[tuple[int, ...], ...]
    entries: np.ndarray
    equitable: bool


def degree_matrix(g: Graph, scale: Real = 1) -> np.ndarray:
    """scale * D(G); with scale 1 this is A_1(G), the alpha = 1 endpoint."""
    return np.diag([float(scale) * len(r) for r in g.adj])


def adjacency_matrix(g: Graph) -> np.ndarray:
    m = np.zeros((g.n, g.n))
    for u, v in g.edges():
        m[u, v] = m[v, u] = 1.0
    return m


def build_matrix(g: Graph, p: SpectralParams) -> np.ndarray:
    """J(G:a,b) as a dense symmetric array."""
    m = float(p.b) * adjacency_matrix(g)
    m[np.diag_indices(g.n)] = [float(p.a) * len(r) for r in g.adj]
    return m


def a_alpha_matrix(g: Graph, alpha: Real) -> np.ndarray:
    if alpha == 1:
        return degree_matrix(g)
    return build_matrix(g, SpectralParams.from_alpha(alpha))


def _check_symmetric(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise DomainError("empty matrix has no spectrum")
    if not np.all(np.isfinite(m)):
        raise DomainError("matrix has non-finite entries")
    if not np.array_equal(m, m.T):
        raise DomainError("matrix is not exactly symmetric")
    return m


def _off_norm(a: list[list[float]]) -> float:
    n = len(a)
    return math.sqrt(sum(a[i][j] ** 2 for i in range(n) for j in range(n) if i != j))


def _rotate(a: list[list[float]], v: list[list[float]], p: int, q: int, c: float, s: float) -> None:
    """Apply the plane rotation (p, q) as A <- R^T A R and V <- V R."""
    ap, aq = a[p], a[q]
    for row in a:
        x, y = row[p], row[q]
        row[p] = c * x - s * y
        row[q] = s * x + c * y
    for r in range(len(a)):
        x, y = ap[r], aq[r]
        ap[r] = c * x - s * y
        aq[r] = s * x + c * y
    for row in v:
        x, y = row[p], row[q]
        row[p] = c * x - s * y
        row[q] = s * x + c * y


def _jacobi_sweeps(a: list[list[float]], v: list[list[float]], tol: float, max_sweeps: int) -> None:
    n = len(a)
    for sweep in range(max_sweeps + 1):
        off = _off_norm(a)
        if off <= tol:
            return
        if sweep == max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps", off)
        # Rutishauser: skip small entries during the first sweeps
        if sweep < 3:
            thresh = 0.2 * sum(abs(a[i][j]) for i in range(n) for j in range(i + 1, n)) / n**2
        else:
            thresh = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p][q]
                if apq == 0.0:
                    continue
                app, aqq = a[p][p], a[q][q]
                g = 100.0 * abs(apq)
                if sweep > 3 and abs(app) + g == abs(app) and abs(aqq) + g == abs(aqq):
                    a[p][q] = a[q][p] = 0.0
                    continue
                if abs(apq) <= thresh:
                    continue
                h = aqq - app
                if abs(h) + g == abs(h):
                    t = apq / h
                else:
                    theta = 0.5 * h / apq
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                _rotate(a, v, p, q, c, t * c)
                a[p][q] = a[q][p] = 0.0
                a[p][p] = app - t * apq
                a[q][q] = aqq + t * apq


def eigenvalues(m: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """All eigenpairs of a real symmetric matrix by cyclic Jacobi rotations.

    Sweeps until the off-diagonal Frobenius norm is at most ``tol``, which
    bounds the distance of every diagonal entry to a true eigenvalue.
    Deterministic: the rotation order is fixed row by row.
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    orig = _check_symmetric(m)
    n = orig.shape[0]
    a = orig.tolist()
    v = np.eye(n).tolist()
    _jacobi_sweeps(a, v, tol, max_sweeps)

    vals = np.array([a[i][i] for i in range(n)])
    vecs = np.array(v)
    order = np.argsort(-vals, kind="stable")
    vals, vecs = vals[order], vecs[:, order]
    resid = float(np.max(np.linalg.norm(orig @ vecs - vecs * vals, axis=0)))
    return Spectrum(vals, vecs, resid)


def _power_run(m: np.ndarray, x: np.ndarray, tol: float, shift: float):
    """Shifted power iteration; returns (rayleigh, residual, converged)."""
    x = x / np.linalg.norm(x)
    rho_prev = math.inf
    flat = 0
    for _ in range(POWER_MAX_ITER):
        y = m @ x
        rho = float(x @ y)
        resid = float(np.linalg.norm(y - rho * x))
        if resid <= tol:
            return rho, resid, True
        flat = flat + 1 if abs(rho - rho_prev) < 1e-2 * tol else 0
        if flat >= _STALL_ITERS:
            return rho, resid, False
        rho_prev = rho
        y += shift * x
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"power iteration hit {POWER_MAX_ITER} iterations", resid)


def spectral_radius(m: np.ndarray, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of a nonnegative symmetric matrix.

    Power iteration on M + cI (c > 0 breaks the lambda_1 / -lambda_1 tie of
    bipartite spectra) starting from the all-ones vector. If the Rayleigh
    quotient stops moving while the residual is still above ``tol`` the
    iteration restarts once from a fixed pseudorandom positive vector. The
    result must agree with the Jacobi spectrum to within 10*tol.
    """
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    m = _check_symmetric(m)
    if np.any(m < 0):
        raise DomainError("spectral_radius needs an entrywise nonnegative matrix")
    n = m.shape[0]
    upper = float(np.max(m.sum(axis=1)))
    if upper == 0.0:
        rho = 0.0
    else:
        shift = 0.25 * upper
        rho, _, ok = _power_run(m, np.ones(n), tol, shift)
        if not ok:
            start = np.random.default_rng(POWER_RESTART_SEED).random(n) + 0.5
            rho, _, _ = _power_run(m, start, tol, shift)
    top = float(eigenvalues(m, tol).values[0])
    if abs(rho - top) > 10 * tol:
        raise SpecmatchError(
            f"power iteration ({rho!r}) and Jacobi ({top!r}) disagree beyond {10 * tol:g}"
        )
    return rho


def graph_spectral_radius(g: Graph, a: Real, b: Real = 1, tol: float = DEFAULT_TOL) -> float:
    """lambda_1(aD(G) + bA(G)); b = 0 is allowed and gives a * max degree."""
    if g.n == 0:
        raise DomainError("the empty graph has no spectral radius")
    if b == 0:
        return float(a) * max(len(r) for r in g.adj)
    return spectral_radius(build_matrix(g, SpectralParams(a, b)), tol)


def _check_partition(n: int, partition: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    blocks = tuple(tuple(sorted(c)) for c in partition)
    seen: set[int] = set()
    for c in blocks:
        if not c:
            raise DomainError("partition classes must be nonempty")
        for v in c:
            if not 0 <= v < n:
                raise DomainError(f"vertex {v} out of range for n={n}")
            if v in seen:
                raise DomainError(f"vertex {v} appears in two classes")
            seen.add(v)
    if len(seen) != n:
        raise DomainError(f"partition covers {len(seen)} of {n} vertices")
    return blocks


def quotient_matrix(m: np.ndarray, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    """Average block row sums of m.

    Row sums inside a block are compared with a relative tolerance of 1e-12.
    For matrices built from a graph use ``graph_quotient_matrix``, which
    decides equitability in exact rational arithmetic.
    """
    m = _check_symmetric(m)
    blocks = _check_partition(m.shape[0], partition)
    k = len(blocks)
    entries = np.zeros((k, k))
    equitable = True
    scale = max(1.0, float(np.max(np.abs(m))) * m.shape[0])
    for i, bi in enumerate(blocks):
        for j, bj in enumerate(blocks):
            sums = m[np.ix_(bi, bj)].sum(axis=1)
            entries[i, j] = sums.mean()
            if float(np.ptp(sums)) > 1e-12 * scale:
                equitable = False
    return QuotientMatrix(blocks, entries, equitable)


def graph_quotient_matrix(
    g: Graph, p: SpectralParams, partition: Sequence[Sequence[int]]
) -> QuotientMatrix:
    """Quotient of J(G:a,b) with an exact equitability decision.

    a and b enter as exact rationals (a float is taken at its exact binary
    value), so block row sums are compared without rounding.
    """
    blocks = _check_partition(g.n, partition)
    a, b = Fraction(p.a), Fraction(p.b)
    member = {v: i for i, c in enumerate(blocks) for v in c}
    k = len(blocks)
    entries = np.zeros((k, k))
    equitable = True
    for i, bi in enumerate(blocks):
        for j in range(k):
            sums = [
                (a * len(g.adj[v]) if i == j else 0)
                + b * sum(1 for u in g.adj[v] if member[u] == j)
                for v in bi
            ]
            entries[i, j] = float(Fraction(sum(sums), len(bi)))
            if any(s != sums[0] for s in sums):
                equitable = False
    return QuotientMatrix(blocks, entries, equitable)


def _check_sorted(seq: Sequence[float], name: str) -> list[float]:
    vals = [float(x) for x in seq]
    if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
        raise DomainError(f"{name} must be non-increasing")
    return vals


def interlaces(theta: Sequence[float], eta: Sequence[float], tol: float = 1e-8) -> tuple[bool, bool]:
    """Whether eta interlaces theta, and whether the interlacing is tight.

    Interlacing: theta[i] >= eta[i] >= theta[n-m+i] for every i (0-based).
    Tight: for some split k, eta[i] == theta[i] for i < k and
    eta[i] == theta[n-m+i] for i >= k. Comparisons are within ``tol``.
    """
    th = _check_sorted(theta, "theta")
    et = _check_sorted(eta, "eta")
    n, m = len(th), len(et)
    if not n > m:
        raise DomainError(f"need len(theta) > len(eta), got {n} and {m}")
    holds = all(th[i] + tol >= et[i] >= th[n - m + i] - tol for i in range(m))
    top = [abs(th[i] - et[i]) <= tol for i in range(m)]
    bottom = [abs(th[n - m + i] - et[i]) <= tol for i in range(m)]
    tight = holds and any(all(top[:k]) and all(bottom[k:]) for k in range(m + 1))
    return holds, tight


def quotient_radius_bipartite(a: Real, r: Real, s: Real, t: Real) -> float:
    """Largest eigenvalue of [[a r/s, r/s], [r/t, a r/t]] in closed form."""
    if s <= 0 or t <= 0:
        raise DomainError(f"part sizes must be positive, got s={s}, t={t}")
    if r < 0 or a < 0:
        raise DomainError(f"need r >= 0 and a >= 0, got r={r}, a={a}")
    rs, rt = r / s, r / t
    return 0.5 * (a * (rs + rt) + math.sqrt((a * a - 1) * (rs - rt) ** 2 + (rs + rt) ** 2))


def family_quotient_radius(a: Real, delta: int, x: int, y: int) -> float:
    """Spectral radius of aD+A on a biregular bipartite graph.

    The Y side (size y) has degree ``delta``, the X side (size x) has
    degree delta*y/x.
    """
    if x <= 0 or y <= 0:
        raise DomainError(f"part sizes must be positive, got x={x}, y={y}")
    if delta < 1 or a < 0:
        raise DomainError(f"need delta >= 1 and a >= 0, got delta={delta}, a={a}")
    ratio = y / x
    return 0.5 * (
        a * delta * (ratio + 1)
        + math.sqrt((a * a - 1) * delta**2 * (ratio - 1) ** 2 + delta**2 * (ratio + 1) ** 2)
    )
