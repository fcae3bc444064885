"""Adjacency spectra, degree-based lower bounds and quotient matrices.

``spectral_radius`` runs power iteration on A + I, which keeps bipartite
graphs from oscillating between +rho and -rho, and falls back to the Jacobi
solver in ``full_spectrum`` when it does not settle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph, GraphError, find_clique, iter_bits

POWER_RTOL = 1e-13
POWER_MAX_ITER = 10**6
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]  # nonincreasing
    method: str  # "power_iteration" or "full_solver"
    residual: float

    @property
    def rho(self) -> float:
        return self.eigenvalues[0]

    @property
    def smallest(self) -> float:
        return self.eigenvalues[-1]


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for v, row in enumerate(g.adj):
        for u in iter_bits(row):
            a[v, u] = 1.0
    return a


def _round_robin(n: int) -> list[list[tuple[int, int]]]:
    """Rounds of disjoint index pairs covering every pair once (circle method)."""
    players = list(range(n + (n % 2)))
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        pairs = []
        for i in range(size // 2):
            p, q = players[i], players[size - 1 - i]
            if p < n and q < n:
                pairs.append((min(p, q), max(p, q)))
        rounds.append(pairs)
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def jacobi_eigenvalues(
    a: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS
) -> tuple[np.ndarray, float]:
    """Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.

    Each round applies a set of disjoint rotations at once, so a sweep is
    n-1 (or n) matrix products.  Stops when the off-diagonal Frobenius norm
    falls below ``tol``.  Returns the eigenvalues in nonincreasing order and
    the final off-diagonal norm.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("matrix must be square")
    rounds = [tuple(np.array(x) for x in zip(*pairs)) for pairs in _round_robin(n) if pairs]

    def off(m: np.ndarray) -> float:
        return float(np.linalg.norm(m - np.diag(np.diag(m))))

    norm = off(a)
    for _ in range(max_sweeps):
        if norm < tol:
            return np.sort(np.diag(a))[::-1].copy(), norm
        for ps, qs in rounds:
            apq = a[ps, qs]
            live = apq != 0.0
            if not live.any():
                continue
            ps, qs, apq = ps[live], qs[live], apq[live]
            with np.errstate(over="ignore", divide="ignore"):
                theta = (a[qs, qs] - a[ps, ps]) / (2.0 * apq)
                sign = np.where(theta >= 0.0, 1.0, -1.0)
                t = np.where(
                    np.abs(theta) > 1e150,
                    0.5 / theta,
                    sign / (np.abs(theta) + np.sqrt(theta * theta + 1.0)),
                )
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rot = np.eye(n)
            rot[ps, ps] = c
            rot[qs, qs] = c
            rot[ps, qs] = s
            rot[qs, ps] = -s
            a = rot.T @ a @ rot
            a = 0.5 * (a + a.T)
        norm = off(a)
    if norm < tol:
        return np.sort(np.diag(a))[::-1].copy(), norm
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off-norm {norm:.3g})")


def full_spectrum(g: Graph) -> Spectrum:
    eigs, residual = jacobi_eigenvalues(adjacency_matrix(g))
    return Spectrum(tuple(float(x) for x in eigs), "full_solver", residual)


def power_iteration(
    a: np.ndarray, rtol: float = POWER_RTOL, max_iter: int = POWER_MAX_ITER
) -> tuple[float, float, int]:
    """Largest eigenvalue of a nonnegative symmetric matrix.

    Iterates on ``a + I`` from the all-ones vector.  Returns
    ``(eigenvalue, residual, iterations)``.
    """
    n = a.shape[0]
    b = a + np.eye(n)
    x = np.full(n, 1.0 / math.sqrt(n))
    prev = None
    for it in range(1, max_iter + 1):
        y = b @ x
        lam = float(x @ y)
        res = float(np.linalg.norm(y - lam * x))
        if prev is not None and abs(lam - prev) <= rtol * abs(lam) and res <= 1e-7 * lam:
            return lam - 1.0, res, it
        prev = lam
        x = y / np.linalg.norm(y)
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def spectral_radius(g: Graph) -> float:
    a = adjacency_matrix(g)
    try:
        rho, _, _ = power_iteration(a)
    except ConvergenceError:
        return full_spectrum(g).rho
    return rho


def rayleigh_degree_bound(g: Graph) -> float:
    """sqrt(sum d(v)^2 / n): the Rayleigh quotient of A^2 at the all-ones vector, square-rooted."""
    return math.sqrt(g.sum_degree_squares() / g.n)


# -- quotient matrices --------------------------------------------------------


@dataclass(frozen=True)
class QuotientMatrix:
    cells: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[Fraction, ...], ...]
    equitable: bool

    @property
    def s(self) -> int:
        return len(self.cells)

    def as_array(self) -> np.ndarray:
        return np.array([[float(q) for q in row] for row in self.entries])


def quotient_matrix(g: Graph, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    cells = tuple(tuple(sorted(c)) for c in partition)
    seen: set[int] = set()
    for c in cells:
        if not c:
            raise GraphError("partition cells must be nonempty")
        if seen.intersection(c):
            raise GraphError("partition cells overlap")
        seen.update(c)
    if seen != set(range(g.n)):
        raise GraphError("partition must cover every vertex exactly once")
    masks = [sum(1 << v for v in c) for c in cells]
    entries = []
    equitable = True
    for ci in cells:
        row = []
        for mj in masks:
            counts = [(g.adj[v] & mj).bit_count() for v in ci]
            equitable &= len(set(counts)) == 1
            row.append(Fraction(sum(counts), len(ci)))
        entries.append(tuple(row))
    return QuotientMatrix(cells, tuple(entries), equitable)


def quotient_spectral_radius(q: QuotientMatrix) -> float:
    if q.s == 1:
        return float(q.entries[0][0])
    if q.s == 2:
        (a, b), (c, d) = q.entries
        disc = (a - d) ** 2 + 4 * b * c
        return (float(a + d) + math.sqrt(disc)) / 2.0
    return float(np.max(np.linalg.eigvals(q.as_array()).real))


def rho_s_formula(n: int, r: int) -> float:
    """Closed-form spectral radius of S_{n,r}: the larger root of x^2 - (r-2)x - (r-1)(n-r+1)."""
    if not 2 <= r < n:
        raise GraphError(f"need 2 <= r < n, got n={n}, r={r}")
    return (r - 2 + math.sqrt((r - 2) ** 2 + 4 * (r - 1) * (n - r + 1))) / 2.0


@dataclass(frozen=True)
class NikiforovResult:
    smallest: float
    bound: float

    @property
    def holds(self) -> bool:
        return self.smallest < self.bound


def nikiforov_bound(n: int, m: int, r: int) -> float:
    return -(2 ** (r + 1)) * m**r / (r * n ** (2 * r - 1))


def nikiforov_lambda_n_check(g: Graph, r: int) -> NikiforovResult:
    """Compare the least adjacency eigenvalue with -2^{r+1} m^r / (r n^{2r-1})."""
    if find_clique(g, r + 1) is not None:
        raise GraphError(f"graph contains K_{r + 1}")
    if g.m < 1:
        raise GraphError("graph has no edges")
    return NikiforovResult(full_spectrum(g).smallest, nikiforov_bound(g.n, g.m, r))
