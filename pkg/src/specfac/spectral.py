"""A_alpha matrices, a Jacobi eigensolver, and equitable-partition quotients.

The eigensolver is cyclic Jacobi with round-robin (tournament) pair ordering:
each round rotates ``dim // 2`` disjoint index pairs at once, so one sweep is
``dim - 1`` rounds of dense matrix products.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from specfac.config import DEFAULT, Tolerances
from specfac.graph import Graph, VertexSet, members, popcount
from specfac.poly import char_poly_small

log = logging.getLogger(__name__)


class AlphaRangeError(ValueError):
    pass


class PartitionError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


def _check_alpha(alpha: float) -> None:
    if not 0.0 <= alpha < 1.0:
        raise AlphaRangeError(f"alpha must lie in [0, 1), got {alpha}")


def a_alpha(g: Graph, alpha: float) -> np.ndarray:
    """alpha * D(G) + (1 - alpha) * A(G) as a dense symmetric array."""
    _check_alpha(alpha)
    m = np.zeros((g.n, g.n))
    off = 1.0 - alpha
    for u, v in g.edges():
        m[u, v] = off
        m[v, u] = off
    m[np.diag_indices(g.n)] = [alpha * d for d in g.degrees()]
    return m


def adjacency(g: Graph) -> np.ndarray:
    return a_alpha(g, 0.0)


def signless_laplacian(g: Graph) -> np.ndarray:
    m = adjacency(g)
    m[np.diag_indices(g.n)] = g.degrees()
    return m


def _round_robin(dim: int) -> list[list[tuple[int, int]]]:
    """Tournament schedule: dim-1 rounds (dim even) covering every pair once."""
    players = list(range(dim)) + ([-1] if dim % 2 else [])
    k = len(players)
    rounds = []
    for _ in range(k - 1):
        pairs = []
        for i in range(k // 2):
            p, q = players[i], players[k - 1 - i]
            if p >= 0 and q >= 0:
                pairs.append((min(p, q), max(p, q)))
        rounds.append(pairs)
        players = [players[0], players[-1], *players[1:-1]]
    return rounds


def jacobi_eigh(m: np.ndarray, tol: Tolerances = DEFAULT) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and eigenvectors (columns) of a real symmetric matrix."""
    a = np.array(m, dtype=float, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("square matrix required")
    dim = a.shape[0]
    if dim == 0:
        return np.zeros(0), np.zeros((0, 0))
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric")
    v = np.eye(dim)
    fro = np.linalg.norm(a)
    target = tol.jacobi_rel * fro
    schedule = _round_robin(dim)
    for sweep in range(tol.jacobi_max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= target:
            break
        for pairs in schedule:
            if not pairs:
                continue
            p = np.array([pq[0] for pq in pairs])
            q = np.array([pq[1] for pq in pairs])
            apq = a[p, q]
            active = apq != 0.0
            if not active.any():
                continue
            p, q, apq = p[active], q[active], apq[active]
            theta = (a[q, q] - a[p, p]) / (2.0 * apq)
            big = np.abs(theta) > 1e150
            safe = np.where(big, 1.0, theta)
            t = np.sign(safe) / (np.abs(safe) + np.sqrt(safe * safe + 1.0))
            # For huge theta, t ~ 1 / (2 theta).
            t = np.where(big, 0.5 / np.where(big, theta, 1.0), t)
            t[theta == 0.0] = 1.0
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rot = np.eye(dim)
            rot[p, p] = c
            rot[q, q] = c
            rot[p, q] = s
            rot[q, p] = -s
            a = rot.T @ a @ rot
            a = 0.5 * (a + a.T)
            v = v @ rot
    else:
        raise ConvergenceError(f"Jacobi did not converge in {tol.jacobi_max_sweeps} sweeps")
    vals = np.diag(a).copy()
    order = np.argsort(-vals, kind="stable")
    return vals[order], v[:, order]


def eigenvalues(m: np.ndarray, tol: Tolerances = DEFAULT) -> list[float]:
    """All eigenvalues of a symmetric matrix, largest first."""
    vals, _ = jacobi_eigh(m, tol)
    return [float(x) for x in vals]


def spectral_radius(m: np.ndarray, tol: Tolerances = DEFAULT) -> float:
    """Largest eigenvalue of a symmetric matrix (the head of ``eigenvalues``)."""
    if np.asarray(m).shape[0] == 0:
        return 0.0
    return eigenvalues(m, tol)[0]


def rho(g: Graph, alpha: float, tol: Tolerances = DEFAULT) -> float:
    """A_alpha spectral radius of a graph."""
    return spectral_radius(a_alpha(g, alpha), tol)


# -- partitions -----------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    blocks: tuple[VertexSet, ...]

    @classmethod
    def of(cls, blocks: Sequence[Sequence[int] | VertexSet]) -> "Partition":
        out = []
        for b in blocks:
            if isinstance(b, int):
                out.append(b)
            else:
                mask = 0
                for v in b:
                    mask |= 1 << v
                out.append(mask)
        return cls(tuple(out))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(popcount(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def validate(self, g: Graph) -> None:
        seen = 0
        for i, b in enumerate(self.blocks):
            if b == 0:
                raise PartitionError(f"block {i} is empty")
            if b & seen:
                raise PartitionError(f"block {i} overlaps an earlier block")
            if b & ~g.all_vertices:
                raise PartitionError(f"block {i} has vertices outside the graph")
            seen |= b
        if seen != g.all_vertices:
            raise PartitionError("blocks do not cover every vertex")


def _neighbour_counts(g: Graph, pi: Partition) -> list[list[list[int]]]:
    """counts[i][j] = neighbour counts in block j of each vertex of block i."""
    return [
        [[popcount(g.adj[v] & bj) for v in members(bi)] for bj in pi.blocks]
        for bi in pi.blocks
    ]


def is_equitable(g: Graph, pi: Partition) -> bool:
    pi.validate(g)
    for row in _neighbour_counts(g, pi):
        for cell in row:
            if len(set(cell)) > 1:
                return False
    return True


@dataclass(frozen=True)
class QuotientMatrix:
    entries: np.ndarray
    partition: Partition
    equitable: bool

    @property
    def dim(self) -> int:
        return self.entries.shape[0]


def quotient(g: Graph, alpha: float, pi: Partition) -> QuotientMatrix:
    """Block-average row sums of A_alpha(G) with respect to ``pi``."""
    _check_alpha(alpha)
    pi.validate(g)
    r = len(pi)
    q = np.zeros((r, r))
    deg = g.degrees()
    equitable = True
    for i, bi in enumerate(pi.blocks):
        verts = members(bi)
        size = len(verts)
        for j, bj in enumerate(pi.blocks):
            counts = [popcount(g.adj[v] & bj) for v in verts]
            if len(set(counts)) > 1:
                equitable = False
            # Row sum of the (i, j) block: off-diagonal part plus the diagonal
            # degree term when the block is on the diagonal.
            total = (1.0 - alpha) * sum(counts)
            if i == j:
                total += alpha * sum(deg[v] for v in verts)
            q[i, j] = total / size
    return QuotientMatrix(q, pi, equitable)


def _power_iteration(m: np.ndarray, tol: Tolerances) -> float:
    dim = m.shape[0]
    x = np.ones(dim) / np.sqrt(dim)
    # Shift by the largest row sum keeps the matrix nonnegative-dominant and
    # avoids oscillation between +-rho on bipartite-like structure.
    shift = float(np.max(np.abs(m).sum(axis=1))) or 1.0
    b = m + shift * np.eye(dim)
    lam = 0.0
    for _ in range(tol.power_max_iter):
        y = b @ x
        norm = np.linalg.norm(y)
        if norm == 0.0:
            return 0.0
        y /= norm
        lam_new = float(y @ (b @ y))
        if abs(lam_new - lam) <= tol.power_tol * max(1.0, abs(lam_new)) and np.linalg.norm(y - x) <= 1e-10:
            return lam_new - shift
        x, lam = y, lam_new
    raise ConvergenceError("power iteration did not converge")


def quotient_largest_eig(q: QuotientMatrix, tol: Tolerances = DEFAULT) -> float:
    """Largest real eigenvalue of a quotient matrix.

    dim <= 3 goes through the closed-form characteristic polynomial; larger
    equitable quotients are symmetrised with the square roots of the block
    sizes and handed to Jacobi; anything else falls back to power iteration.
    """
    m = q.entries
    if q.dim <= 3:
        cp = char_poly_small(m.tolist())
        if isinstance(cp, float):
            return cp
        return cp.largest_real_root(tol)
    if q.equitable:
        sizes = np.sqrt(np.array(q.partition.sizes, dtype=float))
        sym = (sizes[:, None] * m) / sizes[None, :]
        sym = 0.5 * (sym + sym.T)
        return spectral_radius(sym, tol)
    log.debug("non-equitable quotient of dim %d; using power iteration", q.dim)
    return _power_iteration(m, tol)
