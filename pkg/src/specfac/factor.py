"""P>=2-factors and P>=2-factor covered graphs.

Two independent routes are provided for each question:

* subset criteria, scanning every S subset of V(G) with a compiled kernel
  (Las Vergnas for factors, Zhang-Zhou for coveredness);
* direct search for path covers by backtracking over the graph itself.

Any path of order >= 2 splits into pieces of order 2 and 3, so a P>=2-factor
exists iff a {P2, P3}-factor does.  For coveredness of an edge e, the path
holding e can be trimmed to a piece of order <= 4 that still contains e (the
leftover stubs on either side then have order 0 or >= 2), so it suffices to
try every path Q of order 2..4 through e and ask for a {P2, P3}-factor of
G - V(Q).
"""

from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Sequence

import numba
import numpy as np

from specfac.graph import Graph, VertexSet, is_connected, members, popcount

MAX_SCAN_ORDER = 30
MAX_SEARCH_ORDER = 16


class OrderTooLarge(ValueError):
    pass


class DisconnectedGraphError(ValueError):
    pass


class ViolationKind(str, enum.Enum):
    DEFICIENCY = "DEFICIENCY"
    NONTRIVIAL_COMPONENT = "NONTRIVIAL_COMPONENT"
    NON_INDEPENDENT_S = "NON_INDEPENDENT_S"


_KINDS = (None, ViolationKind.DEFICIENCY, ViolationKind.NONTRIVIAL_COMPONENT, ViolationKind.NON_INDEPENDENT_S)


@dataclass(frozen=True)
class Violation:
    kind: ViolationKind
    s: VertexSet
    isolated: int
    bound: int

    @property
    def size(self) -> int:
        return popcount(self.s)

    @property
    def vertices(self) -> list[int]:
        return members(self.s)

    def as_dict(self) -> dict:
        return {"kind": self.kind.value, "s": self.vertices, "isolated": self.isolated, "bound": self.bound}


Path = list[int]


def default_workers() -> int:
    env = os.environ.get("SPECFAC_THREADS")
    if env:
        return max(1, int(env))
    return 1


# -- compiled subset scans ---------------------------------------------------


@numba.njit(cache=True, inline="always")
def _popcount(x: np.int64) -> np.int64:
    x = x - ((x >> 1) & 0x5555555555555555)
    x = (x & 0x3333333333333333) + ((x >> 2) & 0x3333333333333333)
    x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0F
    return (x * 0x0101010101010101) >> 56 & 0xFF


@numba.njit(cache=True, nogil=True)
def _isolated_after(adj, n, mask):
    iso = 0
    for v in range(n):
        if (mask >> v) & 1 == 0 and adj[v] & ~mask == 0:
            iso += 1
    return iso


@numba.njit(cache=True, nogil=True)
def _deficiency_scan(adj, n, lo, hi):
    """Best (deficiency, |S|, mask, isolated) over masks in [lo, hi).

    Best means largest deficiency, then smallest |S|, then smallest mask.
    """
    best_def = -(1 << 30)
    best_size = 0
    best_mask = -1
    best_iso = 0
    for mask in range(lo, hi):
        iso = _isolated_after(adj, n, mask)
        size = _popcount(mask)
        d = iso - 2 * size
        if d > best_def or (d == best_def and size < best_size):
            best_def = d
            best_size = size
            best_mask = mask
            best_iso = iso
    return best_def, best_size, best_mask, best_iso


@numba.njit(cache=True, nogil=True)
def _covered_scan(adj, n, lo, hi):
    """First mask in [lo, hi) violating a covered-graph condition.

    Returns (mask, kind, isolated, bound); mask = -1 when none fails.
    kind: 1 deficiency, 2 nontrivial component, 3 non-independent S.
    """
    for mask in range(lo, hi):
        size = _popcount(mask)
        iso = _isolated_after(adj, n, mask)
        if iso > 2 * size:
            return mask, 1, iso, 2 * size
        if size == 0:
            continue
        # G - S has a component of order >= 2 iff some remaining vertex is not isolated.
        if iso < n - size and iso > 2 * size - 1:
            return mask, 2, iso, 2 * size - 1
        if iso > 2 * size - 2:
            for v in range(n):
                if (mask >> v) & 1 and adj[v] & mask:
                    return mask, 3, iso, 2 * size - 2
    return -1, 0, 0, 0


def _adj_array(g: Graph) -> np.ndarray:
    return np.array(g.adj, dtype=np.int64)


def _check_scan_order(g: Graph) -> None:
    if g.n > MAX_SCAN_ORDER:
        raise OrderTooLarge(f"subset scan limited to order {MAX_SCAN_ORDER}, got {g.n}")


def _shards(n: int, count: int) -> list[tuple[int, int]]:
    total = 1 << n
    count = max(1, min(count, total))
    step = -(-total // count)
    return [(lo, min(total, lo + step)) for lo in range(0, total, step)]


def _run_sharded(kernel, g: Graph, shards: int | None):
    adj = _adj_array(g)
    ranges = _shards(g.n, shards or default_workers())
    if len(ranges) == 1:
        return [kernel(adj, g.n, *ranges[0])]
    with ThreadPoolExecutor(max_workers=len(ranges)) as pool:
        return list(pool.map(lambda r: kernel(adj, g.n, r[0], r[1]), ranges))


def max_deficiency(g: Graph, shards: int | None = None) -> tuple[int, VertexSet, int]:
    """(max_S i(G-S) - 2|S|, witness S, i(G-S)) with the documented tie-break."""
    _check_scan_order(g)
    best = None
    for d, size, mask, iso in _run_sharded(_deficiency_scan, g, shards):
        key = (-d, size, mask)
        if best is None or key < best[0]:
            best = (key, int(d), int(mask), int(iso))
    _, d, mask, iso = best
    return d, mask, iso


def deficiency_check(g: Graph, shards: int | None = None) -> Violation | None:
    """None when i(G-S) <= 2|S| for every S; otherwise the worst offending S."""
    d, mask, iso = max_deficiency(g, shards)
    if d <= 0:
        return None
    return Violation(ViolationKind.DEFICIENCY, mask, iso, 2 * popcount(mask))


def is_covered_structural(g: Graph, shards: int | None = None) -> Violation | None:
    """None when every S satisfies the three covered-graph conditions.

    Otherwise the violation for the numerically smallest failing mask S.
    Within one S the conditions are tested in the order deficiency,
    nontrivial component, non-independent S.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("covered-graph criterion needs a connected graph")
    _check_scan_order(g)
    hits = [h for h in _run_sharded(_covered_scan, g, shards) if h[0] >= 0]
    if not hits:
        return None
    mask, kind, iso, bound = min(hits, key=lambda h: h[0])
    return Violation(_KINDS[kind], int(mask), int(iso), int(bound))


def check_conditions(g: Graph, s: VertexSet) -> Violation | None:
    """Evaluate the three covered-graph conditions for a single S (pure Python)."""
    size = popcount(s)
    rest = g.all_vertices & ~s
    iso = sum(1 for v in members(rest) if g.adj[v] & rest == 0)
    if iso > 2 * size:
        return Violation(ViolationKind.DEFICIENCY, s, iso, 2 * size)
    if size and iso < popcount(rest) and iso > 2 * size - 1:
        return Violation(ViolationKind.NONTRIVIAL_COMPONENT, s, iso, 2 * size - 1)
    if iso > 2 * size - 2 and any(g.adj[v] & s for v in members(s)):
        return Violation(ViolationKind.NON_INDEPENDENT_S, s, iso, 2 * size - 2)
    return None


# -- direct path-cover search ------------------------------------------------


class _CoverSearch:
    """{P2, P3}-factors of induced subgraphs G[U], memoised on U."""

    def __init__(self, g: Graph):
        self.adj = g.adj
        self.dead: set[int] = set()

    def cover(self, uncovered: int) -> list[Path] | None:
        if uncovered == 0:
            return []
        if uncovered in self.dead:
            return None
        adj = self.adj
        # Branch on the vertex with fewest available partners; fail fast on a stranded one.
        pick, pick_deg = -1, 65
        for v in members(uncovered):
            d = popcount(adj[v] & uncovered)
            if d == 0:
                self.dead.add(uncovered)
                return None
            if d < pick_deg:
                pick, pick_deg = v, d
        v = pick
        rest_v = uncovered & ~(1 << v)
        for u in members(adj[v] & rest_v):
            rest_vu = rest_v & ~(1 << u)
            sub = self.cover(rest_vu)
            if sub is not None:
                return [[v, u], *sub]
            for w in members(adj[u] & rest_vu):
                sub = self.cover(rest_vu & ~(1 << w))
                if sub is not None:
                    return [[v, u, w], *sub]
            for w in members(adj[v] & rest_vu):
                if w < u:
                    continue
                sub = self.cover(rest_vu & ~(1 << w))
                if sub is not None:
                    return [[u, v, w], *sub]
        self.dead.add(uncovered)
        return None


def _check_search_order(g: Graph, limit: int = MAX_SEARCH_ORDER) -> None:
    if g.n > limit:
        raise OrderTooLarge(f"path-cover search limited to order {limit}, got {g.n}")


def find_p2_factor(g: Graph) -> list[Path] | None:
    """A P>=2-factor of g by backtracking, or None."""
    _check_search_order(g)
    return _CoverSearch(g).cover(g.all_vertices)


def has_p2_factor(g: Graph, *, method: str = "auto") -> bool:
    """Whether g has a P>=2-factor.

    ``method`` is "search" (backtracking), "criterion" (subset scan) or
    "auto" (search up to order 16, criterion above).
    """
    if method == "auto":
        method = "search" if g.n <= MAX_SEARCH_ORDER else "criterion"
    if method == "search":
        return find_p2_factor(g) is not None
    if method == "criterion":
        return deficiency_check(g) is None
    raise ValueError(f"unknown method {method!r}")


def _short_paths_through(g: Graph, u: int, v: int) -> list[Path]:
    """Paths of order 2..4 that traverse the edge uv consecutively."""
    adj = g.adj
    out: list[Path] = [[u, v]]
    used = (1 << u) | (1 << v)
    for a in members(adj[u] & ~used):
        out.append([a, u, v])
    for b in members(adj[v] & ~used):
        out.append([u, v, b])
    for a in members(adj[u] & ~used):
        for b in members(adj[v] & ~used & ~(1 << a)):
            out.append([a, u, v, b])
        for a2 in members(adj[a] & ~used):
            out.append([a2, a, u, v])
    for b in members(adj[v] & ~used):
        for b2 in members(adj[b] & ~used):
            out.append([u, v, b, b2])
    return out


def factor_containing_edge(g: Graph, u: int, v: int, search: _CoverSearch | None = None) -> list[Path] | None:
    """A P>=2-factor in which u and v are consecutive on some path, or None."""
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    search = search or _CoverSearch(g)
    for q in _short_paths_through(g, u, v):
        rest = g.all_vertices
        for x in q:
            rest &= ~(1 << x)
        sub = search.cover(rest)
        if sub is not None:
            return [q, *sub]
    return None


def is_covered_direct(g: Graph, limit: int = MAX_SEARCH_ORDER) -> bool:
    """True iff g has a P>=2-factor and every edge lies on one (direct search).

    Requiring a factor only matters for the edgeless K_1, which would
    otherwise be covered vacuously.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("covered-graph check needs a connected graph")
    _check_search_order(g, limit)
    if g.edge_count == 0:
        return False
    search = _CoverSearch(g)
    return all(factor_containing_edge(g, u, v, search) is not None for u, v in g.edges())


def uncovered_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges lying on no P>=2-factor."""
    _check_search_order(g)
    search = _CoverSearch(g)
    return [(u, v) for u, v in g.edges() if factor_containing_edge(g, u, v, search) is None]


def validate_witness(g: Graph, paths: Sequence[Sequence[int]]) -> bool:
    """Check that ``paths`` is a P>=2-factor of g: disjoint, spanning, adjacent, order >= 2."""
    seen = 0
    for p in paths:
        if len(p) < 2:
            return False
        for x in p:
            if not 0 <= x < g.n or seen >> x & 1:
                return False
            seen |= 1 << x
        for a, b in zip(p, p[1:]):
            if not g.has_edge(a, b):
                return False
    return seen == g.all_vertices


def witness_uses_edge(paths: Sequence[Sequence[int]], u: int, v: int) -> bool:
    return any({a, b} == {u, v} for p in paths for a, b in zip(p, p[1:]))
