"""Graph sources: seeded G(n, p) samples and exhaustive isomorphism classes.

Random stream
-------------
SplitMix64, so a seed reproduces the same graphs in any language::

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    return z ^ (z >> 31)                       (all arithmetic mod 2**64)

A uniform double is ``(next() >> 11) * 2**-53``.  Trial ``t`` of a campaign
with seed ``S`` draws from a fresh SplitMix64 seeded with output number ``t``
of the stream started at ``S``.  G(n, p) visits pairs (i, j), i < j, with i
outer and j inner, both ascending, and keeps the edge when the next uniform is
below p.  Connected samples are obtained by rejection on the same stream.
"""

from __future__ import annotations

from itertools import combinations
from pathlib import Path
from typing import Iterator

from specfac.graph import Graph, graph6_decode, graph6_encode, is_connected, members, popcount

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return _mix(self.state)

    def uniform(self) -> float:
        return (self.next() >> 11) * 2.0**-53

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = (1 << 64) - (1 << 64) % bound
        while True:
            x = self.next()
            if x < limit:
                return x % bound


def stream_output(seed: int, k: int) -> int:
    """Output number k (0-based) of SplitMix64(seed), in O(1)."""
    return _mix((seed + (k + 1) * GOLDEN) & MASK64)


def trial_rng(seed: int, trial: int) -> SplitMix64:
    return SplitMix64(stream_output(seed, trial))


def gnp(n: int, p: float, rng: SplitMix64) -> Graph:
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.uniform() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return Graph(n, tuple(adj))


def connected_gnp(n: int, p: float, rng: SplitMix64, max_tries: int = 100_000) -> Graph:
    for _ in range(max_tries):
        g = gnp(n, p, rng)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample in {max_tries} tries")


# -- exhaustive enumeration ------------------------------------------------------


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on n vertices, by upper-triangle bitmask."""
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        adj = [0] * n
        for k, (i, j) in enumerate(pairs):
            if code >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        yield Graph(n, tuple(adj))


def _colour_refine(g: Graph) -> tuple[tuple, list[int]]:
    """Colour refinement from degrees.

    Returns an isomorphism-invariant key (not a canonical form) and the stable
    vertex colours.  Isomorphisms between two graphs preserve these colours.
    """
    colours = [popcount(nb) for nb in g.adj]
    history = []
    while True:
        sigs = [(colours[v], tuple(sorted(colours[u] for u in members(g.adj[v])))) for v in range(g.n)]
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        history.append(tuple(sorted(sigs)))
        new = [palette[sig] for sig in sigs]
        stable = len(palette) == len(set(colours))
        colours = new
        if stable:
            break
    tri = tuple(sorted(
        (colours[v], sum(popcount(g.adj[u] & g.adj[v]) for u in members(g.adj[v]))) for v in range(g.n)
    ))
    return (g.n, g.edge_count, tuple(history), tri), colours


def _isomorphic(g: Graph, cg: list[int], h: Graph, ch: list[int]) -> bool:
    """Exact isomorphism test restricted to colour-preserving bijections."""
    n = g.n
    # Visit g's vertices rarest colour first, then by connectivity to earlier ones.
    freq = {c: cg.count(c) for c in cg}
    order: list[int] = []
    placed = 0
    remaining = set(range(n))
    while remaining:
        v = min(remaining, key=lambda x: (-popcount(g.adj[x] & placed), freq[cg[x]], x))
        order.append(v)
        placed |= 1 << v
        remaining.discard(v)
    image = [-1] * n
    used = [False] * n

    def extend(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in range(n):
            if used[w] or ch[w] != cg[v]:
                continue
            ok = True
            for x in order[:k]:
                if (g.adj[v] >> x & 1) != (h.adj[w] >> image[x] & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(k + 1):
                    return True
                used[w] = False
        image[v] = -1
        return False

    return extend(0)


def _extend_classes(reps: list[Graph], need_connected_parent: bool) -> list[Graph]:
    """All classes of order n+1 obtained by adding one vertex to each rep."""
    buckets: dict[tuple, list[tuple[Graph, list[int]]]] = {}
    out: list[Graph] = []
    for g in reps:
        n = g.n
        start = 1 if need_connected_parent else 0
        for nb in range(start, 1 << n):
            adj = list(g.adj)
            for u in members(nb):
                adj[u] |= 1 << n
            adj.append(nb)
            cand = Graph(n + 1, tuple(adj))
            key, colours = _colour_refine(cand)
            bucket = buckets.setdefault(key, [])
            if any(_isomorphic(cand, colours, h, ch) for h, ch in bucket):
                continue
            bucket.append((cand, colours))
            out.append(cand)
    return out


def _cache_path(n: int, connected: bool) -> Path:
    import os

    root = Path(os.environ.get("SPECFAC_CACHE", Path.home() / ".cache" / "specfac"))
    return root / f"{'connected' if connected else 'all'}_{n}.g6"


def graph_classes(n: int, connected: bool = True, use_cache: bool = True) -> list[Graph]:
    """One representative of every isomorphism class of (connected) graphs of order n.

    Built by vertex extension: every connected graph has a vertex whose
    deletion leaves it connected, so connected classes of order n all arise
    from connected classes of order n - 1.  Duplicates are removed with an
    exact isomorphism test inside colour-refinement buckets.
    """
    if n < 1:
        raise ValueError("order must be positive")
    path = _cache_path(n, connected)
    if use_cache and path.exists():
        return [graph6_decode(line) for line in path.read_text().split()]
    if n == 1:
        reps = [Graph(1, (0,))]
    else:
        reps = _extend_classes(graph_classes(n - 1, connected, use_cache), connected)
    if use_cache:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text("".join(graph6_encode(g) + "\n" for g in reps))
        except OSError:
            pass
    return reps
