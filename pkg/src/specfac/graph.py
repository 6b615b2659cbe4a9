"""Simple undirected graphs on at most 64 vertices, stored as neighbourhood bitsets.

Vertex subsets are plain ``int`` bitmasks (bit ``v`` set means vertex ``v`` is in
the set).  Constructors label vertices deterministically: the vertices of the
first argument come first, then the second, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 64

VertexSet = int


class GraphSizeError(ValueError):
    """Raised when a graph would have fewer than 1 or more than 64 vertices."""


class Graph6Error(ValueError):
    """Raised on malformed graph6 input."""


def _check_order(n: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphSizeError(f"order must be an int, got {n!r}")
    if not 1 <= n <= MAX_ORDER:
        raise GraphSizeError(f"order {n} outside 1..{MAX_ORDER}")


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def members(mask: VertexSet) -> list[int]:
    """Vertices of a bitmask in increasing order."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has neighbours outside 0..{self.n - 1}")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in members(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        _check_order(n)
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def all_vertices(self) -> VertexSet:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count}, g6={graph6_encode(self)!r})"


# -- constructors -----------------------------------------------------------


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the centre labelled 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def _stack(parts: Sequence[Graph]) -> tuple[list[int], list[int]]:
    total = sum(g.n for g in parts)
    if total > MAX_ORDER:
        raise GraphSizeError(f"combined order {total} exceeds {MAX_ORDER}")
    adj: list[int] = []
    offsets = []
    for g in parts:
        off = len(adj)
        offsets.append(off)
        adj.extend(nb << off for nb in g.adj)
    return adj, offsets


def union(g1: Graph, g2: Graph) -> Graph:
    adj, _ = _stack([g1, g2])
    return Graph(len(adj), tuple(adj))


def sequential_join(parts: Sequence[Graph]) -> Graph:
    """G_1 v G_2 v ... v G_k: disjoint union plus all edges between consecutive parts."""
    if len(parts) < 2:
        raise ValueError("sequential join needs at least two parts")
    adj, offsets = _stack(parts)
    blocks = [((1 << g.n) - 1) << off for g, off in zip(parts, offsets)]
    for i in range(len(parts) - 1):
        left, right = blocks[i], blocks[i + 1]
        for v in members(left):
            adj[v] |= right
        for v in members(right):
            adj[v] |= left
    return Graph(len(adj), tuple(adj))


def join(g1: Graph, g2: Graph) -> Graph:
    return sequential_join([g1, g2])


def complement(g: Graph) -> Graph:
    full = g.all_vertices
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)))


def induced_delete(g: Graph, s: VertexSet) -> Graph:
    """G - S, remaining vertices relabelled 0.. in their original order."""
    if s & ~g.all_vertices:
        raise ValueError("vertex set contains vertices outside the graph")
    keep = members(g.all_vertices & ~s)
    if not keep:
        raise GraphSizeError("deleting every vertex leaves the null graph")
    index = {v: i for i, v in enumerate(keep)}
    adj = []
    for v in keep:
        adj.append(vertex_set(index[u] for u in members(g.adj[v] & ~s)))
    return Graph(len(keep), tuple(adj))


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("not a permutation of the vertex range")
    adj = [0] * g.n
    for v in range(g.n):
        adj[perm[v]] = vertex_set(perm[u] for u in members(g.adj[v]))
    return Graph(g.n, tuple(adj))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return Graph.from_edges(g.n, [*g.edges(), (u, v)])


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, tuple(adj))


# -- simple invariants --------------------------------------------------------


def isolated_count(g: Graph) -> int:
    return sum(1 for nb in g.adj if nb == 0)


def connected_components(g: Graph) -> list[VertexSet]:
    """Components as bitmasks, ordered by smallest vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in members(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


# -- graph6 -------------------------------------------------------------------


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> sh) & 63) + 63) for sh in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.adj[i] >> j & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_order(g.n) + "".join(body)


def graph6_decode(text: str) -> Graph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    if not text:
        raise Graph6Error("empty graph6 string")
    vals = [ord(c) - 63 for c in text]
    if any(not 0 <= x <= 63 for x in vals):
        raise Graph6Error(f"character outside graph6 range in {text!r}")
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise Graph6Error("unsupported or truncated graph6 order header")
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    else:
        n = vals[0]
        body = vals[1:]
    if n == 0 or n > MAX_ORDER:
        raise Graph6Error(f"graph6 order {n} outside 1..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    if len(body) != -(-nbits // 6):
        raise Graph6Error(f"expected {-(-nbits // 6)} data bytes for order {n}, got {len(body)}")
    bits = []
    for x in body:
        bits.extend((x >> sh) & 1 for sh in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))
