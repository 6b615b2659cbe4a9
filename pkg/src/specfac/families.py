"""The named graph families, each with its equitable partition.

Partitions list blocks in the row order of the corresponding printed quotient
matrix, so ``quotient(inst.graph, a, inst.partition)`` can be compared with
``thresholds.case_matrix`` entry by entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from specfac.graph import Graph, VertexSet, complete, empty, join, path, sequential_join, union
from specfac.spectral import Partition
from specfac.thresholds import ParameterRangeError, check_case_range


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    partition: Partition
    family: str
    params: dict = field(default_factory=dict)
    # Named blocks, e.g. "hub" for the single vertex whose removal isolates the pendants.
    named: dict[str, VertexSet] = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.graph.n


def _block(offset: int, size: int) -> VertexSet:
    return ((1 << size) - 1) << offset


def claim1_graph(n: int) -> FamilyInstance:
    """K_1 v (K_{n-4} u 3K_1); blocks (3K_1, K_{n-4}, K_1)."""
    if n < 6:
        raise ParameterRangeError(f"claim-1 graph needs n >= 6, got {n}")
    # Labels: hub 0, clique 1..n-4, pendants n-3..n-1.
    g = join(complete(1), union(complete(n - 4), empty(3)))
    hub, clique, pend = _block(0, 1), _block(1, n - 4), _block(n - 3, 3)
    return FamilyInstance(g, Partition((pend, clique, hub)), "claim1", {"n": n}, {"hub": hub, "clique": clique, "pendants": pend})


def extremal_graph(n: int) -> FamilyInstance:
    """K_{n-3} v K_1 v K2-bar.

    Vertices are labelled by the sequential join (clique, hub, pair); the
    partition follows the printed quotient matrix, whose first row is the hub.
    """
    if n < 5:
        raise ParameterRangeError(f"extremal graph needs n >= 5, got {n}")
    g = sequential_join([complete(n - 3), complete(1), empty(2)])
    clique, hub, pair = _block(0, n - 3), _block(n - 3, 1), _block(n - 2, 2)
    return FamilyInstance(g, Partition((hub, clique, pair)), "extremal", {"n": n}, {"hub": hub, "clique": clique, "pendants": pair})


def case_graph(case_id: str, n: int, s: int) -> FamilyInstance:
    """K_s v (K_{n1} u tK_1) for the cases B1..B4, blocks (K_s, K_{n1}, tK_1).

    B3 and B4 have n1 = 0 and a two-block partition (K_s, tK_1).
    """
    case_id = case_id.upper()
    if case_id not in ("B1", "B2", "B3", "B4"):
        raise ParameterRangeError(f"unknown case {case_id!r}")
    check_case_range(case_id, n, s)
    t = {"B1": 2 * s, "B2": 2 * s - 1, "B3": 2 * s - 1, "B4": 2 * s}[case_id]
    n1 = n - s - t
    if n1 == 1:
        raise ParameterRangeError("the nontrivial component must have 0 or >= 2 vertices")
    head = complete(s)
    rest = empty(t) if n1 == 0 else union(complete(n1), empty(t))
    g = join(head, rest)
    hub = _block(0, s)
    if n1:
        clique, pend = _block(s, n1), _block(s + n1, t)
        blocks = (hub, clique, pend)
    else:
        clique, pend = 0, _block(s, t)
        blocks = (hub, pend)
    return FamilyInstance(
        g,
        Partition(blocks),
        case_id,
        {"n": n, "s": s, "n1": n1, "t": t},
        {"hub": hub, "clique": clique, "pendants": pend},
    )


def family_instance(name: str, n: int, s: int | None = None) -> FamilyInstance:
    """Look up a family by CLI name: complete, path, extremal, claim1, case-b1..case-b4."""
    key = name.lower()
    if key == "complete":
        return FamilyInstance(complete(n), Partition((_block(0, n),)), "complete", {"n": n})
    if key == "path":
        return FamilyInstance(path(n), Partition(tuple(1 << v for v in range(n))), "path", {"n": n})
    if key == "extremal":
        return extremal_graph(n)
    if key == "claim1":
        return claim1_graph(n)
    if key.startswith("case-b"):
        if s is None:
            raise ParameterRangeError(f"{name} needs --s")
        return case_graph(key[len("case-"):].upper(), n, s)
    raise ParameterRangeError(f"unknown family {name!r}")
