"""Factor existence and coveredness against a brute-force edge-subset oracle."""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from specfac.factor import (
    DisconnectedGraphError,
    OrderTooLarge,
    ViolationKind,
    check_conditions,
    deficiency_check,
    factor_containing_edge,
    find_p2_factor,
    has_p2_factor,
    is_covered_direct,
    is_covered_structural,
    max_deficiency,
    uncovered_edges,
    validate_witness,
    witness_uses_edge,
)
from specfac.generate import connected_gnp, graph_classes, trial_rng
from specfac.graph import Graph, add_edge, complete, empty, join, path, star, union
from specfac.families import extremal_graph

from conftest import connected_graphs


def _is_linear_forest_spanning(n: int, edges: list[tuple[int, int]]) -> bool:
    """Every vertex has degree 1 or 2 in the subgraph and there is no cycle."""
    deg = [0] * n
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
        if deg[u] > 2 or deg[v] > 2:
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return all(d >= 1 for d in deg)


def brute_force_factors(g: Graph) -> list[frozenset]:
    """All edge sets of g that form a P>=2-factor."""
    edges = list(g.edges())
    out = []
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            if _is_linear_forest_spanning(g.n, list(sub)):
                out.append(frozenset(sub))
    return out


def brute_force_covered(g: Graph) -> bool:
    factors = brute_force_factors(g)
    if not factors:
        return False
    used = frozenset().union(*factors)
    return all(e in used for e in g.edges())


SMALL = [g for n in range(1, 7) for g in graph_classes(n)]


def test_small_named_graphs():
    assert deficiency_check(path(3)) is None
    assert is_covered_structural(path(3)) is None
    v = deficiency_check(star(3))
    assert v.kind is ViolationKind.DEFICIENCY and v.vertices == [0] and v.isolated == 3
    assert is_covered_structural(complete(5)) is None


def test_k1_is_not_covered_either_way():
    g = empty(1)
    assert is_covered_structural(g).kind is ViolationKind.DEFICIENCY
    assert not is_covered_direct(g)
    assert not has_p2_factor(g)


def test_extremal_violation_is_the_hub():
    inst = extremal_graph(14)
    v = is_covered_structural(inst.graph)
    assert v.kind is ViolationKind.NONTRIVIAL_COMPONENT
    assert v.s == inst.named["hub"] and v.isolated == 2 and v.bound == 1
    assert has_p2_factor(inst.graph)
    # The clique-hub edges are the uncovered ones.
    hub = inst.graph.n - 3
    bad = uncovered_edges(inst.graph)
    assert bad and all(hub in e for e in bad)


@pytest.mark.parametrize("g", SMALL, ids=lambda g: f"n{g.n}m{g.edge_count}")
def test_against_brute_force(g):
    has_factor = bool(brute_force_factors(g))
    assert (deficiency_check(g) is None) == has_factor
    assert has_p2_factor(g) == has_factor
    covered = brute_force_covered(g)
    assert (is_covered_structural(g) is None) == covered
    assert is_covered_direct(g) == covered


def test_factor_existence_random_orders_9_to_12():
    for t in range(400):
        rng = trial_rng(99, t)
        n = 9 + t % 4
        g = connected_gnp(n, 0.15 + 0.05 * (t % 5), rng)
        assert (deficiency_check(g) is None) == has_p2_factor(g, method="search")


def test_covered_random_orders_8_to_10():
    for t in range(150):
        rng = trial_rng(5, t)
        n = 8 + t % 3
        g = connected_gnp(n, 0.3 + 0.1 * (t % 4), rng)
        assert (is_covered_structural(g) is None) == is_covered_direct(g)


@given(connected_graphs(min_n=2, max_n=9))
def test_witnesses_are_valid(g):
    w = find_p2_factor(g)
    if w is None:
        assert deficiency_check(g) is not None
        return
    assert validate_witness(g, w)
    for u, v in g.edges():
        f = factor_containing_edge(g, u, v)
        if f is not None:
            assert validate_witness(g, f)
            assert witness_uses_edge(f, u, v)


@given(connected_graphs(min_n=2, max_n=9), st.integers(1, 4))
def test_shard_count_does_not_change_answers(g, shards):
    assert max_deficiency(g, shards) == max_deficiency(g, 1)
    assert is_covered_structural(g, shards) == is_covered_structural(g, 1)


@given(connected_graphs(min_n=2, max_n=9), st.data())
def test_factor_existence_monotone_under_edge_addition(g, data):
    missing = [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if not g.has_edge(u, v)]
    if not missing or deficiency_check(g) is not None:
        return
    u, v = data.draw(st.sampled_from(missing))
    assert deficiency_check(add_edge(g, u, v)) is None


@given(connected_graphs(min_n=1, max_n=8))
def test_scan_agrees_with_pure_python(g):
    failing = [s for s in range(1 << g.n) if check_conditions(g, s) is not None]
    v = is_covered_structural(g)
    if not failing:
        assert v is None
    else:
        assert v == check_conditions(g, failing[0])


def test_validate_witness_rejects_bad_covers():
    g = path(4)
    assert validate_witness(g, [[0, 1], [2, 3]])
    assert not validate_witness(g, [[0, 1, 2, 3], [3]])
    assert not validate_witness(g, [[0, 2], [1, 3]])
    assert not validate_witness(g, [[0, 1]])


def test_errors():
    with pytest.raises(DisconnectedGraphError):
        is_covered_structural(union(complete(2), complete(2)))
    with pytest.raises(DisconnectedGraphError):
        is_covered_direct(empty(2))
    with pytest.raises(OrderTooLarge):
        find_p2_factor(complete(17))
    with pytest.raises(OrderTooLarge):
        deficiency_check(complete(31))
    with pytest.raises(ValueError):
        factor_containing_edge(path(3), 0, 2)


def test_scan_order_30_is_accepted():
    g = join(complete(1), union(complete(27), empty(2)))
    assert g.n == 30
    v = is_covered_structural(g)
    assert v is not None and v.kind is ViolationKind.NONTRIVIAL_COMPONENT
