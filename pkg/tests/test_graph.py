import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from specfac.graph import (
    Graph,
    Graph6Error,
    GraphSizeError,
    complement,
    complete,
    connected_components,
    empty,
    graph6_decode,
    graph6_encode,
    induced_delete,
    is_connected,
    isolated_count,
    join,
    path,
    relabel,
    sequential_join,
    star,
    union,
)
from specfac.generate import graph_classes, labeled_graphs

from conftest import graphs


def test_constructors_edge_counts():
    assert complete(6).edge_count == 15
    assert empty(4).edge_count == 0
    assert path(5).edge_count == 4
    assert star(3).degrees() == [3, 1, 1, 1]


def test_join_and_union():
    g = join(complete(2), empty(3))
    assert g.n == 5 and g.edge_count == 1 + 6
    u = union(complete(3), complete(2))
    assert len(connected_components(u)) == 2


def test_sequential_join_only_links_neighbours():
    g = sequential_join([complete(3), complete(1), empty(2)])
    # Clique vertices 0..2 do not see the pair 4, 5.
    assert not any(g.has_edge(c, p) for c in range(3) for p in (4, 5))
    assert g.degree(3) == 5
    assert g.degree(4) == 1


def test_sequential_join_needs_two_parts():
    with pytest.raises(ValueError):
        sequential_join([complete(3)])


def test_graph_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        Graph(2, (0b10, 0b00))
    with pytest.raises(ValueError):
        Graph(1, (0b1,))


def test_order_limit():
    with pytest.raises(GraphSizeError):
        empty(65)


def test_induced_delete_counts_isolated():
    g = star(4)
    h = induced_delete(g, 1)
    assert h.n == 4 and isolated_count(h) == 4


def test_known_graph6_strings():
    assert graph6_decode("A_") == complete(2)
    assert graph6_encode(empty(1)) == "@"
    assert graph6_encode(complete(2)) == "A_"
    assert graph6_decode(">>graph6<<A_") == complete(2)


def test_graph6_bad_input():
    for bad in ("", "A", "A~", "\x10"):
        with pytest.raises(Graph6Error):
            graph6_decode(bad)


def test_graph6_long_header():
    g = path(64)
    text = graph6_encode(g)
    assert text.startswith("~")
    assert graph6_decode(text) == g


@pytest.mark.parametrize("n", range(1, 6))
def test_graph6_roundtrip_all_labelled(n):
    for g in labeled_graphs(n):
        assert graph6_decode(graph6_encode(g)) == g


@pytest.mark.parametrize("n", [6, 7])
def test_graph6_roundtrip_classes(n):
    for g in graph_classes(n, connected=False):
        assert graph6_decode(graph6_encode(g)) == g


def test_graph6_roundtrip_random_large():
    rnd = random.Random(7)
    for _ in range(50):
        n = rnd.randint(1, 64)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rnd.random() < 0.3]
        g = Graph.from_edges(n, edges)
        assert graph6_decode(graph6_encode(g)) == g


@given(graphs(max_n=10))
def test_complement_involution(g):
    assert complement(complement(g)) == g
    assert g.edge_count + complement(g).edge_count == g.n * (g.n - 1) // 2


@given(graphs(max_n=8), st.randoms())
def test_relabel_preserves_degree_multiset(g, rnd):
    perm = list(range(g.n))
    rnd.shuffle(perm)
    h = relabel(g, perm)
    assert sorted(h.degrees()) == sorted(g.degrees())
    assert is_connected(h) == is_connected(g)


def test_connected_class_counts():
    # Connected unlabelled graphs, orders 1..7 (OEIS A001349).
    assert [len(graph_classes(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


def test_all_class_counts():
    # All unlabelled graphs, orders 1..6 (OEIS A000088).
    assert [len(graph_classes(n, connected=False)) for n in range(1, 7)] == [1, 2, 4, 11, 34, 156]


def test_classes_cover_labelled_graphs_order5():
    from specfac.generate import _colour_refine, _isomorphic

    reps = [(g, *_colour_refine(g)) for g in graph_classes(5, connected=False)]
    for g in itertools.islice(labeled_graphs(5), 0, None, 7):
        key, col = _colour_refine(g)
        matches = [h for h, k, ch in reps if k == key and _isomorphic(g, col, h, ch)]
        assert len(matches) == 1
