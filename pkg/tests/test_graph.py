from itertools import combinations

import pytest
from hypothesis import given

from conftest import graphs
from gapbrack.fixtures import load_fixture
from gapbrack.graph import (
    Edge,
    Graph,
    GraphError,
    betti_number,
    bipartition,
    build_graph,
    components,
    connecting_edges,
    degree,
    degrees,
    is_connected,
    is_cycle_graph,
    is_in_neighbourhood,
    is_tree,
    minimum_vertex_cover,
    spanning_tree,
)

C6 = [(5, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]


def test_build_graph_assigns_ids_in_order():
    g = build_graph([(0, 1), (1, 0)], 2)
    assert [(e.id, e.tail, e.head) for e in g.edges] == [(0, 0, 1), (1, 1, 0)]
    assert betti_number(g) == 1


def test_out_of_range_endpoint_names_edge():
    with pytest.raises(GraphError, match="edge 1"):
        build_graph([(0, 1), (1, 5)], 3)


def test_duplicate_ids_rejected():
    with pytest.raises(GraphError):
        Graph(2, (Edge(0, 0, 1), Edge(0, 1, 0)))


def test_loop_degree_and_isolated_vertex():
    g = build_graph([(0, 0)], 2)
    assert degree(g, 0) == 2
    assert degree(g, 1) == 0
    with pytest.raises(GraphError):
        degree(g, 2)


def test_centre_vertex_degree_of_g2():
    g = load_fixture("g2").weighted.graph
    assert degree(g, 2) == 4


def test_c6_basics():
    g = build_graph(C6, 6)
    assert betti_number(g) == 1
    assert is_connected(g) and not is_tree(g)
    assert is_tree(g.without_edges([1]))
    assert is_cycle_graph(g)


def test_betti_numbers_of_fixtures():
    assert betti_number(load_fixture("c6_pendant").weighted.graph) == 1
    assert betti_number(load_fixture("polyacetylene").weighted.graph) == 2
    assert betti_number(build_graph([(0, 1), (1, 2), (1, 3)], 4)) == 0


def test_betti_requires_connected():
    with pytest.raises(GraphError):
        betti_number(build_graph([(0, 1)], 3))


def test_trees_exclude_loops_and_multi_edges():
    assert not is_tree(build_graph([(0, 0)], 1))
    assert not is_tree(build_graph([(0, 1), (0, 1)], 2))
    assert is_tree(build_graph([], 1))


def test_without_edges_keeps_ids():
    g = build_graph(C6, 6).without_edges([2])
    assert g.edge_ids == (0, 1, 3, 4, 5)
    with pytest.raises(GraphError):
        g.without_edges([2])


def test_bipartition():
    a, b = bipartition(build_graph(C6, 6))
    assert {a, b} == {frozenset({0, 2, 4}), frozenset({1, 3, 5})}
    assert bipartition(build_graph([(0, 1), (1, 2), (2, 0)], 3)) is None
    assert bipartition(build_graph([(0, 0)], 1)) is None
    assert bipartition(load_fixture("polypropylene").weighted.graph) is not None


def test_spanning_tree_of_c6_pendant_omits_one_cycle_edge():
    g = load_fixture("c6_pendant").weighted.graph
    t = spanning_tree(g)
    assert len(t) == 6
    # brute force: the 6-subsets that are trees are exactly those dropping a cycle edge
    trees = [set(s) for s in combinations(g.edge_ids, 6) if is_tree(Graph(7, tuple(g.edge(i) for i in s)))]
    assert sorted(min(set(g.edge_ids) - s) for s in trees) == list(range(6))
    assert t in [frozenset(s) for s in trees]


def test_spanning_tree_is_deterministic_bfs():
    assert spanning_tree(build_graph(C6, 6)) == frozenset({0, 1, 2, 4, 5})
    with pytest.raises(GraphError):
        spanning_tree(build_graph([], 2))


def test_connecting_edges():
    g = build_graph(C6 + [(0, 0)], 6)
    assert connecting_edges(g, set(range(6))) == frozenset()
    assert connecting_edges(g, {0}) == frozenset({0, 1})


def test_neighbourhood():
    g = load_fixture("c6_pendant").weighted.graph
    assert is_in_neighbourhood(g, [], {3})
    assert is_in_neighbourhood(g, [0], {0})
    assert not is_in_neighbourhood(g, [0], {3})


def test_minimum_vertex_cover_tie_break():
    g = build_graph([(0, 1), (1, 2), (2, 3)], 4)
    assert minimum_vertex_cover(g, [0, 1, 2]) == frozenset({0, 2})
    assert minimum_vertex_cover(g, []) == frozenset()


@given(graphs())
def test_handshake(g):
    assert sum(degrees(g)) == 2 * len(g.edges)
    assert [degree(g, v) for v in g.vertices] == degrees(g)


@given(graphs(connected=True))
def test_spanning_tree_properties(g):
    t = spanning_tree(g)
    assert len(t) == g.vertex_count - 1
    tree = Graph(g.vertex_count, tuple(g.edge(i) for i in t))
    assert is_tree(tree) and betti_number(tree) == 0
    assert len(g.edges) - len(t) == betti_number(g)


@given(graphs())
def test_connecting_edges_symmetric(g):
    half = set(range(0, g.vertex_count, 2))
    rest = set(g.vertices) - half
    assert connecting_edges(g, half) == connecting_edges(g, rest)


@given(graphs())
def test_bipartition_valid_or_odd_cycle(g):
    parts = bipartition(g)
    if parts is not None:
        a, b = parts
        assert a | b == set(g.vertices) and not a & b
        assert all((e.tail in a) != (e.head in a) for e in g.edges)
    else:
        # odd closed walk exists: some component is not 2-colourable; check by brute force
        found = False
        for comp in components(g):
            sub = [e for e in g.edges if e.tail in comp]
            for mask in range(2 ** len(comp)):
                side = {v for i, v in enumerate(comp) if mask >> i & 1}
                if all((e.tail in side) != (e.head in side) for e in sub):
                    break
            else:
                found = True
        assert found
