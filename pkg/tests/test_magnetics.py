import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs, potentials, weighted_graphs
from gapbrack.dml import spectrum
from gapbrack.fixtures import load_fixture
from gapbrack.graph import GraphError, build_graph, is_connected, spanning_tree
from gapbrack.magnetics import (
    TWO_PI,
    ZERO,
    GaugeFunction,
    VectorPotential,
    angles_close,
    gauge_transform,
    holonomy,
    lift_character,
    reduce_angle,
    reduce_support,
)
from gapbrack.weights import WeightScheme, apply_weight_scheme

C6 = [(5, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 5)]
C6_WALK = [(i, 1) for i in range(6)]


def test_reduce_angle():
    assert reduce_angle(-math.pi / 2) == pytest.approx(3 * math.pi / 2)
    assert reduce_angle(TWO_PI) == 0.0
    assert 0 <= reduce_angle(-1e-300) < TWO_PI


def test_zero_gauge_is_identity():
    g = build_graph(C6, 6)
    a = VectorPotential({1: 0.3, 4: 2.0})
    assert gauge_transform(g, a, GaugeFunction()).is_close(a)


def test_unknown_edge_rejected():
    with pytest.raises(GraphError):
        gauge_transform(build_graph(C6, 6), VectorPotential({9: 1.0}), GaugeFunction())


def test_tree_potential_is_trivial():
    g = build_graph([(0, 1), (1, 2), (3, 1)], 4)
    a = VectorPotential({0: 1.0, 1: 2.5, 2: 4.0})
    reduced, phi = reduce_support(g, a)
    assert reduced.support() == frozenset()
    assert gauge_transform(g, a, phi).is_close(ZERO, 1e-12)


def test_c6_uniform_flux_collapses_to_one_edge():
    g = build_graph(C6, 6)
    t = 0.7
    reduced, _ = reduce_support(g, VectorPotential({i: t for i in range(6)}))
    tree = spanning_tree(g)
    (only,) = reduced.support()
    assert only not in tree
    assert angles_close(reduced[only], 6 * t, 1e-12)


def test_reduce_support_requires_connected():
    with pytest.raises(GraphError):
        reduce_support(build_graph([(0, 1)], 3), ZERO)


def test_lift_character():
    q = load_fixture("graphane").quotient
    a = lift_character(q, [math.pi / 2, math.pi])
    assert a.values == {0: math.pi / 2, 1: math.pi}
    assert lift_character(q, [0.0, 0.0]).support() == frozenset()
    z = load_fixture("z_lattice").quotient
    assert lift_character(z, [math.pi]).values == {0: math.pi}
    with pytest.raises(GraphError):
        lift_character(q, [1.0])


@given(weighted_graphs(), st.data())
def test_gauge_invariance_of_spectrum(w, data):
    a = data.draw(potentials(w.graph))
    phi = GaugeFunction({v: data.draw(st.floats(0, 6.28)) for v in w.graph.vertices})
    s1 = spectrum(w, a).array()
    s2 = spectrum(w, gauge_transform(w.graph, a, phi)).array()
    assert np.allclose(s1, s2, atol=1e-9)


@given(graphs(max_vertices=5), st.data())
def test_holonomy_invariant_under_gauge(g, data):
    a = data.draw(potentials(g))
    phi = GaugeFunction({v: data.draw(st.floats(0, 6.28)) for v in g.vertices})
    b = gauge_transform(g, a, phi)
    # every loop and every pair of parallel edges is a closed walk
    for e in g.edges:
        if e.is_loop:
            assert angles_close(holonomy(g, a, [(e.id, 1)]), holonomy(g, b, [(e.id, 1)]), 1e-9)
    for e in g.edges:
        for f in g.edges:
            if e.id < f.id and {e.tail, e.head} == {f.tail, f.head} and not e.is_loop:
                sign = 1 if e.head == f.tail else -1
                walk = [(e.id, 1), (f.id, sign)]
                assert angles_close(holonomy(g, a, walk), holonomy(g, b, walk), 1e-9)


def test_holonomy_around_c6():
    g = build_graph(C6, 6)
    a = VectorPotential({i: 0.1 * i for i in range(6)})
    phi = GaugeFunction({v: 0.37 * v * v for v in range(6)})
    assert angles_close(holonomy(g, a, C6_WALK), holonomy(g, gauge_transform(g, a, phi), C6_WALK), 1e-12)
    assert angles_close(holonomy(g, a, C6_WALK), 1.5, 1e-12)


@given(graphs(connected=True), st.data())
def test_reduce_support_is_idempotent_and_small(g, data):
    a = data.draw(potentials(g))
    reduced, phi = reduce_support(g, a)
    assert gauge_transform(g, a, phi).is_close(reduced, 1e-9)
    assert not (reduced.support() & spanning_tree(g))
    assert len(reduced.support()) <= len(g.edges) - g.vertex_count + 1
    again, _ = reduce_support(g, reduced)
    assert again.is_close(reduced, 1e-9)


@given(weighted_graphs(connected=True), st.data())
def test_reduce_support_preserves_spectrum(w, data):
    a = data.draw(potentials(w.graph))
    reduced, _ = reduce_support(w.graph, a)
    assert np.allclose(spectrum(w, a).array(), spectrum(w, reduced).array(), atol=1e-9)


@given(st.lists(st.floats(-10, 10), min_size=2, max_size=2), st.lists(st.floats(-10, 10), min_size=2, max_size=2))
def test_lift_character_is_additive(t1, t2):
    q = load_fixture("graphane").quotient
    total = lift_character(q, [x + y for x, y in zip(t1, t2)])
    assert total.is_close(lift_character(q, t1) + lift_character(q, t2), 1e-9)
