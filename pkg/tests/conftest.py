import itertools
import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from gapbrack.graph import build_graph, is_connected
from gapbrack.magnetics import VectorPotential
from gapbrack.weights import WeightedGraph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def graphs(draw, min_vertices=1, max_vertices=6, max_edges=9, connected=False, loops=True):
    n = draw(st.integers(min_vertices, max_vertices))
    ends = st.integers(0, n - 1)
    pairs = draw(st.lists(st.tuples(ends, ends), max_size=max_edges))
    if not loops:
        pairs = [(t, h) for t, h in pairs if t != h]
    if connected:
        # a random spanning path over a shuffled order guarantees connectivity
        order = draw(st.permutations(range(n)))
        pairs = [(order[i], order[i + 1]) for i in range(n - 1)] + pairs
    return build_graph(pairs, n)


@st.composite
def weighted_graphs(draw, **kw):
    g = draw(graphs(**kw))
    pos = st.floats(0.2, 5.0, allow_nan=False)
    vw = tuple(draw(pos) for _ in g.vertices)
    ew = {e.id: draw(pos) for e in g.edges}
    return WeightedGraph(g, vw, ew)


@st.composite
def potentials(draw, g):
    ang = st.floats(0.0, 2 * math.pi, allow_nan=False, exclude_max=True)
    return VectorPotential({e.id: draw(ang) for e in g.edges})


def random_weighted_graph(rng: np.random.Generator, n_max=7, extra_max=6, connected=True, loops=True):
    """Connected (by default) random multigraph with random positive weights."""
    n = int(rng.integers(1, n_max + 1))
    pairs = []
    if connected:
        perm = rng.permutation(n)
        for i in range(1, n):
            pairs.append((int(perm[int(rng.integers(0, i))]), int(perm[i])))
    for _ in range(int(rng.integers(0, extra_max + 1))):
        t, h = (int(x) for x in rng.integers(0, n, size=2))
        if t == h and not loops:
            continue
        pairs.append((t, h))
    if rng.random() < 0.5:
        pairs = [(h, t) for t, h in pairs]
    g = build_graph(pairs, n)
    assert not connected or is_connected(g)
    vw = tuple(float(x) for x in rng.uniform(0.3, 3.0, size=n))
    ew = {e.id: float(rng.uniform(0.3, 3.0)) for e in g.edges}
    return WeightedGraph(g, vw, ew)


def random_potential(rng: np.random.Generator, g, support=None) -> VectorPotential:
    ids = g.edge_ids if support is None else sorted(support)
    return VectorPotential({i: float(rng.uniform(0, 2 * math.pi)) for i in ids})


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


def betti1_graphs(max_n):
    """Connected Betti-1 graphs on up to ``max_n`` vertices.

    Every labelled tree (from Pruefer codes) plus a loop at 0 or an edge 0-1.
    Each isomorphism class occurs, since relabelling can move the extra edge
    onto vertices 0 and 1.
    """
    for n in range(1, max_n + 1):
        if n == 1:
            trees = [[]]
        elif n == 2:
            trees = [[(0, 1)]]
        else:
            trees = []
            for code in itertools.product(range(n), repeat=n - 2):
                deg = [1] * n
                for x in code:
                    deg[x] += 1
                edges = []
                seq = list(code)
                for x in seq:
                    leaf = min(v for v in range(n) if deg[v] == 1)
                    edges.append((leaf, x))
                    deg[leaf] -= 1
                    deg[x] -= 1
                u, v = (i for i in range(n) if deg[i] == 1)
                edges.append((u, v))
                trees.append(edges)
        extras = [(0, 0)] + ([(0, 1)] if n > 1 else [])
        for t in trees:
            for e in extras:
                yield build_graph(t + [e], n)


def oracle_is_cycle(g):
    # walk the unique closed trail from vertex 0 and see whether it uses every edge
    if any(e.is_loop for e in g.edges):
        return g.vertex_count == 1
    seen_edges, v, prev = set(), 0, None
    while True:
        nxt = [e for e in g.incident(v) if e.id not in seen_edges]
        if not nxt:
            break
        e = nxt[0]
        seen_edges.add(e.id)
        v = e.other(v)
    return v == 0 and len(seen_edges) == len(g.edges) and all(len(g.incident(u)) == 2 for u in g.vertices)


def oracle_has_leaf(g):
    return any(sum((e.tail == v) + (e.head == v) for e in g.edges) == 1 for v in g.vertices)
