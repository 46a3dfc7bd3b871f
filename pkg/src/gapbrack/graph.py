"""Finite directed multigraphs with loops and the structural predicates used
throughout the package.

Vertices are the integers ``0 .. vertex_count - 1``.  Every edge carries a
stable integer id; deleting edges never renumbers the survivors, so data keyed
by edge id (weights, vector potentials, periodic indices) can be carried over
to subgraphs unchanged.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable


class GraphError(ValueError):
    """Raised for structurally invalid graphs or unsupported queries."""


@dataclass(frozen=True)
class Edge:
    id: int
    tail: int
    head: int

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head

    def other(self, v: int) -> int:
        """Opposite endpoint of ``v`` along this edge."""
        if v == self.tail:
            return self.head
        if v == self.head:
            return self.tail
        raise GraphError(f"vertex {v} is not an endpoint of edge {self.id}")


@dataclass(frozen=True)
class Graph:
    """Directed multigraph; ``edges`` is ordered by ascending edge id."""

    vertex_count: int
    edges: tuple[Edge, ...]
    _by_id: dict[int, Edge] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be nonnegative")
        by_id: dict[int, Edge] = {}
        for e in self.edges:
            if e.id in by_id:
                raise GraphError(f"duplicate edge id {e.id}")
            for end in (e.tail, e.head):
                if not 0 <= end < self.vertex_count:
                    raise GraphError(
                        f"edge {e.id} ({e.tail}->{e.head}) has endpoint {end} "
                        f"outside 0..{self.vertex_count - 1}"
                    )
            by_id[e.id] = e
        ordered = tuple(sorted(self.edges, key=lambda e: e.id))
        object.__setattr__(self, "edges", ordered)
        object.__setattr__(self, "_by_id", by_id)

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_ids(self) -> tuple[int, ...]:
        return tuple(e.id for e in self.edges)

    def edge(self, edge_id: int) -> Edge:
        try:
            return self._by_id[edge_id]
        except KeyError:
            raise GraphError(f"unknown edge id {edge_id}") from None

    def has_edge(self, edge_id: int) -> bool:
        return edge_id in self._by_id

    def incident(self, v: int) -> tuple[Edge, ...]:
        """Edges with ``v`` as an endpoint; a loop appears once."""
        self._check_vertex(v)
        return tuple(e for e in self.edges if e.tail == v or e.head == v)

    def without_edges(self, edge_ids: Iterable[int]) -> "Graph":
        drop = set(edge_ids)
        for i in drop:
            self.edge(i)
        return Graph(self.vertex_count, tuple(e for e in self.edges if e.id not in drop))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise GraphError(f"invalid vertex {v}")


def build_graph(edge_list: Iterable[tuple[int, int]], vertex_count: int) -> Graph:
    """Build a graph whose edge ids follow the order of ``edge_list``."""
    edges = tuple(Edge(i, int(t), int(h)) for i, (t, h) in enumerate(edge_list))
    return Graph(vertex_count, edges)


def degree(g: Graph, v: int) -> int:
    """``|E_v^+| + |E_v^-|``; a loop contributes 2."""
    g._check_vertex(v)
    return sum((e.tail == v) + (e.head == v) for e in g.edges)


def degrees(g: Graph) -> list[int]:
    deg = [0] * g.vertex_count
    for e in g.edges:
        deg[e.tail] += 1
        deg[e.head] += 1
    return deg


def components(g: Graph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in g.vertices]
    for e in g.edges:
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    seen = [False] * g.vertex_count
    out = []
    for s in g.vertices:
        if seen[s]:
            continue
        seen[s] = True
        comp, queue = [], deque([s])
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def betti_number(g: Graph) -> int:
    """First Betti number ``|E| - |V| + 1`` of a connected graph."""
    if not is_connected(g):
        raise GraphError("betti_number requires a connected graph")
    return len(g.edges) - g.vertex_count + 1


def is_tree(g: Graph) -> bool:
    return g.vertex_count > 0 and is_connected(g) and len(g.edges) == g.vertex_count - 1


def is_cycle_graph(g: Graph) -> bool:
    """Connected and 2-regular (covers C_1 as a loop and C_2 as a double edge)."""
    return g.vertex_count > 0 and is_connected(g) and all(d == 2 for d in degrees(g))


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-colouring with every edge crossing, or ``None`` if none exists.

    Isolated vertices and the roots of further components go to the first part.
    """
    colour: list[int | None] = [None] * g.vertex_count
    adj: list[list[int]] = [[] for _ in g.vertices]
    for e in g.edges:
        if e.is_loop:
            return None
        adj[e.tail].append(e.head)
        adj[e.head].append(e.tail)
    for s in g.vertices:
        if colour[s] is not None:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if colour[w] is None:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None
    a = frozenset(v for v in g.vertices if colour[v] == 0)
    b = frozenset(v for v in g.vertices if colour[v] == 1)
    return a, b


def spanning_tree(g: Graph) -> frozenset[int]:
    """Edge ids of the BFS tree rooted at vertex 0, scanning edges by ascending id."""
    if g.vertex_count == 0 or not is_connected(g):
        raise GraphError("spanning_tree requires a connected, nonempty graph")
    return frozenset(e for e, _ in _bfs_tree(g))


def _bfs_tree(g: Graph) -> list[tuple[int, int]]:
    """(edge id, newly reached vertex) pairs in BFS discovery order from vertex 0."""
    incident: list[list[Edge]] = [[] for _ in g.vertices]
    for e in g.edges:
        incident[e.tail].append(e)
        if not e.is_loop:
            incident[e.head].append(e)
    seen = [False] * g.vertex_count
    seen[0] = True
    order = []
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for e in incident[u]:
            w = e.other(u)
            if not seen[w]:
                seen[w] = True
                order.append((e.id, w))
                queue.append(w)
    return order


def connecting_edges(g: Graph, vertex_set: Iterable[int]) -> frozenset[int]:
    """Edges with exactly one endpoint in ``vertex_set``; loops are never included."""
    inside = set(vertex_set)
    for v in inside:
        g._check_vertex(v)
    return frozenset(
        e.id for e in g.edges if (e.tail in inside) != (e.head in inside)
    )


def is_in_neighbourhood(g: Graph, edge_set: Iterable[int], vertex_set: Iterable[int]) -> bool:
    """True iff every edge in ``edge_set`` has an endpoint in ``vertex_set``."""
    vs = set(vertex_set)
    for v in vs:
        g._check_vertex(v)
    return all(g.edge(i).tail in vs or g.edge(i).head in vs for i in edge_set)


def minimum_vertex_cover(g: Graph, edge_set: Iterable[int]) -> frozenset[int]:
    """Smallest vertex set in the neighbourhood of ``edge_set``.

    Exhaustive over candidate endpoints; among equally small covers the
    lexicographically first (by sorted vertex ids) wins.
    """
    ids = sorted(set(edge_set))
    if not ids:
        return frozenset()
    candidates = sorted({v for i in ids for v in (g.edge(i).tail, g.edge(i).head)})
    for size in range(1, len(candidates) + 1):
        for combo in combinations(candidates, size):
            if is_in_neighbourhood(g, ids, combo):
                return frozenset(combo)
    raise AssertionError("unreachable: the full endpoint set is always a cover")
