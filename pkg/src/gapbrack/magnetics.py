"""Vector potentials, gauge transformations and Floquet characters.

Angles are radians in ``[0, 2*pi)``.  A potential stores the edge angle
itself; the half-angle phases of the twisted derivative only appear inside
the matrix assembly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graph import Graph, GraphError, _bfs_tree, is_connected

TWO_PI = 2.0 * math.pi
ANGLE_TOL = 1e-12


def reduce_angle(x: float) -> float:
    r = math.fmod(float(x), TWO_PI)
    if r < 0:
        r += TWO_PI
    if r >= TWO_PI:
        r = 0.0
    return r


def circular_distance(a: float, b: float) -> float:
    d = abs(reduce_angle(a) - reduce_angle(b))
    return min(d, TWO_PI - d)


def angles_close(a: float, b: float, tol: float = ANGLE_TOL) -> bool:
    return circular_distance(a, b) <= tol


@dataclass(frozen=True)
class VectorPotential:
    """Edge angles; edges without a key carry angle 0."""

    values: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", {int(k): reduce_angle(v) for k, v in self.values.items()})

    def __getitem__(self, edge_id: int) -> float:
        return self.values.get(edge_id, 0.0)

    def __add__(self, other: "VectorPotential") -> "VectorPotential":
        keys = set(self.values) | set(other.values)
        return VectorPotential({k: self[k] + other[k] for k in keys})

    def support(self, tol: float = ANGLE_TOL) -> frozenset[int]:
        return frozenset(k for k, v in self.values.items() if not angles_close(v, 0.0, tol))

    def restricted(self, edge_ids: Iterable[int]) -> "VectorPotential":
        keep = set(edge_ids)
        return VectorPotential({k: v for k, v in self.values.items() if k in keep})

    def check_on(self, g: Graph) -> None:
        for k in self.values:
            if not g.has_edge(k):
                raise GraphError(f"vector potential keyed on unknown edge {k}")

    def is_close(self, other: "VectorPotential", tol: float = ANGLE_TOL) -> bool:
        keys = set(self.values) | set(other.values)
        return all(angles_close(self[k], other[k], tol) for k in keys)


ZERO = VectorPotential()


@dataclass(frozen=True)
class GaugeFunction:
    """Vertex angles; vertices without a key carry angle 0."""

    values: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", {int(k): reduce_angle(v) for k, v in self.values.items()})

    def __getitem__(self, v: int) -> float:
        return self.values.get(v, 0.0)


def gauge_transform(g: Graph, a: VectorPotential, phi: GaugeFunction) -> VectorPotential:
    """``a_e + phi(head) - phi(tail)`` on every edge."""
    a.check_on(g)
    return VectorPotential({e.id: a[e.id] + phi[e.head] - phi[e.tail] for e in g.edges})


def holonomy(g: Graph, a: VectorPotential, cycle: Sequence[tuple[int, int]]) -> float:
    """Signed angle sum along a closed walk given as ``(edge_id, sign)`` steps.

    ``sign`` is +1 when the edge is traversed tail to head and -1 otherwise.
    """
    return reduce_angle(sum(s * a[i] for i, s in cycle))


def reduce_support(g: Graph, a: VectorPotential) -> tuple[VectorPotential, GaugeFunction]:
    """Gauge ``a`` to vanish on the BFS spanning tree rooted at vertex 0.

    Returns the transformed potential and the gauge function realising it.
    """
    if g.vertex_count == 0 or not is_connected(g):
        raise GraphError("reduce_support requires a connected, nonempty graph")
    a.check_on(g)
    phi = [0.0] * g.vertex_count
    for eid, w in _bfs_tree(g):
        e = g.edge(eid)
        if w == e.head:
            phi[w] = phi[e.tail] - a[eid]
        else:
            phi[w] = phi[e.head] + a[eid]
    gauge = GaugeFunction(dict(enumerate(phi)))
    moved = gauge_transform(g, a, gauge)
    tree = {eid for eid, _ in _bfs_tree(g)}
    # tree entries are zero up to rounding; pin them exactly
    cleaned = {k: (0.0 if k in tree else v) for k, v in moved.values.items()}
    return VectorPotential({k: v for k, v in cleaned.items() if v != 0.0}), gauge


def lift_character(q, theta: Sequence[float]) -> VectorPotential:
    """Potential with ``a_e = <theta, ind(e)>`` on a periodic quotient ``q``.

    ``q`` needs ``rank``, ``base`` and an ``index`` map from edge id to an
    integer vector; edges of zero index get no entry.
    """
    theta = [float(t) for t in theta]
    if len(theta) != q.rank:
        raise GraphError(f"character has {len(theta)} angles but the quotient has rank {q.rank}")
    vals = {}
    for e in q.base.graph.edges:
        ind = q.index.get(e.id)
        if ind is None or not any(ind):
            continue
        vals[e.id] = sum(t * k for t, k in zip(theta, ind))
    return VectorPotential(vals)
