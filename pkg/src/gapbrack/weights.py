"""Vertex and edge weights on a graph and the canonical weight schemes."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

from .graph import Graph, GraphError, degrees


class Scheme(str, Enum):
    STANDARD = "standard"
    COMBINATORIAL = "combinatorial"
    NORMALISED = "normalised"
    ELECTRIC = "electric"
    EXPLICIT = "explicit"


@dataclass(frozen=True)
class WeightScheme:
    """A scheme name plus whatever weights the scheme needs.

    ``edge_weights`` is required for normalised and electric weights and, with
    ``vertex_weights``, for explicit weights.  Missing edge weights default to 1.
    """

    kind: Scheme
    edge_weights: Mapping[int, float] | None = None
    vertex_weights: Sequence[float] | None = None

    @classmethod
    def standard(cls) -> "WeightScheme":
        return cls(Scheme.STANDARD)

    @classmethod
    def combinatorial(cls) -> "WeightScheme":
        return cls(Scheme.COMBINATORIAL)

    @classmethod
    def normalised(cls, edge_weights: Mapping[int, float]) -> "WeightScheme":
        return cls(Scheme.NORMALISED, dict(edge_weights))

    @classmethod
    def electric(cls, edge_weights: Mapping[int, float]) -> "WeightScheme":
        return cls(Scheme.ELECTRIC, dict(edge_weights))

    @classmethod
    def explicit(cls, vertex_weights: Sequence[float], edge_weights: Mapping[int, float]) -> "WeightScheme":
        return cls(Scheme.EXPLICIT, dict(edge_weights), tuple(vertex_weights))


@dataclass(frozen=True)
class WeightedGraph:
    """A graph with strictly positive vertex and edge weights.

    ``scheme`` records which canonical scheme produced the weights, or
    ``Scheme.EXPLICIT`` when they no longer follow one (e.g. after edge
    virtualisation of standard weights).
    """

    graph: Graph
    vertex_weight: tuple[float, ...]
    edge_weight: Mapping[int, float]
    scheme: Scheme = Scheme.EXPLICIT
    _rho: tuple[float, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        g = self.graph
        vw = tuple(float(x) for x in self.vertex_weight)
        if len(vw) != g.vertex_count:
            raise GraphError(f"expected {g.vertex_count} vertex weights, got {len(vw)}")
        for v, m in enumerate(vw):
            if not m > 0:
                raise GraphError(f"vertex {v} has nonpositive weight {m}")
        ew = {}
        for e in g.edges:
            if e.id not in self.edge_weight:
                raise GraphError(f"edge {e.id} has no weight")
            m = float(self.edge_weight[e.id])
            if not m > 0:
                raise GraphError(f"edge {e.id} has nonpositive weight {m}")
            ew[e.id] = m
        extra = set(self.edge_weight) - set(ew)
        if extra:
            raise GraphError(f"weights given for unknown edges {sorted(extra)}")
        object.__setattr__(self, "vertex_weight", vw)
        object.__setattr__(self, "edge_weight", ew)
        object.__setattr__(self, "scheme", Scheme(self.scheme))
        star = incident_weight(g, ew)
        object.__setattr__(self, "_rho", tuple(s / m for s, m in zip(star, vw)))

    @property
    def n(self) -> int:
        return self.graph.vertex_count

    def rho(self, v: int) -> float:
        """Relative weight ``m(E_v) / m(v)``."""
        return self._rho[v]

    @property
    def rhos(self) -> tuple[float, ...]:
        return self._rho

    @property
    def rho_inf(self) -> float:
        return max(self._rho, default=0.0)

    def star_weight(self, v: int) -> float:
        """``m(E_v)``, where a loop counts twice."""
        return self._rho[v] * self.vertex_weight[v]


def incident_weight(g: Graph, edge_weight: Mapping[int, float]) -> list[float]:
    star = [0.0] * g.vertex_count
    for e in g.edges:
        star[e.tail] += edge_weight[e.id]
        star[e.head] += edge_weight[e.id]
    return star


def apply_weight_scheme(g: Graph, scheme: WeightScheme) -> WeightedGraph:
    """Weights per the canonical table.

    Isolated vertices receive vertex weight 1 under the standard and normalised
    schemes, since ``deg v = m(E_v) = 0`` is not an admissible weight; their
    relative weight is 0 either way.
    """
    kind = Scheme(scheme.kind)
    if kind in (Scheme.STANDARD, Scheme.COMBINATORIAL):
        ew = {e.id: 1.0 for e in g.edges}
    else:
        supplied = dict(scheme.edge_weights or {})
        for i in supplied:
            g.edge(i)
        ew = {e.id: float(supplied.get(e.id, 1.0)) for e in g.edges}
        bad = [i for i, m in ew.items() if not m > 0]
        if bad:
            raise GraphError(f"nonpositive edge weight on edges {bad}")

    if kind is Scheme.STANDARD:
        vw = [float(d) if d > 0 else 1.0 for d in degrees(g)]
    elif kind in (Scheme.COMBINATORIAL, Scheme.ELECTRIC):
        vw = [1.0] * g.vertex_count
    elif kind is Scheme.NORMALISED:
        vw = [s if s > 0 else 1.0 for s in incident_weight(g, ew)]
    else:
        if scheme.vertex_weights is None:
            raise GraphError("explicit scheme needs vertex weights")
        vw = list(scheme.vertex_weights)
    return WeightedGraph(g, tuple(vw), ew, kind)
