"""Discrete magnetic Laplacian matrices, edge and vertex virtualisation."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np

from .eigen import DEFAULT_TOL, hermitian_eigenvalues
from .graph import GraphError
from .magnetics import ZERO, VectorPotential
from .weights import Scheme, WeightedGraph


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in ascending order, repeated by multiplicity."""

    values: tuple[float, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(x) for x in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, k):
        return self.values[k]

    def __iter__(self) -> Iterator[float]:
        return iter(self.values)

    def array(self) -> np.ndarray:
        return np.array(self.values)


def assemble_dml(w: WeightedGraph, a: VectorPotential = ZERO) -> np.ndarray:
    """Matrix of the DML in the basis ``m(v)^{-1/2} 1_v``, vertices in id order.

    An edge ``t -> h`` contributes ``-exp(i a_e) m_e / sqrt(m(t) m(h))`` at
    ``[t, h]`` and its conjugate at ``[h, t]``; a loop at ``v`` subtracts
    ``2 cos(a_e) m_e / m(v)`` from the diagonal, whose base value is ``rho(v)``.
    """
    g = w.graph
    a.check_on(g)
    m = w.vertex_weight
    h = np.zeros((g.vertex_count, g.vertex_count), dtype=complex)
    h[np.diag_indices(g.vertex_count)] = w.rhos
    for e in g.edges:
        me = w.edge_weight[e.id]
        alpha = a[e.id]
        if e.is_loop:
            h[e.tail, e.tail] -= 2.0 * math.cos(alpha) * me / m[e.tail]
        else:
            z = me / math.sqrt(m[e.tail] * m[e.head]) * complex(math.cos(alpha), math.sin(alpha))
            h[e.tail, e.head] -= z
            h[e.head, e.tail] -= z.conjugate()
    return h


def virtualise_edges(w: WeightedGraph, edge_set: Iterable[int]) -> WeightedGraph:
    """Drop ``edge_set``, keeping every vertex and every vertex weight."""
    drop = set(edge_set)
    g = w.graph.without_edges(drop)
    ew = {k: v for k, v in w.edge_weight.items() if k not in drop}
    if not drop or w.scheme is Scheme.COMBINATORIAL:
        scheme = w.scheme
    else:
        scheme = Scheme.EXPLICIT
    return WeightedGraph(g, w.vertex_weight, ew, scheme)


@dataclass(frozen=True)
class VertexVirtualisedGraph:
    """``base`` seen through its retained vertices ``V \\ virtual``.

    Edges with one endpoint among the virtual vertices stay attached to the
    retained one; they enter the compressed operator only through ``rho``.
    """

    base: WeightedGraph
    virtual: frozenset[int]

    @property
    def retained(self) -> list[int]:
        return [v for v in self.base.graph.vertices if v not in self.virtual]

    @property
    def dimension(self) -> int:
        return self.base.n - len(self.virtual)

    @property
    def dropped_edges(self) -> frozenset[int]:
        """Edges with both endpoints virtual."""
        return frozenset(
            e.id for e in self.base.graph.edges if e.tail in self.virtual and e.head in self.virtual
        )

    @property
    def dangling_edges(self) -> frozenset[int]:
        return frozenset(
            e.id for e in self.base.graph.edges if (e.tail in self.virtual) != (e.head in self.virtual)
        )


def virtualise_vertices(w: WeightedGraph, vertex_set: Iterable[int]) -> VertexVirtualisedGraph:
    vs = frozenset(int(v) for v in vertex_set)
    for v in vs:
        if not 0 <= v < w.n:
            raise GraphError(f"invalid vertex {v}")
    if len(vs) >= w.n:
        raise GraphError("cannot virtualise every vertex: the compressed operator would be empty")
    return VertexVirtualisedGraph(w, vs)


def assemble_compressed_dml(vv: VertexVirtualisedGraph, a: VectorPotential = ZERO) -> np.ndarray:
    """Principal submatrix of the full DML on the retained vertices."""
    keep = vv.retained
    return assemble_dml(vv.base, a)[np.ix_(keep, keep)]


def _spectrum_of(h: np.ndarray, tol: float, method: str) -> Spectrum:
    ev = hermitian_eigenvalues(h, tol, method)
    ev = np.where(np.abs(ev) <= tol, 0.0, ev)
    return Spectrum(tuple(ev))


def spectrum(w: WeightedGraph, a: VectorPotential = ZERO, tol: float = DEFAULT_TOL,
             method: str = "jacobi") -> Spectrum:
    """Eigenvalues of the DML; values within ``tol`` of 0 are reported as 0."""
    return _spectrum_of(assemble_dml(w, a), tol, method)


def compressed_spectrum(vv: VertexVirtualisedGraph, a: VectorPotential = ZERO,
                        tol: float = DEFAULT_TOL, method: str = "jacobi") -> Spectrum:
    return _spectrum_of(assemble_compressed_dml(vv, a), tol, method)
