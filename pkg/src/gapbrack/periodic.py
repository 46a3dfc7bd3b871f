"""Periodic quotients, Floquet sweeps and the periodic bracketing enclosure.

A quotient carries a ``Z^r`` index on each edge: the translation between the
fundamental-domain copies of its endpoints in the cover.  The cover spectrum
is the union over characters ``theta`` of the quotient DML spectra with
potential ``a_e = <theta, ind(e)>``.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from itertools import product
from typing import Iterable, Mapping, Sequence

import numpy as np

from .bracketing import BracketingReport, NeighbourhoodError, bracketing_report
from .dml import assemble_dml, spectrum
from .eigen import DEFAULT_TOL, hermitian_eigenvalues
from .graph import GraphError, betti_number, is_connected, is_in_neighbourhood, minimum_vertex_cover
from .intervals import Interval, IntervalSet
from .magnetics import lift_character
from .weights import WeightedGraph

DEFAULT_GRID = {1: 256, 2: 64}
FALLBACK_GRID = 16
THREADS_ENV = "GAPBRACK_THREADS"


class PeriodicError(GraphError):
    """Invalid periodic data or an unsupported periodic query."""


@dataclass(frozen=True)
class PeriodicQuotient:
    """A weighted quotient graph with a ``Z^rank`` index per edge.

    Edges missing from ``index`` get the zero vector.
    """

    base: WeightedGraph
    rank: int
    index: Mapping[int, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.rank < 1:
            raise PeriodicError(f"rank must be positive, got {self.rank}")
        g = self.base.graph
        full = {}
        for k in self.index:
            if not g.has_edge(k):
                raise PeriodicError(f"index given for unknown edge {k}")
        for e in g.edges:
            vec = tuple(int(x) for x in self.index.get(e.id, (0,) * self.rank))
            if len(vec) != self.rank:
                raise PeriodicError(f"edge {e.id} has index of length {len(vec)}, expected {self.rank}")
            full[e.id] = vec
        object.__setattr__(self, "index", full)

    @property
    def graph(self):
        return self.base.graph

    @property
    def connecting_edges(self) -> frozenset[int]:
        """Edges of nonzero index."""
        return frozenset(k for k, v in self.index.items() if any(v))


def _spans_lattice(rows: list[list[int]], r: int) -> bool:
    """True iff the integer rows generate all of ``Z^r`` (row Hermite reduction)."""
    rows = [list(x) for x in rows if any(x)]
    for col in range(r):
        while True:
            live = [x for x in rows if x[col] != 0]
            if len(live) <= 1:
                break
            live.sort(key=lambda x: abs(x[col]))
            pivot = live[0]
            for x in live[1:]:
                q = x[col] // pivot[col]
                for j in range(r):
                    x[j] -= q * pivot[j]
            rows = [x for x in rows if any(x)]
        live = [x for x in rows if x[col] != 0]
        if len(live) != 1 or abs(live[0][col]) != 1:
            return False
        rows = [x for x in rows if x is not live[0]]
    return True


def validate_quotient(q: PeriodicQuotient) -> PeriodicQuotient:
    """Check the base is connected and the indices generate ``Z^rank``.

    Raises
    ------
    PeriodicError
        If the indices span a proper sublattice, i.e. the cover falls apart.
    """
    if q.base.n == 0 or not is_connected(q.graph):
        raise PeriodicError("quotient graph must be connected and nonempty")
    rows = [list(v) for v in q.index.values()]
    if not _spans_lattice(rows, q.rank):
        raise PeriodicError(
            f"edge indices generate a proper subgroup of Z^{q.rank}: cover disconnected"
        )
    return q


class BandMethod(str, Enum):
    EXACT_TWO_POINT = "exact2point"
    GRID_SAMPLED = "grid"


@dataclass(frozen=True)
class BandStructure:
    """One band per quotient vertex.

    ``thetas`` and ``samples`` hold the characters visited and the sorted
    spectra found there (shape ``(points, n)``).
    """

    bands: tuple[Interval, ...]
    method: BandMethod
    grid: tuple[int, ...]
    thetas: np.ndarray
    samples: np.ndarray
    ambient: float

    @property
    def union(self) -> IntervalSet:
        return IntervalSet(self.bands, self.ambient)


def _thread_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        raise PeriodicError(f"{THREADS_ENV} must be an integer, got {raw!r}") from None
    return max(1, n)


def _floquet_parts(q: PeriodicQuotient):
    """Zero-potential matrix plus (row, col, coupling, index) for each connecting edge."""
    h0 = assemble_dml(q.base)
    m = q.base.vertex_weight
    parts = []
    for eid in sorted(q.connecting_edges):
        e = q.graph.edge(eid)
        me = q.base.edge_weight[eid]
        if e.is_loop:
            parts.append((e.tail, e.tail, me / m[e.tail], np.array(q.index[eid], dtype=float)))
        else:
            parts.append((e.tail, e.head, me / math.sqrt(m[e.tail] * m[e.head]), np.array(q.index[eid], dtype=float)))
    return h0, parts


def _floquet_matrix(h0, parts, theta: np.ndarray) -> np.ndarray:
    h = h0.copy()
    for t, hd, c, ind in parts:
        a = float(ind @ theta)
        if t == hd:
            h[t, t] += 2.0 * c - 2.0 * c * math.cos(a)
        else:
            z = c * (complex(math.cos(a), math.sin(a)) - 1.0)
            h[t, hd] -= z
            h[hd, t] -= z.conjugate()
    return h


def character_grid(rank: int, grid: int | Sequence[int]) -> tuple[tuple[int, ...], np.ndarray]:
    """Uniform grid ``2 pi j / N`` per dimension, as an array of shape ``(points, rank)``."""
    sizes = (int(grid),) * rank if np.isscalar(grid) else tuple(int(x) for x in grid)
    if len(sizes) != rank:
        raise PeriodicError(f"grid has {len(sizes)} dimensions, quotient has rank {rank}")
    if any(s < 1 for s in sizes):
        raise PeriodicError("grid resolution must be positive")
    axes = [2.0 * math.pi * np.arange(s) / s for s in sizes]
    pts = np.array(list(product(*axes)), dtype=float).reshape(-1, rank)
    return sizes, pts


def floquet_spectrum_sample(q: PeriodicQuotient, grid: int | Sequence[int] | None = None,
                            tol: float = DEFAULT_TOL, threads: int | None = None) -> BandStructure:
    """Quotient spectra on a uniform character grid, bridged into bands.

    Band ``k`` is ``[min, max]`` of the ``k``-th eigenvalue over the grid, so the
    union is an inner approximation of the cover spectrum.
    """
    validate_quotient(q)
    if grid is None:
        grid = DEFAULT_GRID.get(q.rank, FALLBACK_GRID)
    sizes, thetas = character_grid(q.rank, grid)
    h0, parts = _floquet_parts(q)

    def solve(theta):
        ev = hermitian_eigenvalues(_floquet_matrix(h0, parts, theta), tol)
        return np.where(np.abs(ev) <= tol, 0.0, ev)

    workers = threads if threads is not None else _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(solve, thetas))
    else:
        rows = [solve(t) for t in thetas]
    samples = np.array(rows).reshape(len(thetas), q.base.n)
    bands = tuple(Interval(samples[:, k].min(), samples[:, k].max()) for k in range(q.base.n))
    return BandStructure(bands, BandMethod.GRID_SAMPLED, sizes, thetas, samples, 2.0 * q.base.rho_inf)


def exact_two_point_eligible(q: PeriodicQuotient) -> bool:
    conn = q.connecting_edges
    return q.rank == 1 and len(conn) == 1 and abs(q.index[next(iter(conn))][0]) == 1


def z_exact_bands(q: PeriodicQuotient, tol: float = DEFAULT_TOL) -> BandStructure:
    """Bands from the spectra at ``theta = 0`` and ``theta = pi``.

    Valid for ``Z``-periodic quotients with a single connecting edge of index
    ``+-1``, where each eigenvalue branch is monotone on ``[0, pi]``.
    """
    validate_quotient(q)
    if not exact_two_point_eligible(q):
        raise PeriodicError(
            "exact two-point bands need rank 1 and exactly one connecting edge with index +-1; "
            "use floquet_spectrum_sample instead"
        )
    thetas = np.array([[0.0], [math.pi]])
    rows = [spectrum(q.base, lift_character(q, t), tol).array() for t in thetas]
    samples = np.array(rows)
    bands = tuple(Interval(min(a, b), max(a, b)) for a, b in zip(samples[0], samples[1]))
    return BandStructure(bands, BandMethod.EXACT_TWO_POINT, (2,), thetas, samples, 2.0 * q.base.rho_inf)


def periodic_bracketing(q: PeriodicQuotient, vertex_set: Iterable[int] | None = None,
                        tol: float = DEFAULT_TOL) -> BracketingReport:
    """Potential-independent enclosure of the cover spectrum.

    Virtualises every connecting edge; ``vertex_set`` defaults to a smallest
    vertex cover of them.
    """
    validate_quotient(q)
    e0 = q.connecting_edges
    if vertex_set is None:
        v0 = minimum_vertex_cover(q.graph, e0)
    else:
        v0 = frozenset(vertex_set)
        if not is_in_neighbourhood(q.graph, e0, v0):
            raise NeighbourhoodError(
                f"vertex set {sorted(v0)} does not cover the connecting edges {sorted(e0)}"
            )
    return bracketing_report(q.base, e0, v0, tol)


def is_maximal_abelian(q: PeriodicQuotient) -> bool:
    """The cover group has full rank ``Betti(G)``."""
    return q.rank == betti_number(q.graph)
