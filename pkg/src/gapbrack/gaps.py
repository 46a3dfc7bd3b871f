"""Magnetic spectral gaps: centre vertices, the delta criterion and Betti-1 rules.

A magnetic gap is a subinterval of ``[0, 2 rho_inf]`` missed by the DML
spectrum for every vector potential.  When ``G - A`` is a tree for some set
``A`` of edges at one vertex ``v0``, every potential is gauge equivalent to one
supported on ``A``, so bracketing with ``E0 = A``, ``V0 = {v0}`` encloses all
of them at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterable

from .bracketing import bracketing_report
from .dml import spectrum
from .eigen import DEFAULT_TOL
from .graph import Graph, GraphError, betti_number, degree, degrees, is_connected, is_cycle_graph, is_tree
from .intervals import IntervalSet, interval_complement
from .periodic import (
    PeriodicError,
    PeriodicQuotient,
    exact_two_point_eligible,
    floquet_spectrum_sample,
    validate_quotient,
    z_exact_bands,
)
from .weights import Scheme, WeightedGraph, incident_weight


@dataclass(frozen=True)
class CentreVertexCertificate:
    v0: int
    cycle_edges: frozenset[int]
    delta: float
    scheme: Scheme


class CertificateKind(str, Enum):
    CENTRE_VERTEX_DELTA = "CentreVertexDelta"
    BETTI1_DEGREE1 = "Betti1Degree1"
    BRACKETING_COMPLEMENT = "BracketingComplement"
    TREE = "Tree"
    NONE = "None"


class Betti1Class(str, Enum):
    CYCLE_NO_GAP = "CycleNoGap"
    DEGREE1_GAP = "Degree1Gap"


@dataclass(frozen=True)
class GapCertificate:
    """Outcome of :func:`certify_magnetic_gap`.

    ``kind == NONE`` means the criteria were inconclusive, except that
    ``classification == CYCLE_NO_GAP`` proves there is no magnetic gap.
    ``gaps`` lists certified gap intervals when they were computed.
    """

    kind: CertificateKind
    guaranteed_gap_measure: float = 0.0
    witness: CentreVertexCertificate | int | None = None
    gaps: IntervalSet | None = None
    classification: Betti1Class | None = None

    @property
    def found(self) -> bool:
        return self.kind is not CertificateKind.NONE


def _other_end(g: Graph, e: int, v0: int) -> int:
    return g.edge(e).other(v0)


def is_centre_pair(g: Graph, v0: int, cycle_edges: Iterable[int]) -> bool:
    a = frozenset(cycle_edges)
    if not a or not is_connected(g) or len(a) != betti_number(g):
        return False
    for e in a:
        edge = g.edge(e)
        if v0 not in (edge.tail, edge.head):
            return False
    return is_tree(g.without_edges(a))


def find_centre_vertices(g: Graph) -> list[tuple[int, frozenset[int]]]:
    """Every ``(v0, A)`` with ``A`` a set of edges at ``v0`` and ``G - A`` a tree.

    Ordered by vertex id, then by the sorted edge ids of ``A``.  Trees have no
    centre vertex and give an empty list.
    """
    if not is_connected(g):
        raise GraphError("find_centre_vertices requires a connected graph")
    b = betti_number(g)
    if b == 0:
        return []
    out = []
    for v in g.vertices:
        star = sorted(e.id for e in g.incident(v))
        for combo in combinations(star, b):
            if is_tree(g.without_edges(combo)):
                out.append((v, frozenset(combo)))
    return out


def _require_pair(g: Graph, v0: int, a: frozenset[int]) -> None:
    if not is_centre_pair(g, v0, a):
        raise GraphError(f"({v0}, {sorted(a)}) is not a centre vertex with cycle edges")


def delta_value(w: WeightedGraph, v0: int, cycle_edges: Iterable[int]) -> float:
    """``rho(v0) - sum_e m_e / m((v0)_e) - m(A) / m(v0)``.

    ``(v0)_e`` is the far endpoint of ``e``; for a loop it is ``v0`` itself.
    """
    a = frozenset(cycle_edges)
    g = w.graph
    _require_pair(g, v0, a)
    m, me = w.vertex_weight, w.edge_weight
    far = sum(me[e] / m[_other_end(g, e, v0)] for e in a)
    return w.rho(v0) - far - sum(me[e] for e in a) / m[v0]


def delta_by_scheme(w: WeightedGraph, v0: int, cycle_edges: Iterable[int], scheme: Scheme | str) -> float:
    """Closed form of :func:`delta_value` for a canonical weight scheme.

    Raises
    ------
    GraphError
        If ``w`` was not built from ``scheme``.
    """
    scheme = Scheme(scheme)
    if w.scheme is not scheme or scheme is Scheme.EXPLICIT:
        raise GraphError(f"weights follow {w.scheme.value!r}, not {scheme.value!r}")
    a = frozenset(cycle_edges)
    g = w.graph
    _require_pair(g, v0, a)
    me = w.edge_weight
    far = [_other_end(g, e, v0) for e in a]
    if scheme is Scheme.STANDARD:
        deg = degrees(g)
        return 1.0 - sum(1.0 / deg[u] for u in far) - len(a) / deg[v0]
    if scheme is Scheme.COMBINATORIAL:
        return float(degree(g, v0) - 2 * len(a))
    star = incident_weight(g, me)
    ma = sum(me[e] for e in a)
    if scheme is Scheme.ELECTRIC:
        return star[v0] - 2.0 * ma
    return 1.0 - sum(me[e] / star[u] for e, u in zip(a, far)) - ma / star[v0]


def betti1_classification(g: Graph) -> Betti1Class:
    """Cycle graphs have no magnetic gap; any other Betti-1 graph has a leaf and a gap.

    Stated for standard and combinatorial weights.
    """
    if betti_number(g) != 1:
        raise GraphError("betti1_classification needs a connected graph of Betti number 1")
    return Betti1Class.CYCLE_NO_GAP if is_cycle_graph(g) else Betti1Class.DEGREE1_GAP


def _leaf(g: Graph) -> int | None:
    return next((v for v, d in enumerate(degrees(g)) if d == 1), None)


def certify_magnetic_gap(w: WeightedGraph, tol: float = DEFAULT_TOL) -> GapCertificate:
    """Look for a proof that some magnetic spectral gap exists.

    Tried in order: trees (the spectrum does not depend on the potential),
    the best delta over all centre pairs, the Betti-1 leaf rule, and finally
    the gaps left by bracketing at each centre pair.
    """
    g = w.graph
    if not is_connected(g):
        raise GraphError("certify_magnetic_gap requires a connected graph")
    top = 2.0 * w.rho_inf
    b = betti_number(g)
    if b == 0:
        sigma = spectrum(w, tol=tol)
        pts = IntervalSet(tuple((x, x) for x in sigma), top).widen(tol) if top > 0 else IntervalSet((), top)
        gaps = interval_complement(pts, top, min_width=2 * tol)
        return GapCertificate(CertificateKind.TREE, top, None, gaps)

    pairs = find_centre_vertices(g)
    best = None
    for v0, a in pairs:
        d = delta_value(w, v0, a)
        if best is None or d > best.delta:
            best = CentreVertexCertificate(v0, a, d, w.scheme)
    if best is not None and best.delta > tol:
        gaps = bracketing_report(w, best.cycle_edges, {best.v0}, tol).complement_gaps
        return GapCertificate(CertificateKind.CENTRE_VERTEX_DELTA, best.delta, best, gaps)

    classification = None
    if b == 1 and w.scheme in (Scheme.STANDARD, Scheme.COMBINATORIAL):
        classification = betti1_classification(g)

    found = None
    for v0, a in pairs:
        gaps = bracketing_report(w, a, {v0}, tol).complement_gaps
        if gaps and (found is None or gaps.measure > found[1].measure):
            found = ((v0, a), gaps)

    if classification is Betti1Class.DEGREE1_GAP:
        measure = found[1].measure if found else 0.0
        return GapCertificate(CertificateKind.BETTI1_DEGREE1, measure, _leaf(g),
                              found[1] if found else None, classification)
    if found is not None:
        (v0, a), gaps = found
        witness = CentreVertexCertificate(v0, a, delta_value(w, v0, a), w.scheme)
        return GapCertificate(CertificateKind.BRACKETING_COMPLEMENT, gaps.measure, witness, gaps, classification)
    return GapCertificate(CertificateKind.NONE, 0.0, None, None, classification)


@dataclass(frozen=True)
class FSPReport:
    """Full-spectrum verdict for a ``Z``-periodic cover of a Betti-1 quotient.

    ``full_spectrum`` follows from the quotient being a cycle; ``certificate``
    and ``band_gap_measure`` are independent cross-checks and ``consistent``
    records whether they agree with it.
    """

    is_cycle: bool
    has_degree1_vertex: bool
    full_spectrum: bool
    certificate: GapCertificate
    band_gap_measure: float
    consistent: bool


def fsp_z_tree_classify(q: PeriodicQuotient, tol: float = DEFAULT_TOL, grid: int = 256) -> FSPReport:
    """Decide whether the tree cover of a Betti-1 quotient has spectrum ``[0, 2 rho_inf]``.

    Bands come from the two-point formula when it applies and from a grid
    sweep otherwise; a sampled band union can only overstate the gaps by
    the resolution of the grid.
    """
    validate_quotient(q)
    g = q.graph
    if q.rank != 1 or betti_number(g) != 1:
        raise PeriodicError("fsp_z_tree_classify needs rank 1 and a quotient of Betti number 1")
    if q.base.scheme not in (Scheme.STANDARD, Scheme.COMBINATORIAL):
        raise PeriodicError("the classification holds for standard or combinatorial weights only")
    cyc = is_cycle_graph(g)
    leaf = _leaf(g) is not None
    cert = certify_magnetic_gap(q.base, tol)
    bands = z_exact_bands(q, tol) if exact_two_point_eligible(q) else floquet_spectrum_sample(q, grid, tol)
    measure = interval_complement(bands.union.widen(tol), min_width=2 * tol).measure
    consistent = (cyc != leaf) and (cert.found != cyc) and ((measure > 0) != cyc)
    return FSPReport(cyc, leaf, cyc, cert, measure, consistent)
