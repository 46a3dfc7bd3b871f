"""Spectral order, bracketing intervals and the trace bound on their measure."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .dml import (
    Spectrum,
    assemble_compressed_dml,
    assemble_dml,
    spectrum,
    virtualise_edges,
    compressed_spectrum,
    virtualise_vertices,
)
from .eigen import DEFAULT_TOL, EigenError
from .graph import GraphError, is_in_neighbourhood
from .intervals import Interval, IntervalSet, interval_complement
from .weights import WeightedGraph


class NeighbourhoodError(GraphError):
    """The virtual vertices do not touch every virtual edge."""


def spectrally_smaller(lower: Spectrum, upper: Spectrum, tol: float = DEFAULT_TOL) -> bool:
    """``lower <= upper`` in the spectral order.

    Needs ``len(lower) >= len(upper)`` and ``lower[k] <= upper[k] + tol`` for
    every index of ``upper``.
    """
    if len(lower) < len(upper):
        return False
    return all(lo <= up + tol for lo, up in zip(lower, upper))


@dataclass(frozen=True)
class BracketingReport:
    """Enclosure of every spectrum of potentials supported on ``edge_set``.

    ``localising_set`` is the union of the ``intervals`` widened by ``tol``;
    ``complement_gaps`` holds the certified gaps in ``[0, 2 rho_inf]``.
    """

    edge_set: frozenset[int]
    vertex_set: frozenset[int]
    lower: Spectrum
    upper: Spectrum
    padded_upper: tuple[float, ...]
    intervals: tuple[Interval, ...]
    localising_set: IntervalSet
    complement_gaps: IntervalSet
    trace_lower: float
    trace_upper: float
    rho_inf: float
    tol: float

    @property
    def trace_bound(self) -> float:
        return trace_gap_bound(self)

    @property
    def dimension_drop(self) -> int:
        return len(self.lower) - len(self.upper)


def bracketing_report(w: WeightedGraph, edge_set: Iterable[int] = (), vertex_set: Iterable[int] = (),
                      tol: float = DEFAULT_TOL, method: str = "jacobi") -> BracketingReport:
    """Bracket the DML of ``w`` between edge- and vertex-virtualised operators.

    The lower operator drops ``edge_set``; the upper operator compresses onto
    the vertices outside ``vertex_set`` and is padded with ``2 rho_inf`` of
    ``w``.  Both are computed at zero potential and the resulting intervals
    hold for every potential supported on ``edge_set``.  ``vertex_set`` may be
    all of ``V``, in which case every upper value is padding.

    Raises
    ------
    NeighbourhoodError
        If some edge of ``edge_set`` has no endpoint in ``vertex_set``.
    """
    e0 = frozenset(int(e) for e in edge_set)
    v0 = frozenset(int(v) for v in vertex_set)
    g = w.graph
    for e in e0:
        g.edge(e)
    if not is_in_neighbourhood(g, e0, v0):
        bad = sorted(e for e in e0 if g.edge(e).tail not in v0 and g.edge(e).head not in v0)
        raise NeighbourhoodError(
            f"virtual vertices {sorted(v0)} miss both endpoints of virtual edges {bad}; "
            "the enclosure would depend on the potential"
        )

    w_minus = virtualise_edges(w, e0)
    lower = spectrum(w_minus, tol=tol, method=method)
    trace_lower = float(np.trace(assemble_dml(w_minus)).real)
    if len(v0) == w.n:
        upper = Spectrum(())
        trace_upper = 0.0
    else:
        vv = virtualise_vertices(w, v0)
        upper = compressed_spectrum(vv, tol=tol, method=method)
        trace_upper = float(np.trace(assemble_compressed_dml(vv)).real)

    top = 2.0 * w.rho_inf
    padded = tuple(upper.values) + (top,) * (len(lower) - len(upper))
    intervals = []
    for k, (lo, hi) in enumerate(zip(lower, padded)):
        if lo > hi:
            if lo - hi > 2 * tol:
                raise EigenError(f"bracketing violated at k={k}: {lo} > {hi}")
            lo = hi
        intervals.append(Interval(lo, hi))
    loc = IntervalSet(tuple(intervals), top).widen(tol)
    gaps = interval_complement(loc, top, min_width=2 * tol)
    return BracketingReport(e0, v0, lower, upper, padded, tuple(intervals), loc, gaps,
                            trace_lower, trace_upper, w.rho_inf, tol)


def trace_gap_bound(report: BracketingReport) -> float:
    """Upper bound ``Tr(S+) - Tr(S-) + 2 rho_inf (n- - n+)`` on the measure of J."""
    return report.trace_upper - report.trace_lower + 2.0 * report.rho_inf * report.dimension_drop


def guaranteed_gap_measure(report: BracketingReport) -> float:
    """Lower bound on the gap measure implied by the trace bound alone.

    Positive exactly when the bracketing intervals cannot cover ``[0, 2 rho_inf]``.
    """
    return max(0.0, 2.0 * report.rho_inf - trace_gap_bound(report))
