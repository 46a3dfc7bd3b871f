"""Command-line interface: ``gapbrack {spectrum,bracket,certify,bands}``.

Exit codes: 0 success, 1 certify found no certificate, 2 invalid input,
3 eigensolver failure.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import math
import sys
import time
from pathlib import Path

from . import __version__
from .bracketing import bracketing_report
from .dml import spectrum
from .eigen import DEFAULT_TOL, EigenError
from .fileformat import GraphDocument, parse_angle, parse_graph_file
from .fixtures import fixture_text, load_fixture
from .gaps import Betti1Class, CertificateKind, CentreVertexCertificate, certify_magnetic_gap
from .graph import GraphError, bipartition
from .intervals import IntervalSet, interval_intersection, kappa_reflect
from .magnetics import VectorPotential
from .periodic import exact_two_point_eligible, floquet_spectrum_sample, z_exact_bands
from .weights import Scheme

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_INVALID, EXIT_SOLVER = 0, 1, 2, 3
FIXTURE_PREFIX = "fixture:"


def fmt(x: float) -> str:
    return f"{x:.12g}"


def fmt_set(s: IntervalSet) -> str:
    if not s:
        return "(empty)"
    parts = []
    for iv in s:
        parts.append(f"{{{fmt(iv.lo)}}}" if iv.is_degenerate else f"[{fmt(iv.lo)}, {fmt(iv.hi)}]")
    return " U ".join(parts)


def read_input(source: str) -> tuple[GraphDocument, str]:
    """Parse a path, or ``fixture:NAME`` for a bundled graph; also return the raw text."""
    if source.startswith(FIXTURE_PREFIX):
        name = source[len(FIXTURE_PREFIX):]
        try:
            doc = load_fixture(name)
        except KeyError as exc:
            raise GraphError(str(exc.args[0])) from None
        text = fixture_text(name) if not name.startswith("suzuki_") else name
        return doc, text
    try:
        text = Path(source).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphError(f"cannot read {source}: {exc.strerror}") from None
    return parse_graph_file(text), text


def _write_csv(path: str | None, header: list[str], rows: list[list]) -> None:
    if path is None:
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(x) if isinstance(x, float) else x for x in row])


def _set_json(s: IntervalSet) -> list[list[float]]:
    return [[iv.lo, iv.hi] for iv in s]


def _emit_report(args, command: str, text: str, body: dict, started: float) -> None:
    if not args.json:
        return
    doc = {
        "command": command,
        "input_sha256": hashlib.sha256(text.encode("utf-8")).hexdigest(),
        "tol": args.tol,
        **body,
        "elapsed_s": time.perf_counter() - started,
    }
    Path(args.json).write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")


def _parse_alpha(items: list[str], doc: GraphDocument) -> VectorPotential:
    values = dict(doc.potential.values)
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise GraphError(f"--alpha-edge expects id=value, got {item!r}")
        try:
            values[int(key)] = parse_angle(value)
        except ValueError:
            raise GraphError(f"--alpha-edge expects id=value, got {item!r}") from None
    return VectorPotential(values)


def cmd_spectrum(args) -> int:
    started = time.perf_counter()
    doc, text = read_input(args.file)
    a = _parse_alpha(args.alpha_edge, doc)
    sigma = spectrum(doc.weighted, a, args.tol)
    print(" ".join(fmt(x) for x in sigma))
    _write_csv(args.out, ["k", "lambda"], [[k + 1, x] for k, x in enumerate(sigma)])
    _emit_report(args, "spectrum", text, {"spectrum": list(sigma.values)}, started)
    return EXIT_OK


def _check_kappa(doc: GraphDocument) -> None:
    w = doc.weighted
    if bipartition(w.graph) is None:
        raise GraphError("--kappa needs a bipartite graph")
    if w.scheme not in (Scheme.STANDARD, Scheme.NORMALISED):
        raise GraphError("--kappa needs standard or normalised weights")


def cmd_bracket(args) -> int:
    started = time.perf_counter()
    doc, text = read_input(args.file)
    if args.kappa:
        _check_kappa(doc)
    groups = args.virtual_vertices or [[]]
    reports = [bracketing_report(doc.weighted, args.virtual_edges or [], g, args.tol) for g in groups]
    rows, body = [], {"reports": []}
    combined = None
    for n, r in enumerate(reports):
        tag = f" (vertex set {n + 1})" if len(reports) > 1 else ""
        print(f"virtual edges: {sorted(r.edge_set)}  virtual vertices: {sorted(r.vertex_set)}{tag}")
        print("lower: " + " ".join(fmt(x) for x in r.lower))
        print("upper: " + " ".join(fmt(x) for x in r.upper))
        for k, iv in enumerate(r.intervals, start=1):
            print(f"J_{k} = [{fmt(iv.lo)}, {fmt(iv.hi)}]")
            rows.append([n + 1, "J", k, iv.lo, iv.hi])
        loc = r.localising_set
        if args.kappa:
            loc = interval_intersection(loc, kappa_reflect(loc))
        print(f"localising set: {fmt_set(r.localising_set)}")
        if args.kappa:
            print(f"with kappa: {fmt_set(loc)}")
        print(f"gaps: {fmt_set(r.complement_gaps)}")
        print(f"trace bound: {fmt(r.trace_bound)}")
        for iv in r.complement_gaps:
            rows.append([n + 1, "gap", "", iv.lo, iv.hi])
        combined = loc if combined is None else interval_intersection(combined, loc)
        body["reports"].append({
            "edge_set": sorted(r.edge_set),
            "vertex_set": sorted(r.vertex_set),
            "lower": list(r.lower.values),
            "upper": list(r.upper.values),
            "intervals": [[iv.lo, iv.hi] for iv in r.intervals],
            "localising_set": _set_json(r.localising_set),
            "gaps": _set_json(r.complement_gaps),
            "trace_bound": r.trace_bound,
        })
    if len(reports) > 1 or args.kappa:
        print(f"combined enclosure: {fmt_set(combined)}")
    for iv in combined:
        rows.append(["all", "enclosure", "", iv.lo, iv.hi])
    body["enclosure"] = _set_json(combined)
    _write_csv(args.out, ["report", "kind", "k", "lo", "hi"], rows)
    _emit_report(args, "bracket", text, body, started)
    return EXIT_OK


def cmd_certify(args) -> int:
    started = time.perf_counter()
    doc, text = read_input(args.file)
    cert = certify_magnetic_gap(doc.weighted, args.tol)
    print(f"kind: {cert.kind.value}")
    wit = cert.witness
    if isinstance(wit, CentreVertexCertificate):
        print(f"centre vertex: {wit.v0}  cycle edges: {sorted(wit.cycle_edges)}  delta: {fmt(wit.delta)}")
    elif wit is not None:
        print(f"degree-1 vertex: {wit}")
    if cert.kind is CertificateKind.TREE:
        print("verdict: tree, magnetic gaps equal the spectral gaps")
    elif cert.found:
        print(f"verdict: magnetic gap, measure >= {fmt(cert.guaranteed_gap_measure)}")
    elif cert.classification is Betti1Class.CYCLE_NO_GAP:
        print("verdict: no magnetic gap (cycle)")
    else:
        print("verdict: inconclusive")
    if cert.gaps is not None:
        print(f"gaps: {fmt_set(cert.gaps)}")
    _emit_report(args, "certify", text, {
        "kind": cert.kind.value,
        "guaranteed_gap_measure": cert.guaranteed_gap_measure,
        "classification": cert.classification.value if cert.classification else None,
        "gaps": _set_json(cert.gaps) if cert.gaps is not None else None,
    }, started)
    return EXIT_OK if cert.found else EXIT_INCONCLUSIVE


def cmd_bands(args) -> int:
    started = time.perf_counter()
    doc, text = read_input(args.file)
    q = doc.quotient
    if q is None:
        raise GraphError("bands needs a periodic file ([meta] rank and edge indices)")
    if args.exact:
        if not exact_two_point_eligible(q):
            raise GraphError("--exact needs rank 1 and a single connecting edge of index +-1")
        bands = z_exact_bands(q, args.tol)
    else:
        bands = floquet_spectrum_sample(q, args.grid, args.tol)
    print(f"method: {bands.method.value}")
    for k, iv in enumerate(bands.bands, start=1):
        print(f"band {k}: [{fmt(iv.lo)}, {fmt(iv.hi)}]")
    print(f"union: {fmt_set(bands.union)}")
    header = [f"theta_{i + 1}" for i in range(q.rank)] + ["k", "lambda"]
    rows = []
    for theta, values in zip(bands.thetas, bands.samples):
        for k, x in enumerate(values, start=1):
            rows.append([float(t) for t in theta] + [k, float(x)])
    for tag, pick in (("min", lambda iv: iv.lo), ("max", lambda iv: iv.hi)):
        for k, iv in enumerate(bands.bands, start=1):
            rows.append([tag] * q.rank + [k, pick(iv)])
    _write_csv(args.out, header, rows)
    _emit_report(args, "bands", text, {
        "method": bands.method.value,
        "bands": [[iv.lo, iv.hi] for iv in bands.bands],
        "union": _set_json(bands.union),
    }, started)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gapbrack", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="graph file, or fixture:NAME for a bundled example")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigensolver tolerance (default 1e-10)")
    common.add_argument("--out", help="write a CSV table to this path")
    common.add_argument("--json", help="write a machine-readable run report to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="eigenvalues of the DML")
    p.add_argument("--alpha-edge", nargs="+", metavar="ID=ANGLE", help="override edge angles, e.g. 1=pi/2")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("bracket", parents=[common], help="bracketing intervals and certified gaps")
    p.add_argument("--virtual-edges", nargs="+", type=int, metavar="ID", help="edges to virtualise")
    p.add_argument("--virtual-vertices", nargs="+", type=int, action="append", metavar="V",
                   help="vertices to virtualise; repeat to intersect several enclosures")
    p.add_argument("--kappa", action="store_true", help="intersect with the reflection x -> 2 - x")
    p.set_defaults(func=cmd_bracket)

    p = sub.add_parser("certify", parents=[common], help="certify a magnetic spectral gap")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("bands", parents=[common], help="band structure of a periodic quotient")
    p.add_argument("--grid", type=int, nargs="+", help="grid points per dimension")
    p.add_argument("--exact", action="store_true", help="two-point formula for a single connecting edge")
    p.set_defaults(func=cmd_bands)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "grid", None) is not None and len(args.grid) == 1:
        args.grid = args.grid[0]
    if not (args.tol > 0 and math.isfinite(args.tol)):
        print("error: --tol must be a positive number", file=sys.stderr)
        return EXIT_INVALID
    try:
        return args.func(args)
    except EigenError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except (GraphError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
