"""Line-oriented text format for weighted graphs, potentials and periodic data.

Grammar::

    # comment (anywhere; also trailing)
    [meta]
    name = c6                 optional
    scheme = standard         standard | combinatorial | normalised | electric | explicit
    rank = 1                  optional; enables edge indices

    [vertices]
    count = 6
    0 2.5                     per-vertex weight, explicit scheme only

    [edges]
    0 1 weight=2 index=1 alpha=pi/2

Edge ids follow the order of the edge lines.  ``index`` is a comma-separated
integer vector of length ``rank``.  ``alpha`` accepts a float or a multiple of
``pi`` such as ``pi``, ``-pi/3``, ``2*pi/5``, ``0.5pi``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .graph import GraphError, build_graph
from .magnetics import ZERO, VectorPotential
from .periodic import PeriodicQuotient
from .weights import Scheme, WeightedGraph, WeightScheme, apply_weight_scheme

SECTIONS = ("meta", "vertices", "edges")
META_KEYS = ("name", "scheme", "rank")
EDGE_KEYS = ("weight", "index", "alpha")
_PI_RE = re.compile(r"^([+-]?\d*\.?\d*)\*?pi(?:/(\d+(?:\.\d*)?))?$")


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class GraphDocument:
    weighted: WeightedGraph
    potential: VectorPotential
    quotient: PeriodicQuotient | None
    name: str | None = None


def parse_angle(text: str) -> float:
    t = text.strip().replace(" ", "")
    m = _PI_RE.match(t)
    if m:
        coef = m.group(1)
        if coef in ("", "+"):
            c = 1.0
        elif coef == "-":
            c = -1.0
        else:
            c = float(coef)
        div = float(m.group(2)) if m.group(2) else 1.0
        return c * math.pi / div
    x = float(t)
    if not math.isfinite(x):
        raise ValueError(f"angle must be finite, got {text!r}")
    return x


def _number(text: str, what: str, line: int) -> float:
    try:
        return float(text)
    except ValueError:
        raise ParseError(f"{what} must be a number, got {text!r}", line) from None


def _integer(text: str, what: str, line: int) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}", line) from None


def parse_graph_file(text: str) -> GraphDocument:
    """Parse a graph document.

    Defaults: standard weights, zero potential, zero indices.  Structural
    errors from graph construction are re-raised with their own message.

    Raises
    ------
    ParseError
        On syntax errors, unknown sections or fields, and out-of-range ids.
    """
    section = None
    meta: dict[str, str] = {}
    count = None
    vweights: dict[int, float] = {}
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(f"malformed section header {line!r}", lineno)
            section = line[1:-1].strip().lower()
            if section not in SECTIONS:
                raise ParseError(f"unknown section [{section}]", lineno)
            continue
        if section is None:
            raise ParseError("content before the first section header", lineno)
        if section == "meta":
            key, sep, value = line.partition("=")
            key = key.strip().lower()
            if not sep:
                raise ParseError(f"expected 'key = value', got {line!r}", lineno)
            if key not in META_KEYS:
                raise ParseError(f"unknown meta field {key!r}", lineno)
            if key in meta:
                raise ParseError(f"duplicate meta field {key!r}", lineno)
            meta[key] = (value.strip(), lineno)
        elif section == "vertices":
            if "=" in line:
                key, _, value = line.partition("=")
                if key.strip().lower() != "count":
                    raise ParseError(f"unknown vertices field {key.strip()!r}", lineno)
                count = _integer(value.strip(), "vertex count", lineno)
                if count < 0:
                    raise ParseError("vertex count must be nonnegative", lineno)
            else:
                parts = line.split()
                if len(parts) != 2:
                    raise ParseError(f"expected '<vertex> <weight>', got {line!r}", lineno)
                v = _integer(parts[0], "vertex id", lineno)
                if v in vweights:
                    raise ParseError(f"duplicate weight for vertex {v}", lineno)
                vweights[v] = (_number(parts[1], "vertex weight", lineno), lineno)
        else:
            parts = line.split()
            if len(parts) < 2:
                raise ParseError(f"expected '<tail> <head> [key=value ...]', got {line!r}", lineno)
            tail = _integer(parts[0], "tail", lineno)
            head = _integer(parts[1], "head", lineno)
            fields = {}
            for tok in parts[2:]:
                key, sep, value = tok.partition("=")
                if not sep or key not in EDGE_KEYS:
                    raise ParseError(f"unknown edge field {tok!r}", lineno)
                if key in fields:
                    raise ParseError(f"duplicate edge field {key!r}", lineno)
                fields[key] = value
            edges.append((tail, head, fields, lineno))

    if count is None:
        raise ParseError("missing 'count' in [vertices]")
    scheme_text, scheme_line = meta.get("scheme", ("standard", None))
    try:
        scheme = Scheme(scheme_text.lower())
    except ValueError:
        raise ParseError(f"unknown weight scheme {scheme_text!r}", scheme_line) from None
    rank = None
    if "rank" in meta:
        rank = _integer(meta["rank"][0], "rank", meta["rank"][1])
        if rank < 1:
            raise ParseError("rank must be positive", meta["rank"][1])

    for v, (_, lineno) in vweights.items():
        if not 0 <= v < count:
            raise ParseError(f"vertex {v} outside 0..{count - 1}", lineno)
    if vweights and scheme is not Scheme.EXPLICIT:
        raise ParseError("vertex weights are only allowed with the explicit scheme",
                         min(ln for _, ln in vweights.values()))
    if scheme is Scheme.EXPLICIT and len(vweights) != count:
        missing = sorted(set(range(count)) - set(vweights))
        raise ParseError(f"explicit scheme needs a weight for every vertex; missing {missing}")

    edge_weights, alphas, index = {}, {}, {}
    for eid, (tail, head, fields, lineno) in enumerate(edges):
        for end in (tail, head):
            if not 0 <= end < count:
                raise ParseError(f"edge {eid} ({tail}->{head}) has endpoint {end} outside 0..{count - 1}", lineno)
        if "weight" in fields:
            if scheme in (Scheme.STANDARD, Scheme.COMBINATORIAL):
                raise ParseError(f"edge weights are fixed to 1 under the {scheme.value} scheme", lineno)
            wt = _number(fields["weight"], "edge weight", lineno)
            if not wt > 0:
                raise ParseError(f"edge weight must be positive, got {wt}", lineno)
            edge_weights[eid] = wt
        if "alpha" in fields:
            try:
                alphas[eid] = parse_angle(fields["alpha"])
            except ValueError:
                raise ParseError(f"cannot read angle {fields['alpha']!r}", lineno) from None
        if "index" in fields:
            if rank is None:
                raise ParseError("edge index given but [meta] has no rank", lineno)
            vec = tuple(_integer(x, "index entry", lineno) for x in fields["index"].split(","))
            if len(vec) != rank:
                raise ParseError(f"index has {len(vec)} entries, rank is {rank}", lineno)
            index[eid] = vec

    g = build_graph([(t, h) for t, h, _, _ in edges], count)
    if scheme is Scheme.EXPLICIT:
        ew = {e.id: edge_weights.get(e.id, 1.0) for e in g.edges}
        w = apply_weight_scheme(g, WeightScheme.explicit([vweights[v][0] for v in range(count)], ew))
    else:
        w = apply_weight_scheme(g, WeightScheme(scheme, edge_weights or None))
    a = VectorPotential(alphas) if alphas else ZERO
    q = PeriodicQuotient(w, rank, index) if rank is not None else None
    name = meta["name"][0] if "name" in meta else None
    return GraphDocument(w, a, q, name)


def load_graph_file(path) -> GraphDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_graph_file(fh.read())


def format_graph_file(doc: GraphDocument) -> str:
    """Serialise ``doc`` so that :func:`parse_graph_file` gives it back."""
    w = doc.weighted
    lines = ["[meta]"]
    if doc.name:
        lines.append(f"name = {doc.name}")
    lines.append(f"scheme = {w.scheme.value}")
    if doc.quotient is not None:
        lines.append(f"rank = {doc.quotient.rank}")
    lines += ["", "[vertices]", f"count = {w.n}"]
    if w.scheme is Scheme.EXPLICIT:
        lines += [f"{v} {m!r}" for v, m in enumerate(w.vertex_weight)]
    lines += ["", "[edges]"]
    for e in w.graph.edges:
        parts = [str(e.tail), str(e.head)]
        if w.scheme not in (Scheme.STANDARD, Scheme.COMBINATORIAL):
            parts.append(f"weight={w.edge_weight[e.id]!r}")
        if doc.quotient is not None and any(doc.quotient.index[e.id]):
            parts.append("index=" + ",".join(str(x) for x in doc.quotient.index[e.id]))
        if doc.potential[e.id] != 0.0:
            parts.append(f"alpha={doc.potential[e.id]!r}")
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
