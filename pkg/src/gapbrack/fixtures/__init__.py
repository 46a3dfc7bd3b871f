"""Bundled example graphs.

``load_fixture(name)`` parses ``<name>.graph`` from this package; the
``suzuki`` family is generated on demand.
"""

from __future__ import annotations

from importlib import resources

from ..fileformat import GraphDocument, parse_graph_file
from ..graph import build_graph
from ..magnetics import ZERO
from ..periodic import PeriodicQuotient
from ..weights import WeightScheme, apply_weight_scheme


def fixture_names() -> list[str]:
    return sorted(p.name[: -len(".graph")] for p in resources.files(__package__).iterdir()
                  if p.name.endswith(".graph"))


def fixture_text(name: str) -> str:
    path = resources.files(__package__) / f"{name}.graph"
    if not path.is_file():
        raise KeyError(f"no fixture named {name!r}; available: {', '.join(fixture_names())}")
    return path.read_text(encoding="utf-8")


def load_fixture(name: str) -> GraphDocument:
    if name.startswith("suzuki_"):
        return suzuki_quotient(int(name.split("_", 1)[1]))
    return parse_graph_file(fixture_text(name))


def suzuki_quotient(n: int, scheme: WeightScheme | None = None) -> GraphDocument:
    """Cycle ``0 -> 1 -> ... -> n-1 -> 0`` with a pendant vertex ``n`` at 0.

    The closing edge ``n-1 -> 0`` has index 1, so the cover is a line of
    ``n``-cycles with one leaf per cell.  ``n = 1`` is a loop, ``n = 2`` a
    double edge.
    """
    if n < 1:
        raise ValueError("suzuki_quotient needs n >= 1")
    edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0), (0, n)]
    g = build_graph(edges, n + 1)
    w = apply_weight_scheme(g, scheme or WeightScheme.standard())
    q = PeriodicQuotient(w, 1, {n - 1: (1,)})
    return GraphDocument(w, ZERO, q, f"suzuki_{n}")
