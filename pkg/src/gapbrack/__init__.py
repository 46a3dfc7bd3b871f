"""Magnetic Laplacians on weighted graphs: spectra, bracketing and gap certificates."""

from .bracketing import (
    BracketingReport,
    NeighbourhoodError,
    bracketing_report,
    guaranteed_gap_measure,
    spectrally_smaller,
    trace_gap_bound,
)
from .dml import (
    Spectrum,
    VertexVirtualisedGraph,
    assemble_compressed_dml,
    assemble_dml,
    compressed_spectrum,
    spectrum,
    virtualise_edges,
    virtualise_vertices,
)
from .eigen import DEFAULT_TOL, EigenError, hermitian_eigenvalues
from .fileformat import GraphDocument, ParseError, format_graph_file, load_graph_file, parse_graph_file
from .gaps import (
    Betti1Class,
    CertificateKind,
    CentreVertexCertificate,
    FSPReport,
    GapCertificate,
    betti1_classification,
    certify_magnetic_gap,
    delta_by_scheme,
    delta_value,
    find_centre_vertices,
    fsp_z_tree_classify,
)
from .graph import (
    Edge,
    Graph,
    GraphError,
    betti_number,
    bipartition,
    build_graph,
    components,
    connecting_edges,
    degree,
    is_connected,
    is_cycle_graph,
    is_in_neighbourhood,
    is_tree,
    minimum_vertex_cover,
    spanning_tree,
)
from .intervals import (
    Interval,
    IntervalSet,
    interval_complement,
    interval_intersection,
    interval_union,
    kappa_reflect,
)
from .magnetics import (
    ZERO,
    GaugeFunction,
    VectorPotential,
    gauge_transform,
    holonomy,
    lift_character,
    reduce_support,
)
from .periodic import (
    BandMethod,
    BandStructure,
    PeriodicError,
    PeriodicQuotient,
    floquet_spectrum_sample,
    is_maximal_abelian,
    periodic_bracketing,
    validate_quotient,
    z_exact_bands,
)
from .weights import Scheme, WeightedGraph, WeightScheme, apply_weight_scheme

__version__ = "0.1.0"
