"""Andrasfai circulant graphs, closed-form adjacency spectra, and a
mechanical verifier for their spectral claims."""

from .graphs import (
    CirculantGraph,
    ConnectionSet,
    adjacency_matrix,
    andrasfai_connection_set,
    andrasfai_graph,
    build_circulant,
    export_graph,
    is_connected,
    parse_edge_list,
)
from .oracle import (
    MATCH_TOL,
    ConvergenceError,
    OracleResult,
    cluster_distinct,
    compare_spectra,
    jacobi_eigenvalues,
)
from .spectra import (
    TOL_CLUSTER,
    TOL_SYM,
    GcdCertificate,
    MultiplicityTable,
    SpectralPrediction,
    Spectrum,
    eigenvalue_closed_form,
    gcd_certificate,
    pair_multiplicities,
    predict,
    spectrum_closed_form,
    spectrum_general_circulant,
)
from .verify import (
    CLAIMS,
    SweepReport,
    TheoremVerdict,
    run_sweep,
    verify_distinct_count,
    verify_extremes,
    verify_gcd_certificate,
    verify_palindrome,
    verify_plus_minus_one,
)

__version__ = "0.1.0"

__all__ = [
    "CirculantGraph",
    "ConnectionSet",
    "adjacency_matrix",
    "andrasfai_connection_set",
    "andrasfai_graph",
    "build_circulant",
    "export_graph",
    "is_connected",
    "parse_edge_list",
    "MATCH_TOL",
    "ConvergenceError",
    "OracleResult",
    "cluster_distinct",
    "compare_spectra",
    "jacobi_eigenvalues",
    "TOL_CLUSTER",
    "TOL_SYM",
    "GcdCertificate",
    "MultiplicityTable",
    "SpectralPrediction",
    "Spectrum",
    "eigenvalue_closed_form",
    "gcd_certificate",
    "pair_multiplicities",
    "predict",
    "spectrum_closed_form",
    "spectrum_general_circulant",
    "CLAIMS",
    "SweepReport",
    "TheoremVerdict",
    "run_sweep",
    "verify_distinct_count",
    "verify_extremes",
    "verify_gcd_certificate",
    "verify_palindrome",
    "verify_plus_minus_one",
]
