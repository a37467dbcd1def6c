"""Exact computation of the Falk invariant phi3 for complete-lift
arrangements of additive rational gain graphs."""

from .census import (
    BiasedCensus,
    TrianglePattern,
    census,
    count_d2,
    count_g_circ,
    count_k3,
    count_k4,
    count_s3,
    is_biased_isomorphic,
    phi3_census,
    reference_d2,
    reference_gcirc,
    reference_s3,
)
from .families import FAMILIES, FamilySpec, generate, phi3_closed_form
from .graphs import (
    GainEdge,
    GainGraph,
    GraphParseError,
    InvalidGraphError,
    MalformedWalkError,
    Violation,
    circle_gain,
    is_balanced_circle,
    parallel_classes,
    parse_graph,
    require_valid,
    serialize_graph,
    switch,
    validate,
)
from .lift import (
    Arrangement,
    DisagreementError,
    Phi3Report,
    boundary_generator,
    build_arrangement,
    dependent_triples_by_rank,
    dim_i2_3,
    dim_i2_3_census_formula,
    dim_span_f3,
    f3_generators,
    phi3_falk,
    phi3_kernel,
    report,
    three_circuits,
    w2_census_formula,
    w2_geometric,
)
from .linalg import SparseMatrix, rank, rank_of_stacked

__version__ = "0.1.0"

__all__ = [
    "Arrangement",
    "BiasedCensus",
    "DisagreementError",
    "FAMILIES",
    "FamilySpec",
    "GainEdge",
    "GainGraph",
    "GraphParseError",
    "InvalidGraphError",
    "MalformedWalkError",
    "Phi3Report",
    "SparseMatrix",
    "TrianglePattern",
    "Violation",
    "boundary_generator",
    "build_arrangement",
    "census",
    "circle_gain",
    "count_d2",
    "count_g_circ",
    "count_k3",
    "count_k4",
    "count_s3",
    "dependent_triples_by_rank",
    "dim_i2_3",
    "dim_i2_3_census_formula",
    "dim_span_f3",
    "f3_generators",
    "generate",
    "is_balanced_circle",
    "is_biased_isomorphic",
    "parallel_classes",
    "parse_graph",
    "phi3_census",
    "phi3_closed_form",
    "phi3_falk",
    "phi3_kernel",
    "rank",
    "rank_of_stacked",
    "reference_d2",
    "reference_gcirc",
    "reference_s3",
    "report",
    "require_valid",
    "serialize_graph",
    "switch",
    "three_circuits",
    "validate",
    "w2_census_formula",
    "w2_geometric",
]
