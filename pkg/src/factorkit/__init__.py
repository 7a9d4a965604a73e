"""factorkit: exact toughness invariants, component factors, and
critical-avoidable verification for small graphs."""

from .criticality import (
    CriticalityVerdict,
    FactorKind,
    Violation,
    is_factor_avoidable,
    is_n_factor_critical_avoidable,
)
from .errors import (
    FactorKitError,
    Graph6Error,
    MissingEdgeError,
    NoFactorError,
    ResourceLimitError,
    UnsupportedSizeError,
)
from .factors import (
    DeficiencyWitness,
    FactorCertificate,
    count_triangular_cactus_components,
    extract_k2_cycle_factor,
    has_k2_cycle_factor,
    has_k2_oddcycle_factor,
    max_isolated_deficiency,
    max_tc_deficiency,
)
from .families import (
    Family,
    FamilyExpectation,
    FamilySpec,
    build_family,
    check_family,
)
from .graph import (
    Graph,
    complete_graph,
    components,
    cycle_graph,
    delete_edge,
    delete_vertices,
    disjoint_union,
    empty_graph,
    is_connected,
    isolated_count,
    join,
    path_graph,
    vertex_connectivity,
)
from .graph6 import parse_graph6, write_graph6
from .harness import Campaign, report_to_json, run_campaign, sample_gnp
from .invariants import ToughnessResult, isolated_toughness, toughness
from .rational import INF, format_rational, parse_rational

__version__ = "0.1.0"

__all__ = [
    "Campaign",
    "CriticalityVerdict",
    "DeficiencyWitness",
    "FactorCertificate",
    "FactorKind",
    "FactorKitError",
    "Family",
    "FamilyExpectation",
    "FamilySpec",
    "Graph",
    "Graph6Error",
    "INF",
    "MissingEdgeError",
    "NoFactorError",
    "ResourceLimitError",
    "ToughnessResult",
    "UnsupportedSizeError",
    "Violation",
    "build_family",
    "check_family",
    "complete_graph",
    "components",
    "count_triangular_cactus_components",
    "cycle_graph",
    "delete_edge",
    "delete_vertices",
    "disjoint_union",
    "empty_graph",
    "extract_k2_cycle_factor",
    "format_rational",
    "has_k2_cycle_factor",
    "has_k2_oddcycle_factor",
    "is_connected",
    "is_factor_avoidable",
    "is_n_factor_critical_avoidable",
    "isolated_count",
    "isolated_toughness",
    "join",
    "max_isolated_deficiency",
    "max_tc_deficiency",
    "parse_graph6",
    "parse_rational",
    "path_graph",
    "report_to_json",
    "run_campaign",
    "sample_gnp",
    "toughness",
    "vertex_connectivity",
    "write_graph6",
]
