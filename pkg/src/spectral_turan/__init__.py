"""Extremal graph theory toolkit for forbidden linear forests: maximum edge
counts and spectral radii, the graphs attaining them, and machinery to check
both claims by enumeration, stochastic search, and direct eigensolves.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from ._version import __version__
from .checks import (
    CHECK_IDS,
    check_graph_class,
    check_objective,
    reproduce_section5,
    run_check,
)
from .enumeration import (
    ENUM_CAP,
    ExtremalReport,
    GraphClass,
    Objective,
    SearchReport,
    canonical_form,
    enumerate_bipartite,
    enumerate_graphs,
    exhaustive_extremal,
    hill_climb_search,
)
from .errors import (
    BudgetExhaustedError,
    ConvergenceError,
    FamilyParameterError,
    Graph6DecodeError,
    InfeasibleParameterError,
    NegativeRadicandError,
    SizeCapError,
    UnsupportedCaseError,
)
from .forests import (
    DEFAULT_BUDGET,
    ForestEmbedding,
    LinearForestSpec,
    contains_linear_forest,
    embed_linear_forest,
    is_forest_free,
)
from .formulas import (
    AsymptoticOnly,
    FormulaValue,
    Proven,
    Unconditional,
    ex_bipartite_kp3,
    ex_kp3,
    ex_linear_forest,
    extremal_graphs,
    h_parameter,
    hong_bound,
    least_eig_bound,
    near_matching,
    rho_bipartite_kp3,
    rho_f,
    rho_f_bounds,
    rho_s,
    rho_s_plus_bound,
    sqrt_edge_bound,
)
from .graph6 import decode_graph6, encode_graph6
from .graphs import (
    MAX_VERTICES,
    Broom,
    Complete,
    CompleteBipartite,
    EmptyGraph,
    FKernel,
    Graph,
    GraphBuilder,
    Path,
    SplitS,
    SplitSPlus,
    Star,
    TuranGraph,
    bipartition,
    build_family,
    components,
    join,
    k_copies,
    union,
)
from .reports import (
    ComparisonReport,
    TheoremCheck,
    emit_report,
    serialize_csv,
    serialize_json,
    serialize_report,
)
from .spectral import (
    DEFAULT_TOL,
    SpectralResult,
    adjacency_matrix,
    least_eigenvalue,
    spectral_radius,
    spectrum,
)

__all__ = [
    "__version__",
    "KERNEL_BACKEND",
    # graphs
    "Graph",
    "GraphBuilder",
    "MAX_VERTICES",
    "Complete",
    "EmptyGraph",
    "Path",
    "Star",
    "CompleteBipartite",
    "Broom",
    "SplitS",
    "SplitSPlus",
    "FKernel",
    "TuranGraph",
    "build_family",
    "union",
    "join",
    "k_copies",
    "components",
    "bipartition",
    # graph6
    "encode_graph6",
    "decode_graph6",
    # forests
    "LinearForestSpec",
    "ForestEmbedding",
    "DEFAULT_BUDGET",
    "contains_linear_forest",
    "embed_linear_forest",
    "is_forest_free",
    # formulas
    "FormulaValue",
    "Proven",
    "AsymptoticOnly",
    "Unconditional",
    "h_parameter",
    "ex_linear_forest",
    "ex_kp3",
    "ex_bipartite_kp3",
    "rho_s",
    "rho_s_plus_bound",
    "rho_f",
    "rho_f_bounds",
    "rho_bipartite_kp3",
    "hong_bound",
    "sqrt_edge_bound",
    "least_eig_bound",
    "near_matching",
    "extremal_graphs",
    # spectral
    "SpectralResult",
    "DEFAULT_TOL",
    "adjacency_matrix",
    "spectral_radius",
    "least_eigenvalue",
    "spectrum",
    # enumeration and search
    "ENUM_CAP",
    "Objective",
    "GraphClass",
    "ExtremalReport",
    "SearchReport",
    "canonical_form",
    "enumerate_graphs",
    "enumerate_bipartite",
    "exhaustive_extremal",
    "hill_climb_search",
    # checks and reports
    "CHECK_IDS",
    "run_check",
    "reproduce_section5",
    "check_objective",
    "check_graph_class",
    "TheoremCheck",
    "ComparisonReport",
    "serialize_json",
    "serialize_csv",
    "serialize_report",
    "emit_report",
    # errors
    "FamilyParameterError",
    "Graph6DecodeError",
    "BudgetExhaustedError",
    "ConvergenceError",
    "SizeCapError",
    "NegativeRadicandError",
    "UnsupportedCaseError",
    "InfeasibleParameterError",
]
