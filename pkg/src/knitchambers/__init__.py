"""Exact GIT chamber structures for partial crepant resolutions of ADE
surface singularities, computed by knitting on Auslander-Reiten quivers
and cross-validated against the restricted root hyperplane arrangement.
"""

from .arrangement import RestrictedArrangement, count_regions, restricted_walls, sign_vectors
from .chambers import (Chamber, ChamberStructure, EnhancedReport, Skeleton,
                       SkeletonEdge, bounds, enhanced_report, enumerate_chambers,
                       skeleton)
from .cli import ProblemSpec, build_report, describe, parse_spec, run_report
from .dynkin import (DualGraph, DynkinDiagram, DynkinType, automorphisms,
                     build_diagram, highest_root, induced_dual_graph,
                     positive_roots)
from .errors import (ConfigurationError, ConsistencyError, DomainError,
                     InternalConsistencyError, InvalidDiagramError,
                     KnitChambersError, NonterminationError,
                     ResourceBudgetError, SpecError)
from .knitting import Configuration, ExchangeData, KnitTrace, knit, knit_trace
from .mutation import MutationState, mutate, nu_beta, nu_theta, pairing, rk_vector

__all__ = [
    "Chamber", "ChamberStructure", "Configuration", "ConfigurationError",
    "ConsistencyError", "DomainError", "DualGraph", "DynkinDiagram",
    "DynkinType", "EnhancedReport", "ExchangeData", "InternalConsistencyError",
    "InvalidDiagramError", "KnitChambersError", "KnitTrace", "MutationState",
    "NonterminationError", "ProblemSpec", "ResourceBudgetError",
    "RestrictedArrangement", "Skeleton", "SkeletonEdge", "SpecError",
    "automorphisms", "bounds", "build_diagram", "build_report",
    "count_regions", "describe", "enhanced_report", "enumerate_chambers",
    "highest_root", "induced_dual_graph", "knit", "knit_trace", "mutate",
    "nu_beta", "nu_theta", "pairing", "parse_spec", "positive_roots",
    "restricted_walls", "rk_vector", "run_report", "sign_vectors", "skeleton",
]

__version__ = "0.1.0"
