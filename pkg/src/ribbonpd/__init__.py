"""Partial duals of ribbon graphs.

Exact enumeration of partial-dual genus and Euler-genus polynomials,
recurrence engines and closed forms for the classical planar families, the
spanning-tree formula for the maximum partial-dual genus, and exact
distribution statistics with a normality check.
"""

from .fileio import ParseError, decode, encode
from .kernels import BACKEND as KERNEL_BACKEND
from .poly import IntPolynomial, divexact, spectrum
from .ribbon import (
    EdgeSubset,
    GemMap,
    PreconditionError,
    RibbonGraph,
    SpanningStats,
    SurfaceStats,
    component_count,
    face_degrees,
    from_gem,
    genus_of_partial_dual,
    partial_dual,
    spanning_stats,
    surface_stats,
    to_gem,
)
from .surgery import (
    add_edge_planar,
    add_parallel_edge,
    add_pendant_edge,
    delete_edge,
    disjoint_union,
    insert_edge_at,
    join,
    relabel_edges,
    ring_graph,
    subdivide_edge,
)
from .enumeration import (
    SubsetFamily,
    TreeStats,
    correction_sum,
    euler_genus_polynomial,
    genus_polynomial,
    max_partial_dual_genus,
    parallel_family,
    spanning_tree_masks,
    subset_family,
    tree_stats,
)
from .families import FamilySpec, euler_closed_form, generate, genus_by_recurrence, genus_closed_form
from .theorems import (
    RecurrenceReport,
    audit,
    deletion_recurrence,
    parallel_recurrence,
    random_planar,
    ring_polynomial,
    subdivision_recurrence,
)
from .stats import (
    GenusDistribution,
    asymptotic_rows,
    ks_to_normal,
    mean_variance,
    normal_cdf,
    to_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeSubset",
    "FamilySpec",
    "GemMap",
    "GenusDistribution",
    "IntPolynomial",
    "KERNEL_BACKEND",
    "ParseError",
    "PreconditionError",
    "RecurrenceReport",
    "RibbonGraph",
    "SpanningStats",
    "SubsetFamily",
    "SurfaceStats",
    "TreeStats",
    "add_edge_planar",
    "add_parallel_edge",
    "add_pendant_edge",
    "asymptotic_rows",
    "audit",
    "component_count",
    "correction_sum",
    "decode",
    "delete_edge",
    "deletion_recurrence",
    "disjoint_union",
    "divexact",
    "encode",
    "euler_closed_form",
    "euler_genus_polynomial",
    "face_degrees",
    "from_gem",
    "generate",
    "genus_by_recurrence",
    "genus_closed_form",
    "genus_of_partial_dual",
    "genus_polynomial",
    "insert_edge_at",
    "join",
    "ks_to_normal",
    "max_partial_dual_genus",
    "mean_variance",
    "normal_cdf",
    "parallel_family",
    "parallel_recurrence",
    "partial_dual",
    "random_planar",
    "relabel_edges",
    "ring_graph",
    "ring_polynomial",
    "spanning_stats",
    "spanning_tree_masks",
    "spectrum",
    "subdivide_edge",
    "subdivision_recurrence",
    "subset_family",
    "surface_stats",
    "to_distribution",
    "to_gem",
    "tree_stats",
]
