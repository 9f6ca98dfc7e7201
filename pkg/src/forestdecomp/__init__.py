"""Certifying forest decompositions of multigraphs.

Partition a multigraph's edges into ``r`` forests whenever the sparsity
condition ``e(X) <= r(|X|-1)`` holds for every nonempty vertex set ``X``,
and produce a violating vertex set otherwise.  Also computes exact
arboricity and supports pinning distinct edges into distinct forests.
"""

from .decompose import (
    ArboricityResult,
    Certificate,
    Decomposition,
    ExchangeTrace,
    SubtreeClass,
    SubtreeLabel,
    UnboundedArboricityError,
    arboricity,
    classify_subtrees,
    decompose,
    find_deficient_forest,
    insert_edge,
)
from .graph import (
    Components,
    DisjointSet,
    Graph,
    components,
    is_forest,
    path_in_forest,
    restriction_edge_count,
)
from .io import (
    ParseError,
    export_dot,
    format_assignment,
    format_certificate,
    parse_assignment,
    parse_certificate,
    parse_graph,
    serialize_graph,
)
from .oracle import (
    ConditionReport,
    brute_decompose,
    check_condition,
    verify_certificate,
    verify_decomposition,
)
from .preassign import preassign

__version__ = "0.1.0"

__all__ = [
    "ArboricityResult",
    "Certificate",
    "Components",
    "ConditionReport",
    "Decomposition",
    "DisjointSet",
    "ExchangeTrace",
    "Graph",
    "ParseError",
    "SubtreeClass",
    "SubtreeLabel",
    "UnboundedArboricityError",
    "arboricity",
    "brute_decompose",
    "check_condition",
    "classify_subtrees",
    "components",
    "decompose",
    "export_dot",
    "find_deficient_forest",
    "format_assignment",
    "format_certificate",
    "insert_edge",
    "is_forest",
    "parse_assignment",
    "parse_certificate",
    "parse_graph",
    "path_in_forest",
    "preassign",
    "restriction_edge_count",
    "serialize_graph",
    "verify_certificate",
    "verify_decomposition",
    "__version__",
]
