"""Dual-graph combinatorics of nodal curves.

Decides whether a connected nodal curve, given by its dual graph, carries a
natural d-th Abel map: it does exactly when the curve's essential
connectivity exceeds d.  The supporting machinery (intersection pairing,
twister lattice, degree classes, level expressions, crossing nodes) is
exposed as a library, and an enumeration harness re-derives the decision by
brute force on every small graph.
"""

from .graph import (
    ContractedGraph,
    CurveGraph,
    DisconnectedCurveError,
    betti,
    complement,
    contract_complement,
    cut_edges,
    cut_size,
    is_tail,
    pairing,
    separating_nodes,
    tails,
)
from .lattice import (
    DegreeClass,
    LatticeSelfCheckError,
    class_group_order,
    enumerate_classes,
    equivalent,
    in_twister_lattice,
    multidegree_class,
    multidegree_of,
    normalize_divisor,
    total_degree,
    twister_divisor,
)
from .levels import (
    LevelExpression,
    NotATwisterError,
    check_level_degree_bounds,
    crossing_nodes,
    crossing_nodes_of_multidegree,
    is_sum_of_tails,
    is_sum_of_tails_multidegree,
    level_expression,
    multidegree_levels,
    twister_space_dim,
)
from .abel import (
    INFINITY,
    InvalidChooserError,
    NaturalStructure,
    RepChooser,
    choose_representatives,
    class_has_partitional_rep,
    count_natural_structure,
    cross_check_naturality,
    essential_connectivity,
    has_natural_abel_map,
    is_natural,
    partitional_multidegrees,
    partitional_pairs_certified,
    validate_chooser,
)
from .harness import HarnessResult, connected_multigraphs, run_harness

__version__ = "0.1.0"

__all__ = [
    "ContractedGraph",
    "CurveGraph",
    "DegreeClass",
    "DisconnectedCurveError",
    "HarnessResult",
    "INFINITY",
    "InvalidChooserError",
    "LatticeSelfCheckError",
    "LevelExpression",
    "NaturalStructure",
    "NotATwisterError",
    "RepChooser",
    "betti",
    "check_level_degree_bounds",
    "choose_representatives",
    "class_group_order",
    "class_has_partitional_rep",
    "complement",
    "connected_multigraphs",
    "contract_complement",
    "count_natural_structure",
    "cross_check_naturality",
    "crossing_nodes",
    "crossing_nodes_of_multidegree",
    "cut_edges",
    "cut_size",
    "enumerate_classes",
    "equivalent",
    "essential_connectivity",
    "has_natural_abel_map",
    "in_twister_lattice",
    "is_natural",
    "is_sum_of_tails",
    "is_sum_of_tails_multidegree",
    "is_tail",
    "level_expression",
    "multidegree_class",
    "multidegree_levels",
    "multidegree_of",
    "normalize_divisor",
    "pairing",
    "partitional_multidegrees",
    "partitional_pairs_certified",
    "run_harness",
    "separating_nodes",
    "tails",
    "total_degree",
    "twister_divisor",
    "twister_space_dim",
    "validate_chooser",
]
