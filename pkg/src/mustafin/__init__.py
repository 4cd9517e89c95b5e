"""Exact classification of special fibers of one-apartment Mustafin degenerations.

Min-plus convex hulls of integer lattice classes, reduction profiles at
hull points, multidegree/Hilbert data of the contributed varieties, and the
associated rank-one linked-Grassmannian graph.
"""

from .apartment import (
    DiagonalLatticeClass,
    class_to_point,
    is_adjacent,
    is_convex_configuration,
    local_model_chain,
    point_to_class,
)
from .fiber import (
    ComponentCounts,
    ComponentDescriptor,
    ReductionProfile,
    classify,
    component_counts,
    describe_vertex,
    is_monomial_type,
    multidegree_partition,
    realize_component,
    reduction_profile,
)
from .hull import (
    HullLatticeSet,
    SkeletonSignature,
    contains,
    lattice_points,
    locate_by_multidegree,
    skeleton_signature,
)
from .linked import (
    ZERO,
    ChainExactnessReport,
    LinkedGraph,
    build_graph,
    exactness_check,
    graph_to_dot,
    path_map,
    segment_lattice_path,
    simple_root_maps,
)
from .multidegree import (
    CoordinateSubspace,
    DIndexTable,
    MultidegreeSet,
    admissible_tuples,
    dimension_p,
    hilbert_function,
    intersection_dims,
    multidegree_set,
    subspace,
)
from .tropical import (
    Configuration,
    TorusPoint,
    configuration,
    is_general_position,
    normalize,
    segment,
    singular_square_minor,
    tropical_combination,
    tropical_determinant,
)

__all__ = [
    "ChainExactnessReport",
    "ComponentCounts",
    "ComponentDescriptor",
    "Configuration",
    "CoordinateSubspace",
    "DIndexTable",
    "DiagonalLatticeClass",
    "HullLatticeSet",
    "LinkedGraph",
    "MultidegreeSet",
    "ReductionProfile",
    "SkeletonSignature",
    "TorusPoint",
    "ZERO",
    "admissible_tuples",
    "build_graph",
    "class_to_point",
    "classify",
    "component_counts",
    "configuration",
    "contains",
    "describe_vertex",
    "dimension_p",
    "exactness_check",
    "graph_to_dot",
    "hilbert_function",
    "intersection_dims",
    "is_adjacent",
    "is_convex_configuration",
    "is_general_position",
    "is_monomial_type",
    "lattice_points",
    "local_model_chain",
    "locate_by_multidegree",
    "multidegree_partition",
    "multidegree_set",
    "normalize",
    "path_map",
    "point_to_class",
    "realize_component",
    "reduction_profile",
    "segment",
    "segment_lattice_path",
    "simple_root_maps",
    "singular_square_minor",
    "skeleton_signature",
    "subspace",
    "tropical_combination",
    "tropical_determinant",
]
