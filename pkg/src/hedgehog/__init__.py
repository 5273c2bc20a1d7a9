"""Exact-arithmetic toolkit for the hedgehog space under its three
topologies (quotient, metric, compact)."""

from .balls import ball, epsilon_net
from .embeddings import (
    BasisResult,
    DiscreteFamily,
    KowalskyEmbedding,
    PointPair,
    RefinementFamily,
    check_separation,
    embed_real,
    fan_map,
    invert_real,
    kowalsky_embed,
    real_image_member,
    sigma_discrete_basis,
    signed_to_spine,
    spine_to_signed,
    stone_refine,
)
from .extension import (
    ExtensionResult,
    HedgehogMap,
    combine_pairwise,
    hedgehog_extend,
    is_discrete_family,
    metric_separate,
    separation_gap,
    verify_extension,
)
from .metricspace import (
    FiniteMetricSpace,
    ScalarMap,
    bound_metric,
    dist_to_set,
    mcshane_extend,
    product_distance,
    validate_metric,
)
from .points import (
    APEX,
    Point,
    SparseAxisVector,
    SpineUniverse,
    distance,
    from_axes,
    infimum,
    leq,
    project_height,
    project_spine,
    supremum_directed,
    to_axes,
)
from .sets import (
    HedgehogSet,
    Topology,
    boolean_op,
    classify_open,
    closure,
    complement,
    difference,
    extract_finite_subcover,
    fu_witness,
    intersection,
    is_closed,
    is_subset,
    member,
    refute_countable_base,
    set_distance,
    union,
)
from .traces import Interval, IntervalTrace, interval

__all__ = [name for name in dir() if not name.startswith("_")]
