"""Finite nano topologies, nano h-open sets and map classification."""

from .core_sets import (
    CapExceededError,
    NanoError,
    Partition,
    Subset,
    Universe,
    UniverseMismatchError,
    ValidationError,
    block_of,
    get_max_universe,
    make_partition,
    make_universe,
    set_max_universe,
)
from .rough import (
    ApproximationTriple,
    approximations,
    boundary_region,
    is_rough,
    lower_approximation,
    upper_approximation,
)
from .nano_topology import NanoSpace, build_nano_space, n_closure, n_interior, nano_closed_sets
from .h_sets import (
    HFamily,
    h_closure,
    h_interior,
    h_open_family,
    is_nano_h_closed,
    is_nano_h_open,
)
from .maps import (
    MapClassification,
    PointMap,
    check_thm4_conditions,
    classify_map,
    image,
    make_map,
    preimage,
)

__version__ = "0.1.0"

__all__ = [
    "ApproximationTriple",
    "CapExceededError",
    "HFamily",
    "MapClassification",
    "NanoError",
    "NanoSpace",
    "Partition",
    "PointMap",
    "Subset",
    "Universe",
    "UniverseMismatchError",
    "ValidationError",
    "approximations",
    "block_of",
    "boundary_region",
    "build_nano_space",
    "check_thm4_conditions",
    "classify_map",
    "get_max_universe",
    "h_closure",
    "h_interior",
    "h_open_family",
    "image",
    "is_nano_h_closed",
    "is_nano_h_open",
    "is_rough",
    "lower_approximation",
    "make_map",
    "make_partition",
    "make_universe",
    "n_closure",
    "n_interior",
    "nano_closed_sets",
    "preimage",
    "set_max_universe",
    "upper_approximation",
]
