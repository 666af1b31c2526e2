"""Lower/upper approximations and boundary region w.r.t. a partition."""

from __future__ import annotations

from typing import NamedTuple

from .core_sets import Partition, Subset, UniverseMismatchError


class ApproximationTriple(NamedTuple):
    lower: Subset
    upper: Subset
    boundary: Subset


def _check(partition: Partition, x: Subset) -> None:
    if x.universe != partition.universe:
        raise UniverseMismatchError(
            f"subset bound to {x.universe}, partition to {partition.universe}"
        )


def lower_mask(block_masks, x: int) -> int:
    out = 0
    for b in block_masks:
        if b & ~x == 0:
            out |= b
    return out


def upper_mask(block_masks, x: int) -> int:
    out = 0
    for b in block_masks:
        if b & x:
            out |= b
    return out


def lower_approximation(partition: Partition, x: Subset) -> Subset:
    """Union of the blocks lying wholly inside ``x``."""
    _check(partition, x)
    return Subset(x.universe, lower_mask(partition.block_masks, x.mask))


def upper_approximation(partition: Partition, x: Subset) -> Subset:
    """Union of the blocks that meet ``x``."""
    _check(partition, x)
    return Subset(x.universe, upper_mask(partition.block_masks, x.mask))


def boundary_region(partition: Partition, x: Subset) -> Subset:
    return upper_approximation(partition, x) - lower_approximation(partition, x)


def approximations(partition: Partition, x: Subset) -> ApproximationTriple:
    lo = lower_approximation(partition, x)
    up = upper_approximation(partition, x)
    return ApproximationTriple(lo, up, up - lo)


def is_rough(partition: Partition, x: Subset) -> bool:
    return lower_approximation(partition, x) != upper_approximation(partition, x)
