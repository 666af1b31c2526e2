"""Nano topologies generated by (partition, X) and their interior/closure."""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from typing import Iterable

from .core_sets import (
    Partition,
    Subset,
    Universe,
    UniverseMismatchError,
    ValidationError,
    canonical_family,
)
from .rough import approximations

# Re-check the topology axioms on every constructed space.
AUDIT = os.environ.get("NANOH_AUDIT", "").lower() in ("1", "true", "yes")


@dataclass(frozen=True, eq=False)
class NanoSpace:
    partition: Partition
    x: Subset
    open_family: tuple[Subset, ...]
    _open_masks: frozenset = field(init=False, repr=False, compare=False)
    _h_cache: list = field(
        init=False, repr=False, compare=False, default_factory=list
    )
    _lock: threading.Lock = field(
        init=False, repr=False, compare=False, default_factory=threading.Lock
    )

    def __post_init__(self):
        object.__setattr__(
            self, "_open_masks", frozenset(s.mask for s in self.open_family)
        )

    @property
    def universe(self) -> Universe:
        return self.partition.universe

    @property
    def open_masks(self) -> frozenset:
        return self._open_masks

    @property
    def proper_open_masks(self) -> tuple[int, ...]:
        """Masks of the non-empty opens other than the whole universe."""
        full = self.universe.full_mask
        return tuple(
            s.mask for s in self.open_family if s.mask not in (0, full)
        )

    @property
    def h_family_cache(self):
        return self._h_cache[0] if self._h_cache else None

    def fill_h_cache(self, value):
        """Store ``value`` unless another caller got there first; return the winner."""
        with self._lock:
            if not self._h_cache:
                self._h_cache.append(value)
            return self._h_cache[0]

    def __hash__(self):
        return hash((self.partition, self.x))

    def __eq__(self, other):
        if not isinstance(other, NanoSpace):
            return NotImplemented
        return self.partition == other.partition and self.x == other.x

    def __getstate__(self):
        return {"partition": self.partition, "x": self.x}

    def __setstate__(self, state):
        fresh = build_nano_space(state["partition"], state["x"], audit=False)
        for name in ("partition", "x", "open_family", "_open_masks"):
            object.__setattr__(self, name, getattr(fresh, name))
        object.__setattr__(self, "_h_cache", [])
        object.__setattr__(self, "_lock", threading.Lock())

    def describe(self) -> dict:
        return {
            "universe": list(self.universe.elements),
            "partition": [list(b.labels) for b in self.partition.blocks],
            "x": list(self.x.labels),
        }


def _check(space: NanoSpace, b: Subset) -> None:
    if b.universe != space.universe:
        raise UniverseMismatchError(
            f"subset bound to {b.universe}, space to {space.universe}"
        )


def topology_violations(universe: Universe, masks: Iterable[int]) -> list[str]:
    """Failed topology axioms for a finite family of masks (empty list = topology)."""
    fam = set(masks)
    problems = []
    if 0 not in fam:
        problems.append("missing empty set")
    if universe.full_mask not in fam:
        problems.append("missing universe")
    for a in fam:
        for b in fam:
            if a | b not in fam:
                problems.append(f"not closed under union: {a}|{b}")
            if a & b not in fam:
                problems.append(f"not closed under intersection: {a}&{b}")
    return problems


def build_nano_space(
    partition: Partition, x: Subset, audit: bool | None = None
) -> NanoSpace:
    if x.universe != partition.universe:
        raise UniverseMismatchError(
            f"target set bound to {x.universe}, partition to {partition.universe}"
        )
    u = partition.universe
    lo, up, bd = approximations(partition, x)
    family = canonical_family([u.empty, u.full, lo, up, bd])
    space = NanoSpace(partition, x, family)
    if AUDIT if audit is None else audit:
        problems = topology_violations(u, space.open_masks)
        if problems:
            raise ValidationError(
                "nano topology axioms violated: " + "; ".join(problems)
            )
    return space


def nano_closed_sets(space: NanoSpace) -> tuple[Subset, ...]:
    return canonical_family(o.complement() for o in space.open_family)


def interior_mask(open_masks: Iterable[int], b: int) -> int:
    out = 0
    for o in open_masks:
        if o & ~b == 0:
            out |= o
    return out


def closure_mask(open_masks: Iterable[int], full: int, b: int) -> int:
    # intersection of closed supersets == complement of interior of complement
    out = full
    for o in open_masks:
        c = full & ~o
        if b & ~c == 0:
            out &= c
    return out


def n_interior(space: NanoSpace, b: Subset) -> Subset:
    """Union of all nano open subsets of ``b``."""
    _check(space, b)
    return Subset(b.universe, interior_mask(space.open_masks, b.mask))


def n_closure(space: NanoSpace, b: Subset) -> Subset:
    """Intersection of all nano closed supersets of ``b``."""
    _check(space, b)
    return Subset(
        b.universe,
        closure_mask(space.open_masks, space.universe.full_mask, b.mask),
    )


def is_nano_open(space: NanoSpace, b: Subset) -> bool:
    _check(space, b)
    return b.mask in space.open_masks


def is_nano_closed(space: NanoSpace, b: Subset) -> bool:
    _check(space, b)
    return (space.universe.full_mask & ~b.mask) in space.open_masks


def is_nano_clopen(space: NanoSpace, b: Subset) -> bool:
    return is_nano_open(space, b) and is_nano_closed(space, b)
