"""Finite universes, bitmask-backed subsets and validated partitions.

Every subset is an ``int`` mask over the universe's element order: bit ``i``
is set iff ``universe.elements[i]`` is a member.  That order is fixed at
construction and drives canonical ordering everywhere else in the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

DEFAULT_MAX_UNIVERSE = 16

_max_universe = DEFAULT_MAX_UNIVERSE


class NanoError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(NanoError, ValueError):
    """Malformed universe, subset, partition, space or map."""


class UniverseMismatchError(ValidationError):
    """Two objects bound to different universes were combined."""


class CapExceededError(NanoError):
    """A powerset scan was requested on a universe above the size cap."""


def get_max_universe() -> int:
    return _max_universe


def set_max_universe(n: int) -> None:
    """Change the process-wide cap on powerset-scanning operations."""
    global _max_universe
    if n < 1:
        raise ValueError("universe cap must be >= 1")
    _max_universe = int(n)


def check_cap(universe: "Universe", cap: int | None = None) -> None:
    limit = _max_universe if cap is None else cap
    if universe.size > limit:
        raise CapExceededError(
            f"universe of size {universe.size} exceeds cap {limit}"
        )


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def mask_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    """Cardinality first, then the sorted member indices lexicographically."""
    return popcount(mask), tuple(mask_indices(mask))


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class Universe:
    elements: tuple[str, ...]
    _index: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        if not self.elements:
            raise ValidationError("universe must be non-empty")
        index = {}
        for i, label in enumerate(self.elements):
            if not isinstance(label, str) or not label:
                raise ValidationError(f"invalid element label {label!r}")
            if label in index:
                raise ValidationError(f"duplicate label {label!r}")
            index[label] = i
        object.__setattr__(self, "_index", index)

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[str]:
        return iter(self.elements)

    def __contains__(self, label) -> bool:
        return label in self._index

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValidationError(f"unknown element {label!r}") from None

    def subset(self, labels: Iterable[str] = ()) -> "Subset":
        mask = 0
        for label in labels:
            mask |= 1 << self.index(label)
        return Subset(self, mask)

    def from_mask(self, mask: int) -> "Subset":
        return Subset(self, mask)

    @property
    def empty(self) -> "Subset":
        return Subset(self, 0)

    @property
    def full(self) -> "Subset":
        return Subset(self, self.full_mask)

    def powerset(self) -> Iterator["Subset"]:
        """Every subset, in increasing mask order."""
        for mask in range(1 << self.size):
            yield Subset(self, mask)

    def __str__(self) -> str:
        return "[" + ", ".join(self.elements) + "]"


def make_universe(labels: Sequence[str]) -> Universe:
    return Universe(tuple(labels))


@dataclass(frozen=True)
class Subset:
    universe: Universe
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask > self.universe.full_mask:
            raise ValidationError(
                f"mask {self.mask} out of range for universe of size "
                f"{self.universe.size}"
            )

    def _check(self, other: "Subset") -> None:
        if not isinstance(other, Subset):
            raise TypeError(f"expected Subset, got {type(other).__name__}")
        if other.universe != self.universe:
            raise UniverseMismatchError(
                f"subsets of {self.universe} and {other.universe} "
                "cannot be combined"
            )

    def union(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe, self.mask | other.mask)

    def intersection(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe, self.mask & other.mask)

    def difference(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.universe, self.mask & ~other.mask)

    def complement(self) -> "Subset":
        return Subset(self.universe, self.universe.full_mask & ~self.mask)

    def is_subset_of(self, other: "Subset") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __invert__ = complement
    __le__ = is_subset_of

    def __lt__(self, other: "Subset") -> bool:
        return self.is_subset_of(other) and self.mask != other.mask

    def __ge__(self, other: "Subset") -> bool:
        return other.is_subset_of(self)

    def __gt__(self, other: "Subset") -> bool:
        return other < self

    def __len__(self) -> int:
        return popcount(self.mask)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __iter__(self) -> Iterator[str]:
        elements = self.universe.elements
        return (elements[i] for i in mask_indices(self.mask))

    def __contains__(self, label) -> bool:
        return label in self.universe and bool(
            self.mask >> self.universe.index(label) & 1
        )

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self)

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == self.universe.full_mask

    def sort_key(self):
        return mask_sort_key(self.mask)

    def __str__(self) -> str:
        return "{" + ",".join(self) + "}"

    def __repr__(self) -> str:
        return f"Subset({self})"


SubsetLike = Union[Subset, Iterable[str]]


def as_subset(universe: Universe, value: SubsetLike) -> Subset:
    """Accept a ``Subset`` (checked against ``universe``) or an iterable of labels."""
    if isinstance(value, Subset):
        if value.universe != universe:
            raise UniverseMismatchError(
                f"subset bound to {value.universe}, expected {universe}"
            )
        return value
    if isinstance(value, str):
        raise TypeError("pass an iterable of labels, not a bare string")
    return universe.subset(value)


def canonical_family(family: Iterable[Subset]) -> tuple[Subset, ...]:
    """Deduplicate and sort by (cardinality, member indices)."""
    unique = {s.mask: s for s in family}
    return tuple(unique[m] for m in sorted(unique, key=mask_sort_key))


@dataclass(frozen=True)
class Partition:
    universe: Universe
    blocks: tuple[Subset, ...]
    _owner: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        covered = 0
        for block in self.blocks:
            if block.universe != self.universe:
                raise UniverseMismatchError("partition block from another universe")
            if block.mask == 0:
                raise ValidationError("partition blocks must be non-empty")
            if covered & block.mask:
                raise ValidationError(
                    f"partition blocks overlap on {self.universe.from_mask(covered & block.mask)}"
                )
            covered |= block.mask
        if covered != self.universe.full_mask:
            missing = self.universe.from_mask(self.universe.full_mask & ~covered)
            raise ValidationError(f"partition does not cover {missing}")
        blocks = tuple(sorted(self.blocks, key=lambda b: (b.mask & -b.mask)))
        object.__setattr__(self, "blocks", blocks)
        owner = [0] * self.universe.size
        for block in blocks:
            for i in mask_indices(block.mask):
                owner[i] = block.mask
        object.__setattr__(self, "_owner", tuple(owner))

    @property
    def block_masks(self) -> tuple[int, ...]:
        return tuple(b.mask for b in self.blocks)

    def block_of(self, x: str) -> Subset:
        return Subset(self.universe, self._owner[self.universe.index(x)])

    def __str__(self) -> str:
        return "[" + ", ".join(str(b) for b in self.blocks) + "]"


def make_partition(universe: Universe, blocks: Iterable[SubsetLike]) -> Partition:
    return Partition(universe, tuple(as_subset(universe, b) for b in blocks))


def block_of(partition: Partition, x: str) -> Subset:
    return partition.block_of(x)
