"""Point maps between nano spaces and the eleven classification predicates.

These are the straightforward, definition-by-definition versions.  The batch
sweep in :mod:`nanoh._kernels` computes the same booleans from lookup tables
and is cross-checked against this module in the test suite.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Mapping, NamedTuple

from .core_sets import Subset, UniverseMismatchError, ValidationError, mask_indices, popcount
from .h_sets import h_closure_mask, h_interior_mask, h_open_family, h_open_mask_of
from .nano_topology import NanoSpace, closure_mask, interior_mask


@dataclass(frozen=True)
class PointMap:
    domain: NanoSpace
    codomain: NanoSpace
    assignment: tuple[int, ...]  # codomain index of each domain point

    def __post_init__(self):
        m, n = self.domain.universe.size, self.codomain.universe.size
        if len(self.assignment) != m:
            raise ValidationError(
                f"assignment has {len(self.assignment)} images for {m} domain points"
            )
        for v in self.assignment:
            if not 0 <= v < n:
                raise ValidationError(f"image index {v} outside codomain")

    def __call__(self, label: str) -> str:
        i = self.domain.universe.index(label)
        return self.codomain.universe.elements[self.assignment[i]]

    def as_dict(self) -> dict[str, str]:
        d, c = self.domain.universe.elements, self.codomain.universe.elements
        return {d[i]: c[v] for i, v in enumerate(self.assignment)}

    def preimage_mask(self, s: int) -> int:
        out = 0
        for i, v in enumerate(self.assignment):
            if s >> v & 1:
                out |= 1 << i
        return out

    def image_mask(self, s: int) -> int:
        out = 0
        for i in mask_indices(s):
            out |= 1 << self.assignment[i]
        return out

    @property
    def is_bijective(self) -> bool:
        return (
            self.domain.universe.size == self.codomain.universe.size
            and popcount(self.image_mask(self.domain.universe.full_mask))
            == self.codomain.universe.size
        )


def make_map(
    domain: NanoSpace, codomain: NanoSpace, mapping: Mapping[str, str]
) -> PointMap:
    """Build a map from a label-to-label dict that must cover the whole domain."""
    du, cu = domain.universe, codomain.universe
    unknown = [k for k in mapping if k not in du]
    if unknown:
        raise ValidationError(f"assignment for unknown domain elements {unknown}")
    missing = [x for x in du if x not in mapping]
    if missing:
        raise ValidationError(f"map is not total: no image for {missing}")
    return PointMap(domain, codomain, tuple(cu.index(mapping[x]) for x in du))


def preimage(fmap: PointMap, s: Subset) -> Subset:
    if s.universe != fmap.codomain.universe:
        raise UniverseMismatchError("preimage expects a subset of the codomain")
    return fmap.domain.universe.from_mask(fmap.preimage_mask(s.mask))


def image(fmap: PointMap, s: Subset) -> Subset:
    if s.universe != fmap.domain.universe:
        raise UniverseMismatchError("image expects a subset of the domain")
    return fmap.codomain.universe.from_mask(fmap.image_mask(s.mask))


# -- helpers over masks ------------------------------------------------------


def _open(space: NanoSpace, s: int) -> bool:
    return s in space.open_masks


def _closed(space: NanoSpace, s: int) -> bool:
    return space.universe.full_mask & ~s in space.open_masks


def _h_open(space: NanoSpace, s: int) -> bool:
    return h_open_mask_of(space, s)


def _h_closed(space: NanoSpace, s: int) -> bool:
    return h_open_mask_of(space, space.universe.full_mask & ~s)


def _cod_h_open_masks(fmap: PointMap) -> frozenset:
    return h_open_family(fmap.codomain).masks


# -- the eleven classes ------------------------------------------------------


def is_nano_continuous(fmap: PointMap) -> bool:
    return all(_open(fmap.domain, fmap.preimage_mask(o)) for o in fmap.codomain.open_masks)


def is_nano_open_map(fmap: PointMap) -> bool:
    return all(_open(fmap.codomain, fmap.image_mask(o)) for o in fmap.domain.open_masks)


def is_nano_homeomorphism(fmap: PointMap) -> bool:
    return fmap.is_bijective and is_nano_continuous(fmap) and is_nano_open_map(fmap)


def is_nano_totally_continuous(fmap: PointMap) -> bool:
    dom = fmap.domain
    return all(
        _open(dom, p) and _closed(dom, p)
        for p in map(fmap.preimage_mask, fmap.codomain.open_masks)
    )


def is_nano_contra_continuous(fmap: PointMap) -> bool:
    return all(
        _closed(fmap.domain, fmap.preimage_mask(o)) for o in fmap.codomain.open_masks
    )


def is_h_continuous(fmap: PointMap) -> bool:
    return all(
        _h_open(fmap.domain, fmap.preimage_mask(o)) for o in fmap.codomain.open_masks
    )


def is_h_open_map(fmap: PointMap) -> bool:
    return all(
        _h_open(fmap.codomain, fmap.image_mask(o)) for o in fmap.domain.open_masks
    )


def is_h_irresolute(fmap: PointMap) -> bool:
    """Preimage of every codomain h-open set is h-open; needs the codomain h-family."""
    return all(
        _h_open(fmap.domain, fmap.preimage_mask(o)) for o in _cod_h_open_masks(fmap)
    )


def is_h_homeomorphism(fmap: PointMap) -> bool:
    return fmap.is_bijective and is_h_continuous(fmap) and is_h_open_map(fmap)


def is_h_totally_continuous(fmap: PointMap) -> bool:
    dom = fmap.domain
    return all(
        _open(dom, p) and _closed(dom, p)
        for p in map(fmap.preimage_mask, _cod_h_open_masks(fmap))
    )


def is_h_contra_continuous(fmap: PointMap) -> bool:
    return all(
        _h_closed(fmap.domain, fmap.preimage_mask(o)) for o in fmap.codomain.open_masks
    )


PREDICATES = {
    "nano_continuous": is_nano_continuous,
    "nano_open_map": is_nano_open_map,
    "nano_homeomorphism": is_nano_homeomorphism,
    "nano_totally_continuous": is_nano_totally_continuous,
    "nano_contra_continuous": is_nano_contra_continuous,
    "h_continuous": is_h_continuous,
    "h_open_map": is_h_open_map,
    "h_irresolute": is_h_irresolute,
    "h_homeomorphism": is_h_homeomorphism,
    "h_totally_continuous": is_h_totally_continuous,
    "h_contra_continuous": is_h_contra_continuous,
}

# Short command-line spellings.
ALIASES = {
    "continuous": "nano_continuous",
    "open": "nano_open_map",
    "homeomorphism": "nano_homeomorphism",
    "totally-continuous": "nano_totally_continuous",
    "contra-continuous": "nano_contra_continuous",
    "h-continuous": "h_continuous",
    "h-open": "h_open_map",
    "h-irresolute": "h_irresolute",
    "h-homeomorphism": "h_homeomorphism",
    "h-totally-continuous": "h_totally_continuous",
    "h-contra-continuous": "h_contra_continuous",
}
SHORT_NAMES = {v: k for k, v in ALIASES.items()}


def resolve_predicate(name: str) -> str:
    key = name.strip()
    if key in PREDICATES:
        return key
    if key in ALIASES:
        return ALIASES[key]
    alt = key.replace("-", "_")
    if alt in PREDICATES:
        return alt
    raise KeyError(f"unknown map predicate {name!r}")


@dataclass(frozen=True)
class MapClassification:
    nano_continuous: bool
    nano_open_map: bool
    nano_homeomorphism: bool
    nano_totally_continuous: bool
    nano_contra_continuous: bool
    h_continuous: bool
    h_open_map: bool
    h_irresolute: bool
    h_homeomorphism: bool
    h_totally_continuous: bool
    h_contra_continuous: bool
    bijective: bool

    def as_dict(self) -> dict[str, bool]:
        return asdict(self)


def classify_map(fmap: PointMap) -> MapClassification:
    values = {name: bool(pred(fmap)) for name, pred in PREDICATES.items()}
    return MapClassification(bijective=fmap.is_bijective, **values)


class Thm4Conditions(NamedTuple):
    """The five equivalent characterisations of h-continuity."""

    h_continuous: bool
    closed_preimages_h_closed: bool
    image_of_h_closure: bool
    h_closure_of_preimage: bool
    preimage_of_interior: bool

    @property
    def all_equal(self) -> bool:
        return len(set(self)) == 1


def check_thm4_conditions(fmap: PointMap) -> Thm4Conditions:
    dom, cod = fmap.domain, fmap.codomain
    h_open_family(dom)
    d_full, c_full = dom.universe.full_mask, cod.universe.full_mask
    c_opens = cod.open_masks

    c1 = is_h_continuous(fmap)
    c2 = all(
        _h_closed(dom, fmap.preimage_mask(c_full & ~o)) for o in c_opens
    )
    c3 = all(
        fmap.image_mask(h_closure_mask(dom, b))
        & ~closure_mask(c_opens, c_full, fmap.image_mask(b))
        == 0
        for b in range(d_full + 1)
    )
    c4 = all(
        h_closure_mask(dom, fmap.preimage_mask(c))
        & ~fmap.preimage_mask(closure_mask(c_opens, c_full, c))
        == 0
        for c in range(c_full + 1)
    )
    c5 = all(
        fmap.preimage_mask(interior_mask(c_opens, c))
        & ~h_interior_mask(dom, fmap.preimage_mask(c))
        == 0
        for c in range(c_full + 1)
    )
    return Thm4Conditions(c1, c2, c3, c4, c5)


@dataclass(frozen=True)
class StrictInclusion:
    condition: int  # 3, 4 or 5
    argument: Subset
    left: Subset
    right: Subset


def thm4_strict_inclusions(fmap: PointMap) -> list[StrictInclusion]:
    """Arguments where inclusions (3), (4), (5) hold but are not equalities."""
    dom, cod = fmap.domain, fmap.codomain
    h_open_family(dom)
    du, cu = dom.universe, cod.universe
    c_opens = cod.open_masks
    out = []
    for b in range(du.full_mask + 1):
        left = fmap.image_mask(h_closure_mask(dom, b))
        right = closure_mask(c_opens, cu.full_mask, fmap.image_mask(b))
        if left & ~right == 0 and left != right:
            out.append(StrictInclusion(3, du.from_mask(b), cu.from_mask(left), cu.from_mask(right)))
    for c in range(cu.full_mask + 1):
        left = h_closure_mask(dom, fmap.preimage_mask(c))
        right = fmap.preimage_mask(closure_mask(c_opens, cu.full_mask, c))
        if left & ~right == 0 and left != right:
            out.append(StrictInclusion(4, cu.from_mask(c), du.from_mask(left), du.from_mask(right)))
    for c in range(cu.full_mask + 1):
        left = fmap.preimage_mask(interior_mask(c_opens, c))
        right = h_interior_mask(dom, fmap.preimage_mask(c))
        if left & ~right == 0 and left != right:
            out.append(StrictInclusion(5, cu.from_mask(c), du.from_mask(left), du.from_mask(right)))
    return out
