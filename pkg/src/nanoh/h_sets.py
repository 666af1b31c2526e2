"""Nano h-open sets: predicate, full family, h-interior and h-closure.

A subset B is nano h-open when ``B <= nInt(B | O)`` for every nano open O
other than the empty set and the universe.  With no such O the condition is
vacuous and every subset qualifies.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .core_sets import Subset, UniverseMismatchError, canonical_family, check_cap, submasks
from .nano_topology import NanoSpace, interior_mask


@dataclass(frozen=True)
class HFamily:
    space: NanoSpace
    members: tuple[Subset, ...]
    _masks: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_masks", frozenset(s.mask for s in self.members))

    @property
    def masks(self) -> frozenset:
        return self._masks

    def __contains__(self, b) -> bool:
        return isinstance(b, Subset) and b.universe == self.space.universe and (
            b.mask in self.masks
        )

    def __iter__(self):
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


def _check(space: NanoSpace, b: Subset) -> None:
    if b.universe != space.universe:
        raise UniverseMismatchError(
            f"subset bound to {b.universe}, space to {space.universe}"
        )


def h_open_mask_of(space: NanoSpace, b: int) -> bool:
    opens = space.open_masks
    for o in space.proper_open_masks:
        if b & ~interior_mask(opens, b | o):
            return False
    return True


def is_nano_h_open(space: NanoSpace, b: Subset) -> bool:
    _check(space, b)
    return h_open_mask_of(space, b.mask)


def is_nano_h_closed(space: NanoSpace, b: Subset) -> bool:
    _check(space, b)
    return h_open_mask_of(space, space.universe.full_mask & ~b.mask)


def _open_member(space: NanoSpace) -> np.ndarray:
    member = np.zeros(1 << space.universe.size, dtype=np.bool_)
    member[list(space.open_masks)] = True
    return member


def h_open_family(
    space: NanoSpace, cap: int | None = None, backend: str | None = None
) -> HFamily:
    """Scan the whole powerset and collect every nano h-open subset.

    ``backend`` picks the scanner: ``"numba"``/``"numpy"`` use the array
    kernels, ``"python"`` calls :func:`is_nano_h_open` on each subset.  The
    result is cached on ``space``; later calls return the cached family.
    """
    cached = space.h_family_cache
    if cached is not None:
        return cached
    check_cap(space.universe, cap)
    u = space.universe
    if backend == "python":
        members = h_open_family_scan(space, cap)
    else:
        ok = _kernels.h_open_mask(u.size, _open_member(space), backend=backend)
        members = canonical_family(u.from_mask(int(m)) for m in np.flatnonzero(ok))
    return space.fill_h_cache(HFamily(space, members))


def h_open_family_scan(space: NanoSpace, cap: int | None = None) -> tuple[Subset, ...]:
    """Pure-Python powerset scan with :func:`is_nano_h_open`; never cached."""
    check_cap(space.universe, cap)
    return canonical_family(
        s for s in space.universe.powerset() if h_open_mask_of(space, s.mask)
    )


def h_interior_mask(space: NanoSpace, b: int, use_cache: bool = True) -> int:
    out = 0
    fam = space.h_family_cache if use_cache else None
    if fam is not None:
        for m in fam.masks:
            if m & ~b == 0:
                out |= m
        return out
    for sub in submasks(b):
        if sub & ~out and h_open_mask_of(space, sub):
            out |= sub
    return out


def h_closure_mask(space: NanoSpace, b: int, use_cache: bool = True) -> int:
    full = space.universe.full_mask
    out = full
    fam = space.h_family_cache if use_cache else None
    if fam is not None:
        for m in fam.masks:
            c = full & ~m
            if b & ~c == 0:
                out &= c
        return out
    for extra in submasks(full & ~b):
        c = b | extra
        if out & ~c and h_open_mask_of(space, full & ~c):
            out &= c
    return out


def h_interior(space: NanoSpace, b: Subset, use_cache: bool = True) -> Subset:
    """Largest nano h-open subset of ``b``."""
    _check(space, b)
    return Subset(b.universe, h_interior_mask(space, b.mask, use_cache))


def h_closure(space: NanoSpace, b: Subset, use_cache: bool = True) -> Subset:
    """Smallest nano h-closed superset of ``b``."""
    _check(space, b)
    return Subset(b.universe, h_closure_mask(space, b.mask, use_cache))


def space_tables(space: NanoSpace, cap: int | None = None, backend: str | None = None):
    """Lookup tables ``(flags, ops)`` in the layout the map-sweep kernel expects."""
    n = space.universe.size
    check_cap(space.universe, cap)
    full = (1 << n) - 1
    comp = full ^ np.arange(1 << n, dtype=np.int64)
    open_member = _open_member(space)
    hopen = np.zeros(1 << n, dtype=np.bool_)
    hopen[[s.mask for s in h_open_family(space, cap, backend)]] = True

    flags = np.empty((4, 1 << n), dtype=np.bool_)
    flags[_kernels.FLAG_OPEN] = open_member
    flags[_kernels.FLAG_CLOSED] = open_member[comp]
    flags[_kernels.FLAG_HOPEN] = hopen
    flags[_kernels.FLAG_HCLOSED] = hopen[comp]

    nint = _kernels.interior_table(n, open_member, backend=backend)
    hint = _kernels.interior_table(n, hopen, backend=backend)
    ops = np.empty((4, 1 << n), dtype=np.int64)
    ops[_kernels.OP_NINT] = nint
    ops[_kernels.OP_NCL] = full ^ nint[comp]
    ops[_kernels.OP_HINT] = hint
    ops[_kernels.OP_HCL] = full ^ hint[comp]
    return flags, ops
