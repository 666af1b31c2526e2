"""Exhaustive theorem sweeps, worked-example fixtures and a counterexample miner.

Spaces of size ``n`` are enumerated as (partition, X) pairs: partitions in
restricted-growth-string order, X by increasing mask.  Maps are enumerated
with the first domain point as the most significant digit.  All sweeps
iterate (domain size, codomain size, domain index, codomain index, map
index) in that order, which is also the order the miner reports its first
witness in.
"""

from __future__ import annotations

import string
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from itertools import permutations, product
from typing import Callable, Iterator, Sequence

import numpy as np

from . import _kernels
from .core_sets import (
    Partition,
    Subset,
    Universe,
    ValidationError,
    check_cap,
    make_universe,
    mask_sort_key,
)
from .files import load_map, load_space, parse_map
from .h_sets import (
    h_closure_mask,
    h_interior_mask,
    h_open_family,
    h_open_mask_of,
    space_tables,
)
from .maps import (
    PointMap,
    classify_map,
    check_thm4_conditions,
    image,
    preimage,
    resolve_predicate,
)
from .nano_topology import (
    NanoSpace,
    build_nano_space,
    closure_mask,
    interior_mask,
    nano_closed_sets,
    topology_violations,
)
from .rough import lower_mask, upper_mask

MAX_RECORDED_FAILURES = 10

# Forward implications between map classes, as (antecedent, consequent).
IMPLICATIONS: tuple[tuple[str, str], ...] = (
    ("nano_continuous", "h_continuous"),
    ("nano_open_map", "h_open_map"),
    ("h_irresolute", "h_continuous"),
    ("nano_homeomorphism", "h_homeomorphism"),
    ("h_totally_continuous", "nano_totally_continuous"),
    ("h_totally_continuous", "h_irresolute"),
    ("nano_contra_continuous", "h_contra_continuous"),
    ("nano_totally_continuous", "h_contra_continuous"),
)
# Their converses, each of which fails on some small instance.
CONVERSES: tuple[tuple[str, str], ...] = tuple((b, a) for a, b in IMPLICATIONS)

THM4_COLUMNS = ("thm4_1", "thm4_2", "thm4_3", "thm4_4", "thm4_5")


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def universe_labels(n: int) -> list[str]:
    if n <= 26:
        return list(string.ascii_lowercase[:n])
    return [f"x{i}" for i in range(n)]


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """Set partitions of ``range(n)`` as restricted growth strings, lexicographically."""
    if n == 0:
        yield ()
        return

    def extend(prefix: list[int], top: int):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for k in range(top + 2):
            prefix.append(k)
            yield from extend(prefix, max(top, k))
            prefix.pop()

    yield from extend([0], 0)


def enumerate_partitions(universe: Universe) -> Iterator[Partition]:
    for rgs in restricted_growth_strings(universe.size):
        masks = [0] * (max(rgs) + 1)
        for i, k in enumerate(rgs):
            masks[k] |= 1 << i
        yield Partition(universe, tuple(universe.from_mask(m) for m in masks))


def enumerate_spaces(n: int, cap: int | None = None) -> Iterator[NanoSpace]:
    """Every (partition, X) pair on an ``n``-point universe, exactly once."""
    if n < 1:
        raise ValidationError("universe size must be >= 1")
    universe = make_universe(universe_labels(n))
    check_cap(universe, cap)
    for partition in enumerate_partitions(universe):
        for x in universe.powerset():
            yield build_nano_space(partition, x)


@lru_cache(maxsize=None)
def _spaces(n: int) -> tuple[NanoSpace, ...]:
    # The sweep sizes are far below any sensible cap.
    return tuple(enumerate_spaces(n, cap=max(n, 1)))


def enumerate_maps(
    domain: NanoSpace, codomain: NanoSpace, bijective_only: bool = False
) -> Iterator[PointMap]:
    m, n = domain.universe.size, codomain.universe.size
    if bijective_only:
        if m != n:
            raise ValidationError("bijections need equal-sized universes")
        for perm in permutations(range(n)):
            yield PointMap(domain, codomain, perm)
        return
    for assignment in product(range(n), repeat=m):
        yield PointMap(domain, codomain, assignment)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class TheoremReport:
    theorem: str
    instances: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, detail: dict) -> None:
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDED_FAILURES:
            self.failures.append(detail)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "instances": self.instances,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": self.failures,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 4)
        return out


def describe_space(space: NanoSpace) -> dict:
    return space.describe()


@dataclass(frozen=True)
class Witness:
    domain: dict
    codomain: dict
    assignment: dict
    antecedent: str
    consequent: str
    classification: dict

    def to_map(self) -> PointMap:
        return parse_map(
            {"domain": self.domain, "codomain": self.codomain, "map": self.assignment}
        )

    def replay(self) -> dict:
        """Recompute the classification booleans from scratch."""
        return classify_map(self.to_map()).as_dict()

    def to_dict(self) -> dict:
        return {
            "antecedent": self.antecedent,
            "consequent": self.consequent,
            "domain": self.domain,
            "codomain": self.codomain,
            "map": self.assignment,
            "classification": self.classification,
        }


# ---------------------------------------------------------------------------
# Set-level sweep
# ---------------------------------------------------------------------------


def _check_rough(space: NanoSpace) -> list[str]:
    u = space.universe
    blocks = space.partition.block_masks
    problems = []
    for x in range(u.full_mask + 1):
        lo, up = lower_mask(blocks, x), upper_mask(blocks, x)
        if lo & ~x or x & ~up:
            problems.append(f"lower <= X <= upper fails for {u.from_mask(x)}")
        if lo != u.full_mask & ~upper_mask(blocks, u.full_mask & ~x):
            problems.append(f"lower/upper duality fails for {u.from_mask(x)}")
        for b in blocks:
            if (lo & b) not in (0, b) or (up & b) not in (0, b):
                problems.append(f"approximation splits a block for {u.from_mask(x)}")
    return problems


def _check_nano(space: NanoSpace) -> list[str]:
    u = space.universe
    full = u.full_mask
    opens = space.open_masks
    problems = topology_violations(u, opens)
    if not 2 <= len(opens) <= 5:
        problems.append(f"open family has {len(opens)} members")
    closed = {s.mask for s in nano_closed_sets(space)}
    for b in range(full + 1):
        i = interior_mask(opens, b)
        c = closure_mask(opens, full, b)
        if i & ~b or b & ~c:
            problems.append(f"nInt <= B <= nCl fails for {u.from_mask(b)}")
        if c != full & ~interior_mask(opens, full & ~b):
            problems.append(f"closure duality fails for {u.from_mask(b)}")
        if (b in opens) != (i == b) or (b in closed) != (c == b):
            problems.append(f"fixed-point characterisation fails for {u.from_mask(b)}")
        if interior_mask(opens, i) != i or closure_mask(opens, full, c) != c:
            problems.append(f"idempotence fails for {u.from_mask(b)}")
    return problems


def _check_open_is_h_open(space: NanoSpace) -> list[str]:
    u = space.universe
    return [
        f"open set {u.from_mask(o)} is not h-open"
        for o in sorted(space.open_masks, key=mask_sort_key)
        if not h_open_mask_of(space, o)
    ]


def _check_h_lattice(space: NanoSpace) -> list[str]:
    u = space.universe
    fam = sorted(h_open_family(space).masks, key=mask_sort_key)
    problems = []
    for a in fam:
        for b in fam:
            for r, op in ((a & b, "&"), (a | b, "|")):
                if not h_open_mask_of(space, r):
                    problems.append(f"{u.from_mask(a)} {op} {u.from_mask(b)} not h-open")
    return problems


def _check_open_with_h_open(space: NanoSpace) -> list[str]:
    u = space.universe
    fam = sorted(h_open_family(space).masks, key=mask_sort_key)
    problems = []
    for o in sorted(space.open_masks, key=mask_sort_key):
        for b in fam:
            for r, op in ((o & b, "&"), (o | b, "|")):
                if not h_open_mask_of(space, r):
                    problems.append(f"open {u.from_mask(o)} {op} h-open {u.from_mask(b)} not h-open")
    return problems


def _check_h_monotone(space: NanoSpace) -> list[str]:
    u = space.universe
    full = u.full_mask
    hint = [h_interior_mask(space, b) for b in range(full + 1)]
    hcl = [h_closure_mask(space, b) for b in range(full + 1)]
    problems = []
    for b2 in range(full + 1):
        b1 = b2
        while True:
            if hint[b1] & ~hint[b2] or hcl[b1] & ~hcl[b2]:
                problems.append(f"monotonicity fails for {u.from_mask(b1)} <= {u.from_mask(b2)}")
            if b1 == 0:
                break
            b1 = (b1 - 1) & b2
    return problems


def _check_h_fixed_points(space: NanoSpace) -> list[str]:
    u = space.universe
    full = u.full_mask
    problems = []
    for b in range(full + 1):
        i, c = h_interior_mask(space, b), h_closure_mask(space, b)
        if i & ~b or b & ~c:
            problems.append(f"hInt <= B <= hCl fails for {u.from_mask(b)}")
        if h_open_mask_of(space, b) != (i == b):
            problems.append(f"h-open iff B == hInt(B) fails for {u.from_mask(b)}")
        if h_open_mask_of(space, full & ~b) != (c == b):
            problems.append(f"h-closed iff B == hCl(B) fails for {u.from_mask(b)}")
    return problems


def _check_h_duality(space: NanoSpace) -> list[str]:
    u = space.universe
    full = u.full_mask
    return [
        f"hCl != ~hInt(~B) for {u.from_mask(b)}"
        for b in range(full + 1)
        if h_closure_mask(space, b) != full & ~h_interior_mask(space, full & ~b)
    ]


def _check_h_family_oracle(space: NanoSpace) -> list[str]:
    # fixed points of the uncached h-interior versus the cached family
    u = space.universe
    fixed = {
        b for b in range(u.full_mask + 1) if h_interior_mask(space, b, use_cache=False) == b
    }
    fam = set(h_open_family(space).masks)
    if fixed != fam:
        diff = sorted(fixed ^ fam, key=mask_sort_key)
        return [f"family and hInt fixed points differ on {[str(u.from_mask(d)) for d in diff]}"]
    return []


SET_CHECKS: tuple[tuple[str, Callable[[NanoSpace], list[str]]], ...] = (
    ("rough-approximation-laws", _check_rough),
    ("nano-topology-laws", _check_nano),
    ("open-implies-h-open", _check_open_is_h_open),
    ("h-open-intersection-union", _check_h_lattice),
    ("open-with-h-open", _check_open_with_h_open),
    ("h-operator-monotonicity", _check_h_monotone),
    ("h-operator-fixed-points", _check_h_fixed_points),
    ("h-interior-closure-duality", _check_h_duality),
    ("h-family-matches-interior-fixed-points", _check_h_family_oracle),
)


def verify_set_theorems(max_space_size: int = 4) -> list[TheoremReport]:
    reports = [TheoremReport(name) for name, _ in SET_CHECKS]
    for n in range(1, max_space_size + 1):
        for space in _spaces(n):
            for report, (_, check) in zip(reports, SET_CHECKS):
                t0 = time.perf_counter()
                problems = check(space)
                report.elapsed += time.perf_counter() - t0
                report.instances += 1
                for p in problems:
                    report.fail({"space": describe_space(space), "problem": p})
    return reports


# ---------------------------------------------------------------------------
# Map-level sweep
# ---------------------------------------------------------------------------

_TABLES: dict = {}


def _tables(n: int, i: int, backend: str | None):
    key = (n, i, backend)
    if key not in _TABLES:
        _TABLES[key] = space_tables(_spaces(n)[i], backend=backend)
    return _TABLES[key]


def clear_caches() -> None:
    """Drop the enumerated spaces and their lookup tables (for cold timings)."""
    _spaces.cache_clear()
    _TABLES.clear()


def reference_rows(domain: NanoSpace, codomain: NanoSpace) -> np.ndarray:
    """Kernel-layout rows computed map by map through :mod:`nanoh.maps`."""
    rows = []
    for fmap in enumerate_maps(domain, codomain):
        cls = classify_map(fmap).as_dict()
        thm4 = check_thm4_conditions(fmap)
        rows.append([cls[c] for c in _kernels.COLUMNS[:12]] + list(thm4))
    return np.array(rows, dtype=np.bool_).reshape(-1, _kernels.NCOLS)


def _fresh(space: NanoSpace) -> NanoSpace:
    return build_nano_space(space.partition, space.x, audit=False)


def _rows_for_domain(m: int, n: int, i: int, engine: str) -> list[np.ndarray]:
    dom_spaces, cod_spaces = _spaces(m), _spaces(n)
    out = []
    if engine == "reference":
        dom = _fresh(dom_spaces[i])
        h_open_family(dom, backend="python")
        for cod in cod_spaces:
            cod = _fresh(cod)
            h_open_family(cod, backend="python")
            out.append(reference_rows(dom, cod))
        return out
    backend = None if engine == "kernel" else engine
    dflags, dops = _tables(m, i, backend)
    for j in range(len(cod_spaces)):
        cflags, cops = _tables(n, j, backend)
        out.append(_kernels.sweep_maps(m, n, dflags, dops, cflags, cops, backend=backend))
    return out


def _rows_task(args):
    return _rows_for_domain(*args)


def iter_map_rows(
    max_domain: int,
    max_codomain: int,
    engine: str = "kernel",
    workers: int = 1,
) -> Iterator[tuple[int, int, int, int, np.ndarray]]:
    """Yield ``(m, n, i, j, rows)`` for every domain/codomain space pair in sweep order.

    ``engine`` is ``"kernel"`` (default backend), ``"numba"``, ``"numpy"`` or
    ``"reference"``.  With ``workers > 1`` domain chunks are computed in
    worker processes; results are consumed in sweep order regardless.
    """
    if engine not in ("kernel", "numba", "numpy", "reference"):
        raise ValueError(f"unknown engine {engine!r}")
    tasks = [
        (m, n, i, engine)
        for m in range(1, max_domain + 1)
        for n in range(1, max_codomain + 1)
        for i in range(len(_spaces(m)))
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for (m, n, i, _), chunk in zip(tasks, pool.map(_rows_task, tasks, chunksize=4)):
                for j, rows in enumerate(chunk):
                    yield m, n, i, j, rows
    else:
        for task in tasks:
            m, n, i, _ = task
            for j, rows in enumerate(_rows_task(task)):
                yield m, n, i, j, rows


def _assignment(idx: int, m: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(m):
        digits.append(idx % n)
        idx //= n
    return tuple(reversed(digits))


def _map_at(m: int, n: int, i: int, j: int, k: int) -> PointMap:
    return PointMap(_spaces(m)[i], _spaces(n)[j], _assignment(k, m, n))


def _map_descriptor(fmap: PointMap) -> dict:
    return {
        "domain": describe_space(fmap.domain),
        "codomain": describe_space(fmap.codomain),
        "map": fmap.as_dict(),
    }


def implication_name(a: str, b: str) -> str:
    return f"{a}=>{b}"


def verify_map_theorems(
    max_map_size: int = 3, engine: str = "kernel", workers: int = 1
) -> list[TheoremReport]:
    thm4 = TheoremReport("thm4-equivalence")
    homeo = TheoremReport("homeomorphism-definitions")
    imps = [TheoremReport(implication_name(a, b)) for a, b in IMPLICATIONS]
    col = _kernels.COL
    t4 = [col[c] for c in THM4_COLUMNS]
    pairs = [(col[a], col[b]) for a, b in IMPLICATIONS]
    t0 = time.perf_counter()
    for m, n, i, j, rows in iter_map_rows(max_map_size, max_map_size, engine, workers):
        count = rows.shape[0]
        thm4.instances += count
        homeo.instances += count
        block = rows[:, t4]
        bad = np.flatnonzero(block.any(axis=1) & ~block.all(axis=1))
        for k in bad:
            thm4.fail({**_map_descriptor(_map_at(m, n, i, j, k)),
                       "conditions": [bool(v) for v in block[k]]})
        for name, parts in (
            ("nano_homeomorphism", ("bijective", "nano_continuous", "nano_open_map")),
            ("h_homeomorphism", ("bijective", "h_continuous", "h_open_map")),
        ):
            expect = np.logical_and.reduce([rows[:, col[p]] for p in parts])
            for k in np.flatnonzero(rows[:, col[name]] != expect):
                homeo.fail({**_map_descriptor(_map_at(m, n, i, j, k)), "property": name})
        for report, (a, b) in zip(imps, pairs):
            report.instances += count
            for k in np.flatnonzero(rows[:, a] & ~rows[:, b]):
                report.fail(_map_descriptor(_map_at(m, n, i, j, k)))
    elapsed = time.perf_counter() - t0
    for r in (thm4, homeo, *imps):
        r.elapsed = elapsed
    return [thm4, homeo, *imps]


def verify_theorems(
    max_space_size: int = 4,
    max_map_size: int = 3,
    engine: str = "kernel",
    workers: int = 1,
) -> list[TheoremReport]:
    """Run every set-level and map-level sweep; one report per theorem."""
    return verify_set_theorems(max_space_size) + verify_map_theorems(
        max_map_size, engine, workers
    )


# ---------------------------------------------------------------------------
# Counterexample miner
# ---------------------------------------------------------------------------


def parse_implication(text) -> tuple[str, str]:
    if isinstance(text, str):
        if "=>" not in text:
            raise KeyError(f"implication must look like 'a=>b', got {text!r}")
        a, b = text.split("=>", 1)
    else:
        a, b = text
    return resolve_predicate(a), resolve_predicate(b)


def mine_counterexample(
    implication,
    max_domain: int = 3,
    max_codomain: int = 3,
    engine: str = "kernel",
    workers: int = 1,
) -> Witness | None:
    """First map (in sweep order) satisfying the antecedent but not the consequent."""
    a, b = parse_implication(implication)
    ca, cb = _kernels.COL[a], _kernels.COL[b]
    for m, n, i, j, rows in iter_map_rows(max_domain, max_codomain, engine, workers):
        hits = np.flatnonzero(rows[:, ca] & ~rows[:, cb])
        if hits.size:
            k = int(hits[0])
            fmap = _map_at(m, n, i, j, k)
            row = rows[k]
            cls = {name: bool(row[_kernels.COL[name]]) for name in _kernels.COLUMNS[1:12]}
            cls["bijective"] = bool(row[_kernels.COL["bijective"]])
            return Witness(
                domain=describe_space(fmap.domain),
                codomain=describe_space(fmap.codomain),
                assignment=fmap.as_dict(),
                antecedent=a,
                consequent=b,
                classification=cls,
            )
    return None


# ---------------------------------------------------------------------------
# Worked-example fixtures
# ---------------------------------------------------------------------------


def fixture_path(name: str):
    return resources.files("nanoh") / "fixtures" / name


def _fam(fam) -> list[str]:
    return [str(s) for s in fam]


def _h_fam(space: NanoSpace) -> list[str]:
    return _fam(h_open_family(space))


def _powerset(space: NanoSpace) -> list[str]:
    u = space.universe
    return _fam(sorted(u.powerset(), key=Subset.sort_key))


def _fixture_checks() -> Iterator[tuple[str, object, object]]:
    """Yield ``(check, actual, expected)`` triples."""
    from .h_sets import h_closure, h_interior, is_nano_h_open
    from .nano_topology import is_nano_clopen, is_nano_closed, is_nano_open, n_closure, n_interior

    sp = load_space(fixture_path("four_point_space.json"))
    u = sp.universe
    yield "four-point: open family", _fam(sp.open_family), ["{}", "{a,d}", "{a,b,c,d}"]
    yield "four-point: {a} h-open", is_nano_h_open(sp, u.subset("a")), True
    yield "four-point: {a} not open", is_nano_open(sp, u.subset("a")), False

    sp = load_space(fixture_path("coarse_pair_space.json"))
    yield "coarse-pair: open family", _fam(sp.open_family), ["{}", "{c}", "{a,b}", "{a,b,c}"]

    f = load_map(fixture_path("identity_discrete_to_coarse.json"))
    cls = classify_map(f)
    yield "discrete->coarse: domain open family", _fam(f.domain.open_family), ["{}", "{a,c}", "{a,b,c}"]
    yield "discrete->coarse: domain h-family is powerset", _h_fam(f.domain), _powerset(f.domain)
    yield "discrete->coarse: h-continuous", cls.h_continuous, True
    yield "discrete->coarse: not nano continuous", cls.nano_continuous, False
    c = f.codomain.universe.subset("c")
    yield "discrete->coarse: preimage {c} not open", is_nano_open(f.domain, preimage(f, c)), False

    f = load_map(fixture_path("relabel_discrete_to_split.json"))
    d, v = f.domain.universe, f.codomain.universe
    cls = classify_map(f)
    yield "relabel-split: domain open family", _fam(f.domain.open_family), ["{}", "{a}", "{a,b,c}"]
    yield "relabel-split: domain h-family", _h_fam(f.domain), ["{}", "{a}", "{b,c}", "{a,b,c}"]
    yield "relabel-split: codomain open family", _fam(f.codomain.open_family), ["{}", "{2,3}", "{1,2,3}"]
    yield "relabel-split: codomain h-family is powerset", _h_fam(f.codomain), _powerset(f.codomain)
    bc = d.subset(["b", "c"])
    yield "relabel-split: hCl({b,c})", str(h_closure(f.domain, bc)), "{b,c}"
    yield "relabel-split: image(hCl({b,c}))", str(image(f, h_closure(f.domain, bc))), "{2,3}"
    yield "relabel-split: nCl(image({b,c}))", str(n_closure(f.codomain, image(f, bc))), "{1,2,3}"
    yield "relabel-split: hCl(preimage({2,3}))", str(h_closure(f.domain, preimage(f, v.subset(["2", "3"])))), "{b,c}"
    yield "relabel-split: preimage(nCl({2,3}))", str(preimage(f, n_closure(f.codomain, v.subset(["2", "3"])))), "{a,b,c}"
    yield "relabel-split: preimage(nInt({1}))", str(preimage(f, n_interior(f.codomain, v.subset("1")))), "{}"
    yield "relabel-split: hInt(preimage({1}))", str(h_interior(f.domain, preimage(f, v.subset("1")))), "{a}"
    yield "relabel-split: thm4 conditions", list(check_thm4_conditions(f)), [True] * 5
    yield "relabel-split: h-continuous", cls.h_continuous, True
    yield "relabel-split: h-open map", cls.h_open_map, True
    yield "relabel-split: h-homeomorphism", cls.h_homeomorphism, True
    yield "relabel-split: not nano continuous", cls.nano_continuous, False
    yield "relabel-split: not nano open map", cls.nano_open_map, False
    yield "relabel-split: not nano homeomorphism", cls.nano_homeomorphism, False
    yield "relabel-split: not h-irresolute", cls.h_irresolute, False
    yield "relabel-split: preimage {2} not h-open", is_nano_h_open(f.domain, preimage(f, v.subset("2"))), False

    f = load_map(fixture_path("identity_coarse_to_discrete.json"))
    cls = classify_map(f)
    c = f.domain.universe.subset("c")
    yield "coarse->discrete: codomain h-family is powerset", _h_fam(f.codomain), _powerset(f.codomain)
    yield "coarse->discrete: h-open map", cls.h_open_map, True
    yield "coarse->discrete: not nano open map", cls.nano_open_map, False
    yield "coarse->discrete: image {c} not open", is_nano_open(f.codomain, image(f, c)), False

    f = load_map(fixture_path("identity_block_ab.json"))
    cls = classify_map(f)
    ac = f.codomain.universe.subset(["a", "c"])
    yield "block-ab: domain h-family is powerset", _h_fam(f.domain), _powerset(f.domain)
    yield "block-ab: codomain h-family is powerset", _h_fam(f.codomain), _powerset(f.codomain)
    yield "block-ab: h-irresolute", cls.h_irresolute, True
    yield "block-ab: not h-totally continuous", cls.h_totally_continuous, False
    yield "block-ab: preimage {a,c} not clopen", is_nano_clopen(f.domain, preimage(f, ac)), False

    f = load_map(fixture_path("identity_h_totally.json"))
    cls = classify_map(f)
    yield "h-totally: domain open family", _fam(f.domain.open_family), ["{}", "{a}", "{b,c}", "{a,b,c}"]
    yield "h-totally: codomain h-family", _h_fam(f.codomain), ["{}", "{a}", "{b,c}", "{a,b,c}"]
    yield "h-totally: h-totally continuous", cls.h_totally_continuous, True

    f = load_map(fixture_path("identity_totally_not_h.json"))
    cls = classify_map(f)
    yield "totally-not-h: codomain open family", _fam(f.codomain.open_family), ["{}", "{b,c}", "{a,b,c}"]
    yield "totally-not-h: nano totally continuous", cls.nano_totally_continuous, True
    yield "totally-not-h: not h-totally continuous", cls.h_totally_continuous, False

    f = load_map(fixture_path("relabel_h_contra.json"))
    cls = classify_map(f)
    two = f.codomain.universe.subset("2")
    yield "h-contra: domain h-family is powerset", _h_fam(f.domain), _powerset(f.domain)
    yield "h-contra: codomain open family", _fam(f.codomain.open_family), ["{}", "{2}", "{1,2,3}"]
    yield "h-contra: h-contra continuous", cls.h_contra_continuous, True
    yield "h-contra: not nano contra continuous", cls.nano_contra_continuous, False
    yield "h-contra: not nano totally continuous", cls.nano_totally_continuous, False
    yield "h-contra: preimage {2} not closed", is_nano_closed(f.domain, preimage(f, two)), False


def run_paper_fixtures() -> TheoremReport:
    """Replay every worked example; mismatches land in ``failures``."""
    report = TheoremReport("worked-examples")
    t0 = time.perf_counter()
    for check, actual, expected in _fixture_checks():
        report.instances += 1
        if actual != expected:
            report.fail({"check": check, "expected": expected, "actual": actual})
    report.elapsed = time.perf_counter() - t0
    return report


def fixture_names() -> list[str]:
    return sorted(p.name for p in resources.files("nanoh").joinpath("fixtures").iterdir()
                  if p.name.endswith(".json"))


def sweep_counts(sizes: Sequence[int]) -> dict[int, int]:
    return {n: len(_spaces(n)) for n in sizes}
