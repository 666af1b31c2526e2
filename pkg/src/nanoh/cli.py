"""Command-line front end.

Exit codes: 0 success, 1 a verification sweep found failures, 2 parse or
usage error, 3 validation error, 4 universe cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .core_sets import (
    CapExceededError,
    NanoError,
    Subset,
    ValidationError,
    as_subset,
    get_max_universe,
    set_max_universe,
)
from .files import ParseError, load_map, load_space
from .h_sets import h_closure, h_interior, h_open_family, is_nano_h_closed, is_nano_h_open
from .maps import SHORT_NAMES, classify_map, check_thm4_conditions, thm4_strict_inclusions
from .nano_topology import n_closure, n_interior, nano_closed_sets
from .rough import approximations, is_rough
from . import verify

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3, 4

SET_OPS = ("nint", "ncl", "ninth", "nclh", "is-hopen", "is-hclosed")


class UsageError(NanoError):
    pass


def _labels(s: Subset) -> list[str]:
    return list(s.labels)


def _family(fam) -> list[list[str]]:
    return [list(s.labels) for s in fam]


def _text_family(fam) -> str:
    return "[" + ", ".join(str(s) for s in fam) + "]"


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _parse_subset(space, text: str) -> Subset:
    labels = [t.strip() for t in text.split(",") if t.strip()]
    return as_subset(space.universe, labels)


def cmd_space(args) -> int:
    space = load_space(args.path)
    lo, up, bd = approximations(space.partition, space.x)
    payload = space.describe()
    payload.update(
        lower=_labels(lo),
        upper=_labels(up),
        boundary=_labels(bd),
        rough=is_rough(space.partition, space.x),
        open=_family(space.open_family),
        closed=_family(nano_closed_sets(space)),
    )
    lines = [
        f"universe: {space.universe}",
        f"partition: {space.partition}",
        f"x: {space.x}",
        f"lower: {lo}",
        f"upper: {up}",
        f"boundary: {bd}",
        f"rough: {str(payload['rough']).lower()}",
        f"open: {_text_family(space.open_family)}",
        f"closed: {_text_family(nano_closed_sets(space))}",
    ]
    if args.hfamily:
        fam = h_open_family(space)
        payload["h_open"] = _family(fam)
        lines.append(f"h-open: {_text_family(fam)}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_set(args) -> int:
    space = load_space(args.path)
    b = _parse_subset(space, args.subset)
    ops = [o.strip() for o in args.ops.split(",") if o.strip()] if args.ops else list(SET_OPS)
    bad = [o for o in ops if o not in SET_OPS]
    if bad:
        raise UsageError(f"unknown set operation(s) {bad}; choose from {list(SET_OPS)}")
    funcs = {
        "nint": lambda: n_interior(space, b),
        "ncl": lambda: n_closure(space, b),
        "ninth": lambda: h_interior(space, b),
        "nclh": lambda: h_closure(space, b),
        "is-hopen": lambda: is_nano_h_open(space, b),
        "is-hclosed": lambda: is_nano_h_closed(space, b),
    }
    if any(o in ("ninth", "nclh") for o in ops):
        h_open_family(space)
    payload = {"set": _labels(b)}
    lines = [f"set: {b}"]
    for op in ops:
        val = funcs[op]()
        if isinstance(val, Subset):
            payload[op] = _labels(val)
            lines.append(f"{op}: {val}")
        else:
            payload[op] = val
            lines.append(f"{op}: {str(val).lower()}")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_map(args) -> int:
    fmap = load_map(args.path)
    cls = classify_map(fmap).as_dict()
    payload = {"map": fmap.as_dict(), "classification": cls}
    lines = [
        "map: " + ", ".join(f"{k}->{v}" for k, v in fmap.as_dict().items()),
        *(f"{k}: {str(v).lower()}" for k, v in cls.items()),
    ]
    if args.thm4:
        cond = check_thm4_conditions(fmap)
        strict = thm4_strict_inclusions(fmap)
        payload["thm4"] = list(cond)
        payload["strict_inclusions"] = [
            {
                "condition": s.condition,
                "argument": _labels(s.argument),
                "left": _labels(s.left),
                "right": _labels(s.right),
            }
            for s in strict
        ]
        lines.append("thm4: " + " ".join(str(v).lower() for v in cond))
        for s in strict:
            lines.append(f"strict ({s.condition}) at {s.argument}: {s.left} < {s.right}")
    _emit(args, payload, lines)
    return EXIT_OK


def _check_sizes(*sizes: int) -> None:
    cap = get_max_universe()
    for n in sizes:
        if n < 1:
            raise UsageError("sizes must be >= 1")
        if n > cap:
            raise CapExceededError(f"size {n} exceeds cap {cap}")


def cmd_verify(args) -> int:
    _check_sizes(args.max_space_size, args.max_map_size)
    t0 = time.perf_counter()
    reports = [verify.run_paper_fixtures()]
    reports += verify.verify_theorems(
        args.max_space_size, args.max_map_size, engine=args.engine, workers=args.workers
    )
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reports)
    payload = {
        "max_space_size": args.max_space_size,
        "max_map_size": args.max_map_size,
        "passed": ok,
        "reports": [r.to_dict(timing=args.timing) for r in reports],
    }
    lines = []
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        extra = f" ({r.elapsed:.3f}s)" if args.timing else ""
        lines.append(f"{status} {r.theorem}: {r.instances} instances, {r.failure_count} failures{extra}")
        for f in r.failures:
            lines.append("    " + json.dumps(f, sort_keys=True))
    lines.append("all theorems verified" if ok else "VERIFICATION FAILED")
    if args.timing:
        payload["elapsed"] = round(elapsed, 4)
        lines.append(f"total {elapsed:.3f}s")
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_mine(args) -> int:
    _check_sizes(args.max_domain, args.max_codomain)
    try:
        a, b = verify.parse_implication(args.implication)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    w = verify.mine_counterexample(
        (a, b), args.max_domain, args.max_codomain, engine=args.engine, workers=args.workers
    )
    name = f"{SHORT_NAMES[a]}=>{SHORT_NAMES[b]}"
    if w is None:
        payload = {"implication": name, "witness": None}
        lines = [f"{name}: none"]
    else:
        payload = {"implication": name, "witness": w.to_dict()}
        lines = [
            f"{name}: witness",
            f"domain: {json.dumps(w.domain)}",
            f"codomain: {json.dumps(w.codomain)}",
            "map: " + ", ".join(f"{k}->{v}" for k, v in w.assignment.items()),
            f"{a}: {str(w.classification[a]).lower()}",
            f"{b}: {str(w.classification[b]).lower()}",
        ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    report = verify.run_paper_fixtures()
    lines = [
        f"{'PASS' if report.passed else 'FAIL'} {report.theorem}: "
        f"{report.instances} checks, {report.failure_count} failures"
    ]
    for f in report.failures:
        lines.append("    " + json.dumps(f, sort_keys=True))
    _emit(args, report.to_dict(timing=False), lines)
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    common.add_argument("--max-universe", type=int, default=argparse.SUPPRESS,
                        help="cap on universe size for powerset scans")

    parser = argparse.ArgumentParser(
        prog="nanoh", description="Nano topologies, nano h-open sets and map classes.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("space", parents=[common], help="approximations and topology of a space file")
    p.add_argument("path")
    p.add_argument("--hfamily", action="store_true", help="also list every nano h-open set")
    p.set_defaults(func=cmd_space)

    p = sub.add_parser("set", parents=[common], help="interior/closure operators on one subset")
    p.add_argument("path")
    p.add_argument("subset", help="comma-separated labels; empty string for the empty set")
    p.add_argument("--ops", default="", help="comma-separated subset of " + ",".join(SET_OPS))
    p.set_defaults(func=cmd_set)

    p = sub.add_parser("map", parents=[common], help="classify a map file")
    p.add_argument("path")
    p.add_argument("--thm4", action="store_true", help="evaluate the five h-continuity characterisations")
    p.set_defaults(func=cmd_map)

    engines = ("kernel", "numba", "numpy", "reference")
    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem sweep")
    p.add_argument("--max-space-size", type=int, default=4)
    p.add_argument("--max-map-size", type=int, default=3)
    p.add_argument("--engine", choices=engines, default="kernel")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="include wall-clock times (non-deterministic)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mine", parents=[common], help="search for a counterexample to 'a=>b'")
    p.add_argument("implication", help="e.g. h-continuous=>continuous; names: "
                   + ", ".join(sorted(SHORT_NAMES.values())))
    p.add_argument("max_domain", type=int, nargs="?", default=3)
    p.add_argument("max_codomain", type=int, nargs="?", default=3)
    p.add_argument("--engine", choices=engines, default="kernel")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("fixtures", parents=[common], help="replay the bundled worked examples")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "format"):
        args.format = "text"
    old_cap = get_max_universe()
    try:
        if getattr(args, "max_universe", None) is not None:
            if args.max_universe < 1:
                raise UsageError("--max-universe must be >= 1")
            set_max_universe(args.max_universe)
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    finally:
        set_max_universe(old_cap)


if __name__ == "__main__":
    sys.exit(main())
