"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py -s`` to see the summary lines, or
directly with ``python3 tests/test_acceptance.py``.
"""

import io
import json
import sys
import time
from contextlib import redirect_stdout
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from oracles import bell, set_partitions  # noqa: E402

from nanoh import verify  # noqa: E402
from nanoh.cli import main  # noqa: E402
from nanoh.maps import SHORT_NAMES  # noqa: E402

SET_BUDGET = 10.0
MAP_BUDGET = 60.0
MINE_BUDGET = 60.0
FIXTURE_BUDGET = 1.0


# Collected for the end-of-run summary in conftest.
RESULTS: list[str] = []


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, detail


def _timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


def _cli(*argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main([str(a) for a in argv])
    return code, buf.getvalue()


def test_1_worked_examples():
    verify.run_paper_fixtures()  # warm-up: imports and JIT cache load
    rep, dt = _timed(verify.run_paper_fixtures)
    ok = rep.passed and rep.instances > 0 and dt < FIXTURE_BUDGET
    report(1, ok, f"{rep.instances} example checks, {rep.failure_count} mismatches, {dt:.3f}s")


def test_2_set_level_sweep():
    verify.clear_caches()
    reps, dt = _timed(verify.verify_set_theorems, 4)
    failures = sum(r.failure_count for r in reps)
    n4 = verify.sweep_counts([4])[4]
    ok = failures == 0 and n4 == 240 and dt < SET_BUDGET
    detail = (
        f"{len(reps)} properties over {reps[0].instances} spaces with |U|<=4 "
        f"({n4} at |U|=4), {failures} failures, {dt:.2f}s"
    )
    report(2, ok, detail)


def _map_sweep(engine):
    verify.clear_caches()
    return _timed(verify.verify_map_theorems, 3, engine=engine)


def test_3_h_continuity_characterisations():
    results = {}
    for engine in ("kernel", "reference"):
        reps, dt = _map_sweep(engine)
        thm4 = next(r for r in reps if r.theorem == "thm4-equivalence")
        results[engine] = (thm4.instances, thm4.failure_count, dt)
    ok = all(f == 0 and dt < MAP_BUDGET for _, f, dt in results.values())
    ok = ok and results["kernel"][0] == results["reference"][0]
    detail = "; ".join(
        f"{e}: {n} maps, {f} failures, {dt:.2f}s" for e, (n, f, dt) in results.items()
    )
    report(3, ok, detail)


def test_4_implication_lattice():
    reps, _ = _map_sweep("kernel")
    imps = [r for r in reps if "=>" in r.theorem]
    homeo = next(r for r in reps if r.theorem == "homeomorphism-definitions")
    bad = [r.theorem for r in imps if not r.passed] + ([homeo.theorem] if not homeo.passed else [])
    ok = len(imps) == len(verify.IMPLICATIONS) == 8 and not bad
    report(4, ok, f"{len(imps)} implications over {imps[0].instances} maps, failing: {bad or 'none'}")


def test_5_miner():
    verify.mine_counterexample(verify.CONVERSES[0], 1, 1)  # warm-up
    problems, slowest = [], 0.0
    for a, b in verify.CONVERSES:
        w, dt = _timed(verify.mine_counterexample, (a, b), 3, 3)
        slowest = max(slowest, dt)
        replay = w.replay() if w is not None else {}
        if w is None or (replay.get(a), replay.get(b)) != (True, False):
            problems.append(f"no witness for {SHORT_NAMES[a]}=>{SHORT_NAMES[b]}")
    for a, b in verify.IMPLICATIONS:
        w, dt = _timed(verify.mine_counterexample, (a, b), 3, 3)
        slowest = max(slowest, dt)
        if w is not None:
            problems.append(f"spurious witness for {SHORT_NAMES[a]}=>{SHORT_NAMES[b]}")
    ok = not problems and slowest < MINE_BUDGET
    detail = (
        f"{len(verify.CONVERSES)} converses refuted, {len(verify.IMPLICATIONS)} forward "
        f"queries empty, slowest query {slowest:.2f}s"
    )
    report(5, ok, "; ".join(problems) if problems else detail)


def test_6_enumeration_counts():
    got = verify.sweep_counts(range(1, 5))
    expected = {n: bell(n) * 2**n for n in range(1, 5)}
    brute = {n: sum(1 for _ in set_partitions(list(range(n)))) * 2**n for n in range(1, 5)}
    ok = got == expected == brute == {1: 2, 2: 8, 3: 40, 4: 240}
    report(6, ok, f"counts {got}, independent {brute}")


def test_7_determinism():
    runs = [
        _cli("--format", "json", "verify"),
        _cli("--format", "json", "verify"),
        _cli("--format", "json", "verify", "--workers", "2"),
    ]
    same_verify = all(r == runs[0] for r in runs) and runs[0][0] == 0
    fixture_cmds = [["--format", "json", "fixtures"]]
    for name in verify.fixture_names():
        path = verify.fixture_path(name)
        if "domain" in json.loads(path.read_text()):
            fixture_cmds.append(["--format", "json", "map", path, "--thm4"])
        else:
            fixture_cmds.append(["--format", "json", "space", path, "--hfamily"])
    same_fixtures = all(_cli(*c) == _cli(*c) for c in fixture_cmds)
    ok = same_verify and same_fixtures
    report(
        7, ok,
        f"verify x3 (one with 2 workers) identical: {same_verify}; "
        f"{len(fixture_cmds)} fixture commands identical: {same_fixtures}",
    )


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
