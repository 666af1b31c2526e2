"""CLI behaviour and golden-file output for the bundled fixture corpus.

Regenerate the golden files with ``NANOH_REGOLD=1 pytest tests/test_cli.py``
after checking the new output by hand.
"""

import json
import os
from pathlib import Path

import pytest

from nanoh.cli import main
from nanoh.files import load_space, parse_space
from nanoh.verify import fixture_names, fixture_path

GOLDEN = Path(__file__).parent / "golden"
REGOLD = os.environ.get("NANOH_REGOLD") == "1"

SPACE_FIXTURES = ["four_point_space.json", "coarse_pair_space.json"]
MAP_FIXTURES = [n for n in fixture_names() if n not in SPACE_FIXTURES]


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def golden_cases():
    for name in SPACE_FIXTURES:
        for fmt in ("text", "json"):
            yield f"{name[:-5]}.space.{fmt}", ["space", fixture_path(name), "--hfamily", "--format", fmt]
    for name in MAP_FIXTURES:
        for fmt in ("text", "json"):
            yield f"{name[:-5]}.map.{fmt}", ["map", fixture_path(name), "--thm4", "--format", fmt]
    yield "mine.h-continuous.text", ["mine", "h-continuous=>continuous", "3", "3"]
    yield "mine.continuous.text", ["mine", "continuous=>h-continuous", "3", "3"]
    yield "verify.2.json", ["--format", "json", "verify", "--max-space-size", "2", "--max-map-size", "2"]


@pytest.mark.parametrize("golden, argv", list(golden_cases()), ids=lambda v: v if isinstance(v, str) else "")
def test_golden(capsys, golden, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    path = GOLDEN / golden
    if REGOLD:
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")


def test_space_report_values(capsys):
    code, out, _ = run(capsys, "space", fixture_path("four_point_space.json"))
    assert code == 0
    assert "open: [{}, {a,d}, {a,b,c,d}]" in out
    code, out, _ = run(capsys, "space", fixture_path("coarse_pair_space.json"))
    assert "open: [{}, {c}, {a,b}, {a,b,c}]" in out


def test_set_command(capsys):
    path = fixture_path("relabel_discrete_to_split.json")
    # the map file embeds the domain; write it out as a standalone space file
    domain = json.loads(path.read_text())["domain"]
    return_path = Path(os.environ.get("TMPDIR", "/tmp")) / "nanoh_split_domain.json"
    return_path.write_text(json.dumps(domain))
    code, out, _ = run(capsys, "set", return_path, "b,c", "--ops", "nclh")
    assert code == 0 and out == "set: {b,c}\nnclh: {b,c}\n"
    code, out, _ = run(capsys, "set", return_path, "a", "--ops", "ninth")
    assert out == "set: {a}\nninth: {a}\n"
    code, out, _ = run(capsys, "--format", "json", "set", return_path, "", "--ops", "nint")
    assert json.loads(out) == {"set": [], "nint": []}


def test_map_command_values(capsys):
    code, out, _ = run(capsys, "--format", "json", "map", fixture_path("relabel_discrete_to_split.json"))
    cls = json.loads(out)["classification"]
    assert cls["h_homeomorphism"] and not cls["nano_homeomorphism"]
    code, out, _ = run(capsys, "--format", "json", "map", fixture_path("relabel_h_contra.json"))
    assert json.loads(out)["classification"]["h_contra_continuous"]


def test_mine_outputs(capsys):
    code, out, _ = run(capsys, "mine", "continuous=>h-continuous")
    assert code == 0 and out == "continuous=>h-continuous: none\n"
    code, out, _ = run(capsys, "mine", "h-continuous=>continuous", "3", "3")
    assert code == 0 and "witness" in out
    code, _, err = run(capsys, "mine", "smooth=>continuous")
    assert code == 2 and "unknown" in err


def _write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return p


def test_exit_codes(tmp_path, capsys):
    overlap = _write(tmp_path, "overlap.json", {"universe": ["a", "b", "c"], "partition": [["a", "b"], ["b", "c"]], "x": []})
    assert run(capsys, "space", overlap)[0] == 3
    broken = _write(tmp_path, "broken.json", "{not json")
    assert run(capsys, "space", broken)[0] == 2
    missing_field = _write(tmp_path, "nofield.json", {"universe": ["a"], "partition": [["a"]]})
    assert run(capsys, "space", missing_field)[0] == 2
    assert run(capsys, "space", tmp_path / "absent.json")[0] == 2
    space = {"universe": ["a", "b"], "partition": [["a"], ["b"]], "x": ["a"]}
    partial = _write(tmp_path, "partial.json", {"domain": space, "codomain": space, "map": {"a": "a"}})
    assert run(capsys, "map", partial)[0] == 3
    good = _write(tmp_path, "good.json", space)
    assert run(capsys, "set", good, "q")[0] == 3
    assert run(capsys, "set", good, "a", "--ops", "bogus")[0] == 2
    assert run(capsys, "--max-universe", "1", "space", good, "--hfamily")[0] == 4
    assert run(capsys, "--max-universe", "1", "set", good, "a", "--ops", "nclh")[0] == 4
    assert run(capsys, "--max-universe", "1", "space", good)[0] == 0
    assert run(capsys, "verify", "--max-space-size", "20")[0] == 4
    with pytest.raises(SystemExit) as exc:
        main(["nonsense"])
    assert exc.value.code == 2


def test_map_file_with_relative_paths(capsys):
    code, out, _ = run(capsys, "map", fixture_path("identity_discrete_to_coarse.json"))
    assert code == 0 and "h_continuous: true" in out and "nano_continuous: false" in out


def test_space_json_round_trips(capsys):
    for name in SPACE_FIXTURES:
        _, out, _ = run(capsys, "--format", "json", "space", fixture_path(name), "--hfamily")
        assert parse_space(json.loads(out)) == load_space(fixture_path(name))


def test_output_is_deterministic(capsys):
    for _, argv in golden_cases():
        first = run(capsys, *argv)[1]
        assert run(capsys, *argv)[1] == first
