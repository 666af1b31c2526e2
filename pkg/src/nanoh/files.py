"""JSON space and map description files.

A space file::

    {"universe": ["a", "b", "c"], "partition": [["a", "b"], ["c"]], "x": ["a", "c"]}

A map file holds ``domain`` and ``codomain`` (each an inline space object or
a path relative to the map file) plus ``map``, a label-to-label object that
covers every domain element.  Unknown keys are ignored, so the ``space``
command's JSON report reads back as a space file.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .core_sets import NanoError, make_partition, make_universe
from .maps import PointMap, make_map
from .nano_topology import NanoSpace, build_nano_space


class ParseError(NanoError):
    """The file is not valid JSON or does not have the expected layout."""


def _labels(obj: Any, what: str) -> list[str]:
    if not isinstance(obj, list) or not all(isinstance(v, str) for v in obj):
        raise ParseError(f"{what} must be a list of strings")
    return obj


def _read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc


def parse_space(obj: Any) -> NanoSpace:
    if not isinstance(obj, dict):
        raise ParseError("space description must be a JSON object")
    for key in ("universe", "partition", "x"):
        if key not in obj:
            raise ParseError(f"space description lacks field {key!r}")
    universe = make_universe(_labels(obj["universe"], "universe"))
    if not isinstance(obj["partition"], list):
        raise ParseError("partition must be a list of label lists")
    blocks = [_labels(b, "partition block") for b in obj["partition"]]
    partition = make_partition(universe, blocks)
    x = universe.subset(_labels(obj["x"], "x"))
    return build_nano_space(partition, x)


def load_space(path: str | Path) -> NanoSpace:
    return parse_space(_read_json(path))


def dump_space(space: NanoSpace) -> dict:
    return space.describe()


def _space_ref(ref: Any, base: Path, what: str) -> NanoSpace:
    if isinstance(ref, str):
        return load_space(base / ref)
    if isinstance(ref, dict):
        return parse_space(ref)
    raise ParseError(f"{what} must be a space object or a path")


def parse_map(obj: Any, base: str | Path = ".") -> PointMap:
    if not isinstance(obj, dict):
        raise ParseError("map description must be a JSON object")
    for key in ("domain", "codomain", "map"):
        if key not in obj:
            raise ParseError(f"map description lacks field {key!r}")
    base = Path(base)
    domain = _space_ref(obj["domain"], base, "domain")
    codomain = _space_ref(obj["codomain"], base, "codomain")
    assignment = obj["map"]
    if not isinstance(assignment, dict) or not all(
        isinstance(v, str) for v in assignment.values()
    ):
        raise ParseError("map must be an object from labels to labels")
    return make_map(domain, codomain, assignment)


def load_map(path: str | Path) -> PointMap:
    path = Path(path)
    return parse_map(_read_json(path), path.parent)


def dump_map(fmap: PointMap) -> dict:
    return {
        "domain": fmap.domain.describe(),
        "codomain": fmap.codomain.describe(),
        "map": fmap.as_dict(),
    }
