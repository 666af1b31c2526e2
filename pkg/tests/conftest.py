import sys

import pytest

from nanoh import nano_topology
from nanoh.core_sets import make_partition, make_universe
from nanoh.nano_topology import build_nano_space

nano_topology.AUDIT = True


def make_space(labels, blocks, x):
    u = make_universe(labels)
    return build_nano_space(make_partition(u, blocks), u.subset(x))


@pytest.fixture
def four_point():
    return make_space("abcd", [["a"], ["d"], ["b", "c"]], ["a", "d"])


@pytest.fixture
def discrete_a():
    """Discrete partition on {a,b,c} with X = {a}."""
    return make_space("abc", [["a"], ["b"], ["c"]], ["a"])


@pytest.fixture
def coarse_pair():
    return make_space("abc", [["a", "b"], ["c"]], ["a", "c"])


@pytest.fixture
def split_123():
    return make_space("123", [["1"], ["2", "3"]], ["2", "3"])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
