import itertools

import pytest
from hypothesis import given, strategies as st

from nanoh.core_sets import (
    CapExceededError,
    UniverseMismatchError,
    ValidationError,
    block_of,
    canonical_family,
    check_cap,
    make_partition,
    make_universe,
    submasks,
)


def test_make_universe_keeps_order():
    u = make_universe(["a", "b", "c", "d"])
    assert u.size == 4
    assert u.elements == ("a", "b", "c", "d")
    assert make_universe(["a"]).size == 1


@pytest.mark.parametrize("labels", [[], ["a", "a"], ["a", ""], ["a", 3]])
def test_make_universe_rejects(labels):
    with pytest.raises(ValidationError):
        make_universe(labels)


def test_subset_algebra_examples():
    u = make_universe("abcd")
    assert u.subset("ad").complement() == u.subset("bc")
    assert u.subset("ac") | u.subset("ab") == u.subset("abc")
    assert u.subset("a").is_subset_of(u.subset("ad"))
    assert u.subset("ab") & u.subset("bc") == u.subset("b")
    assert u.subset("abc") - u.subset("b") == u.subset("ac")
    assert not u.subset("ab") <= u.subset("a")
    assert u.subset("a") < u.subset("ab")


def test_subset_renders_in_universe_order():
    u = make_universe(["z", "y", "x"])
    s = u.subset(["x", "z"])
    assert str(s) == "{z,x}"
    assert s.labels == ("z", "x")
    assert "x" in s and "y" not in s and "w" not in s


def test_universe_mismatch():
    a, b = make_universe("abc"), make_universe("abd")
    with pytest.raises(UniverseMismatchError):
        a.subset("a") | b.subset("a")
    # equal label rosters make equal universes
    assert make_universe("abc").subset("a") | a.subset("b") == a.subset("ab")


def test_unknown_label():
    with pytest.raises(ValidationError):
        make_universe("abc").subset("q")


@pytest.mark.parametrize("n", range(1, 6))
def test_de_morgan_and_involution_exhaustive(n):
    u = make_universe("abcde"[:n])
    subsets = list(u.powerset())
    for a in subsets:
        assert ~~a == a
        for b in subsets:
            assert ~(a | b) == ~a & ~b
            assert ~(a & b) == ~a | ~b


def test_canonical_family_order():
    u = make_universe("abc")
    fam = [u.full, u.subset("bc"), u.subset("c"), u.empty, u.subset("a"), u.subset("ab"), u.subset("c")]
    assert [str(s) for s in canonical_family(fam)] == ["{}", "{a}", "{c}", "{a,b}", "{b,c}", "{a,b,c}"]


def test_partition_examples():
    u = make_universe("abcd")
    p = make_partition(u, [["a"], ["d"], ["b", "c"]])
    assert [str(b) for b in p.blocks] == ["{a}", "{b,c}", "{d}"]
    assert block_of(p, "b") == u.subset("bc")
    v = make_universe("abc")
    q = make_partition(v, [["a", "b"], ["c"]])
    assert block_of(q, "c") == v.subset("c")
    assert block_of(make_partition(v, [["a"], ["b"], ["c"]]), "a") == v.subset("a")


@pytest.mark.parametrize(
    "blocks", [[["a", "b"], ["b", "c"]], [["a"], ["b"]], [["a", "b", "c"], []]]
)
def test_partition_rejects(blocks):
    with pytest.raises(ValidationError):
        make_partition(make_universe("abc"), blocks)


def test_block_of_unknown():
    p = make_partition(make_universe("ab"), [["a", "b"]])
    with pytest.raises(ValidationError):
        block_of(p, "z")


@st.composite
def partitions(draw):
    n = draw(st.integers(1, 7))
    u = make_universe("abcdefg"[:n])
    labels = draw(st.lists(st.integers(0, n - 1), min_size=n, max_size=n))
    groups = {}
    for e, k in zip(u.elements, labels):
        groups.setdefault(k, []).append(e)
    return make_partition(u, list(groups.values()))


@given(partitions())
def test_blocks_equal_or_disjoint_and_cover(p):
    u = p.universe
    cover = u.empty
    for x, y in itertools.product(u.elements, repeat=2):
        bx, by = block_of(p, x), block_of(p, y)
        assert bx == by or (bx & by).is_empty
    for x in u.elements:
        assert x in block_of(p, x)
        cover = cover | block_of(p, x)
    assert cover == u.full


def test_submasks_enumerates_all():
    assert sorted(submasks(0b1010)) == [0b0, 0b10, 0b1000, 0b1010]


def test_cap():
    u = make_universe([f"e{i}" for i in range(5)])
    check_cap(u, 5)
    with pytest.raises(CapExceededError):
        check_cap(u, 4)
