"""Brute-force reference implementations over plain frozensets.

Deliberately written from the definitions with no bitmask tricks, so they
stay independent of the package internals they check.
"""

from itertools import chain, combinations


def powerset(elements):
    elements = list(elements)
    return [
        frozenset(c)
        for c in chain.from_iterable(combinations(elements, r) for r in range(len(elements) + 1))
    ]


def block_of(blocks, x):
    return next(b for b in blocks if x in b)


def lower(universe, blocks, x):
    return frozenset().union(*[block_of(blocks, e) for e in universe if block_of(blocks, e) <= x])


def upper(universe, blocks, x):
    return frozenset().union(*[block_of(blocks, e) for e in universe if block_of(blocks, e) & x])


def topology(universe, blocks, x):
    u = frozenset(universe)
    lo, up = lower(universe, blocks, x), upper(universe, blocks, x)
    return {frozenset(), u, lo, up, up - lo}


def interior(opens, b):
    return frozenset().union(*[o for o in opens if o <= b])


def closure(universe, opens, b):
    u = frozenset(universe)
    closed = [u - o for o in opens]
    return frozenset(u).intersection(*[c for c in closed if b <= c])


def is_h_open(universe, opens, b):
    u = frozenset(universe)
    return all(b <= interior(opens, b | o) for o in opens if o and o != u)


def h_family(universe, opens):
    return {b for b in powerset(universe) if is_h_open(universe, opens, b)}


def set_partitions(elements):
    elements = list(elements)
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for p in set_partitions(rest):
        for i in range(len(p)):
            yield p[:i] + [p[i] | {first}] + p[i + 1:]
        yield p + [frozenset([first])]


def bell(n):
    """Bell numbers from the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]
