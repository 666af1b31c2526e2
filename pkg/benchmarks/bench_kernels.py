"""Time the numba kernels against the pure-numpy fallback.

    python3 benchmarks/bench_kernels.py [--sizes 10 12 14 16] [--repeat 5]

Each kernel runs once per backend before timing so JIT compilation (or the
on-disk cache load) is excluded.  Results from both backends are compared
before any timing is reported.
"""

import argparse
import random
import timeit

import numpy as np

from nanoh import _kernels
from nanoh.core_sets import make_partition, make_universe
from nanoh.h_sets import _open_member, space_tables
from nanoh.nano_topology import build_nano_space


def random_space(n, rng):
    labels = [f"e{i}" for i in range(n)]
    blocks = {}
    for x in labels:
        blocks.setdefault(rng.randrange(max(2, n // 2)), []).append(x)
    partition = make_partition(make_universe(labels), list(blocks.values()))
    x = partition.universe.subset([lab for lab in labels if rng.random() < 0.5])
    return build_nano_space(partition, x)


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[10, 12, 14, 16])
    ap.add_argument("--map-sizes", type=int, nargs="+", default=[3, 4, 5, 6])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    backends = {"numba": _kernels.NUMBA_KERNELS, "numpy": _kernels.NUMPY_KERNELS}

    print(f"{'kernel':<24}{'size':>6}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for n in args.sizes:
        member = _open_member(random_space(n, rng))
        for name in ("interior_table", "h_open_mask"):
            outs, times = [], {}
            for b, ks in backends.items():
                fn = ks[name]
                outs.append(fn(n, member))
                times[b] = bench(lambda: fn(n, member), args.repeat)
            assert np.array_equal(outs[0], outs[1]), f"{name} backends disagree at n={n}"
            print(f"{name:<24}{n:>6}{times['numba'] * 1e3:>12.2f}"
                  f"{times['numpy'] * 1e3:>12.2f}{times['numpy'] / times['numba']:>10.1f}")

    for m in args.map_sizes:
        dom, cod = random_space(m, rng), random_space(m, rng)
        outs, times = [], {}
        for b, ks in backends.items():
            d, c = space_tables(dom, backend=b), space_tables(cod, backend=b)
            fn = ks["sweep_maps"]
            outs.append(fn(m, m, *d, *c))
            times[b] = bench(lambda: fn(m, m, *d, *c), args.repeat)
        assert np.array_equal(outs[0], outs[1]), f"sweep_maps backends disagree at m={m}"
        label = f"sweep_maps ({m ** m} maps)"
        print(f"{label:<24}{m:>6}{times['numba'] * 1e3:>12.2f}"
              f"{times['numpy'] * 1e3:>12.2f}{times['numpy'] / times['numba']:>10.1f}")


if __name__ == "__main__":
    main()
