"""Hot powerset and map-sweep kernels.

Each kernel has a vectorised numpy implementation and a numba ``@njit`` one
with identical outputs.  ``NANOH_KERNEL=numpy`` forces the numpy path;
otherwise numba is used when importable.

Conventions: a space on ``n`` points is described by arrays indexed by subset
mask (length ``2**n``).  ``flags`` is a ``(4, 2**n)`` bool array with rows
FLAG_OPEN, FLAG_CLOSED, FLAG_HOPEN, FLAG_HCLOSED; ``ops`` is a ``(4, 2**n)``
int64 array with rows OP_NINT, OP_NCL, OP_HINT, OP_HCL.  Maps ``m -> n`` are
indexed ``0 .. n**m - 1`` with the first domain point as the most
significant base-``n`` digit.
"""

from __future__ import annotations

import os

import numpy as np

FLAG_OPEN, FLAG_CLOSED, FLAG_HOPEN, FLAG_HCLOSED = range(4)
OP_NINT, OP_NCL, OP_HINT, OP_HCL = range(4)

COLUMNS = (
    "bijective",
    "nano_continuous",
    "nano_open_map",
    "nano_homeomorphism",
    "nano_totally_continuous",
    "nano_contra_continuous",
    "h_continuous",
    "h_open_map",
    "h_irresolute",
    "h_homeomorphism",
    "h_totally_continuous",
    "h_contra_continuous",
    "thm4_1",
    "thm4_2",
    "thm4_3",
    "thm4_4",
    "thm4_5",
)
COL = {name: i for i, name in enumerate(COLUMNS)}
NCOLS = len(COLUMNS)

# ---------------------------------------------------------------------------
# numpy implementations
# ---------------------------------------------------------------------------


def _popcounts(size: int) -> np.ndarray:
    masks = np.arange(size, dtype=np.int64)
    pc = np.zeros(size, dtype=np.int64)
    m = masks.copy()
    while m.any():
        pc += m & 1
        m >>= 1
    return pc


def interior_table_np(n: int, member: np.ndarray) -> np.ndarray:
    """For every mask S, the union of all family members contained in S."""
    size = 1 << n
    masks = np.arange(size, dtype=np.int64)
    member = np.asarray(member, dtype=np.bool_)
    table = np.where(member, masks, 0).astype(np.int64)
    pc = _popcounts(size)
    for k in range(1, n + 1):
        layer = masks[(pc == k) & ~member]
        if layer.size == 0:
            continue
        acc = np.zeros(layer.size, dtype=np.int64)
        for i in range(n):
            bit = np.int64(1 << i)
            has = (layer & bit) != 0
            acc |= np.where(has, table[layer & ~bit], 0)
        table[layer] = acc
    return table


def h_open_mask_np(n: int, open_member: np.ndarray) -> np.ndarray:
    size = 1 << n
    full = size - 1
    nint = interior_table_np(n, open_member)
    masks = np.arange(size, dtype=np.int64)
    ok = np.ones(size, dtype=np.bool_)
    for o in np.flatnonzero(open_member):
        if o == 0 or o == full:
            continue
        ok &= (masks & ~nint[masks | o]) == 0
    return ok


def _assignments(m: int, n: int) -> np.ndarray:
    count = n**m
    idx = np.arange(count, dtype=np.int64)
    out = np.empty((count, m), dtype=np.int64)
    for x in range(m):
        out[:, x] = (idx // n ** (m - 1 - x)) % n
    return out


def _all_of(flags_gathered: np.ndarray) -> np.ndarray:
    if flags_gathered.shape[1] == 0:
        return np.ones(flags_gathered.shape[0], dtype=np.bool_)
    return flags_gathered.all(axis=1)


def sweep_maps_np(m, n, dom_flags, dom_ops, cod_flags, cod_ops):
    """Classify all ``n**m`` maps between two spaces; returns ``(n**m, NCOLS)`` bools."""
    assign = _assignments(m, n)
    count = assign.shape[0]
    xs = np.arange(m, dtype=np.int64)
    cod_sets = np.arange(1 << n, dtype=np.int64)
    dom_sets = np.arange(1 << m, dtype=np.int64)

    bits = (cod_sets[None, None, :] >> assign[:, :, None]) & 1
    pre = (bits << xs[None, :, None]).sum(axis=1)
    single = np.int64(1) << assign
    inside = ((dom_sets[None, :] >> xs[:, None]) & 1).astype(np.bool_)
    img = np.bitwise_or.reduce(
        np.where(inside[None, :, :], single[:, :, None], 0), axis=1
    )
    if img.ndim == 1:
        img = img.reshape(count, 1 << m)

    d_open, d_closed, d_hopen, d_hclosed = dom_flags
    c_open, c_closed, c_hopen, _ = cod_flags
    c_open_idx = np.flatnonzero(c_open)
    c_closed_idx = np.flatnonzero(c_closed)
    c_hopen_idx = np.flatnonzero(c_hopen)
    d_open_idx = np.flatnonzero(d_open)

    pre_open = pre[:, c_open_idx]
    pre_hopen = pre[:, c_hopen_idx]
    img_open = img[:, d_open_idx]

    out = np.zeros((count, NCOLS), dtype=np.bool_)
    out[:, COL["bijective"]] = (m == n) & (img[:, (1 << m) - 1] == (1 << n) - 1)
    out[:, COL["nano_continuous"]] = _all_of(d_open[pre_open])
    out[:, COL["nano_open_map"]] = _all_of(c_open[img_open])
    out[:, COL["nano_totally_continuous"]] = _all_of(
        d_open[pre_open] & d_closed[pre_open]
    )
    out[:, COL["nano_contra_continuous"]] = _all_of(d_closed[pre_open])
    out[:, COL["h_continuous"]] = _all_of(d_hopen[pre_open])
    out[:, COL["h_open_map"]] = _all_of(c_hopen[img_open])
    out[:, COL["h_irresolute"]] = _all_of(d_hopen[pre_hopen])
    out[:, COL["h_totally_continuous"]] = _all_of(
        d_open[pre_hopen] & d_closed[pre_hopen]
    )
    out[:, COL["h_contra_continuous"]] = _all_of(d_hclosed[pre_open])
    out[:, COL["nano_homeomorphism"]] = (
        out[:, COL["bijective"]]
        & out[:, COL["nano_continuous"]]
        & out[:, COL["nano_open_map"]]
    )
    out[:, COL["h_homeomorphism"]] = (
        out[:, COL["bijective"]]
        & out[:, COL["h_continuous"]]
        & out[:, COL["h_open_map"]]
    )

    out[:, COL["thm4_1"]] = out[:, COL["h_continuous"]]
    out[:, COL["thm4_2"]] = _all_of(d_hclosed[pre[:, c_closed_idx]])
    # (3) image(hcl(B)) <= ncl(image(B)) for every B <= U
    lhs3 = np.take_along_axis(img, np.broadcast_to(dom_ops[OP_HCL], img.shape), 1)
    rhs3 = cod_ops[OP_NCL][img]
    out[:, COL["thm4_3"]] = ((lhs3 & ~rhs3) == 0).all(axis=1)
    # (4) hcl(pre(C)) <= pre(ncl(C)) for every C <= V
    lhs4 = dom_ops[OP_HCL][pre]
    rhs4 = np.take_along_axis(pre, np.broadcast_to(cod_ops[OP_NCL], pre.shape), 1)
    out[:, COL["thm4_4"]] = ((lhs4 & ~rhs4) == 0).all(axis=1)
    # (5) pre(nint(C)) <= hint(pre(C)) for every C <= V
    lhs5 = np.take_along_axis(pre, np.broadcast_to(cod_ops[OP_NINT], pre.shape), 1)
    rhs5 = dom_ops[OP_HINT][pre]
    out[:, COL["thm4_5"]] = ((lhs5 & ~rhs5) == 0).all(axis=1)
    return out


NUMPY_KERNELS = {
    "interior_table": interior_table_np,
    "h_open_mask": h_open_mask_np,
    "sweep_maps": sweep_maps_np,
}

# ---------------------------------------------------------------------------
# numba implementations
# ---------------------------------------------------------------------------

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    HAVE_NUMBA = False

if HAVE_NUMBA:

    @njit(cache=True)
    def _interior_table_nb(n, member):
        size = 1 << n
        table = np.zeros(size, dtype=np.int64)
        # increasing mask order visits every proper submask first
        for s in range(size):
            if member[s]:
                table[s] = s
                continue
            acc = 0
            t = s
            while t:
                low = t & -t
                acc |= table[s & ~low]
                t ^= low
            table[s] = acc
        return table

    @njit(cache=True)
    def _h_open_mask_nb(n, open_member):
        size = 1 << n
        full = size - 1
        nint = _interior_table_nb(n, open_member)
        proper = np.empty(size, dtype=np.int64)
        k = 0
        for o in range(1, full):
            if open_member[o]:
                proper[k] = o
                k += 1
        ok = np.ones(size, dtype=np.bool_)
        for b in range(size):
            for j in range(k):
                if b & ~nint[b | proper[j]]:
                    ok[b] = False
                    break
        return ok

    @njit(cache=True)
    def _sweep_maps_nb(m, n, dom_flags, dom_ops, cod_flags, cod_ops):
        count = n**m
        nsub_d = 1 << m
        nsub_c = 1 << n
        full_c = nsub_c - 1
        out = np.zeros((count, 17), dtype=np.bool_)
        assign = np.zeros(m, dtype=np.int64)
        pre = np.zeros(nsub_c, dtype=np.int64)
        img = np.zeros(nsub_d, dtype=np.int64)
        for idx in range(count):
            r = idx
            for x in range(m - 1, -1, -1):
                assign[x] = r % n
                r //= n
            pre[0] = 0
            for c in range(1, nsub_c):
                low = c & -c
                rest = c ^ low
                p = 0
                for x in range(m):
                    if (low >> assign[x]) & 1:
                        p |= 1 << x
                pre[c] = pre[rest] | p
            img[0] = 0
            for b in range(1, nsub_d):
                low = b & -b
                x = 0
                while (low >> x) != 1:
                    x += 1
                img[b] = img[b ^ low] | (1 << assign[x])

            bij = m == n and img[nsub_d - 1] == full_c
            ncont = True
            tot = True
            contra = True
            hcont = True
            hcontra = True
            thm2 = True
            for c in range(nsub_c):
                p = pre[c]
                if cod_flags[0, c]:
                    if not dom_flags[0, p]:
                        ncont = False
                    if not dom_flags[1, p]:
                        contra = False
                    if not (dom_flags[0, p] and dom_flags[1, p]):
                        tot = False
                    if not dom_flags[2, p]:
                        hcont = False
                    if not dom_flags[3, p]:
                        hcontra = False
                if cod_flags[1, c]:
                    if not dom_flags[3, p]:
                        thm2 = False
            nopen = True
            hopen = True
            for b in range(nsub_d):
                if dom_flags[0, b]:
                    if not cod_flags[0, img[b]]:
                        nopen = False
                    if not cod_flags[2, img[b]]:
                        hopen = False
            hirr = True
            htot = True
            for c in range(nsub_c):
                if cod_flags[2, c]:
                    p = pre[c]
                    if not dom_flags[2, p]:
                        hirr = False
                    if not (dom_flags[0, p] and dom_flags[1, p]):
                        htot = False
            thm3 = True
            for b in range(nsub_d):
                if img[dom_ops[3, b]] & ~cod_ops[1, img[b]]:
                    thm3 = False
                    break
            thm4 = True
            thm5 = True
            for c in range(nsub_c):
                if dom_ops[3, pre[c]] & ~pre[cod_ops[1, c]]:
                    thm4 = False
                if pre[cod_ops[0, c]] & ~dom_ops[2, pre[c]]:
                    thm5 = False

            out[idx, 0] = bij
            out[idx, 1] = ncont
            out[idx, 2] = nopen
            out[idx, 3] = bij and ncont and nopen
            out[idx, 4] = tot
            out[idx, 5] = contra
            out[idx, 6] = hcont
            out[idx, 7] = hopen
            out[idx, 8] = hirr
            out[idx, 9] = bij and hcont and hopen
            out[idx, 10] = htot
            out[idx, 11] = hcontra
            out[idx, 12] = hcont
            out[idx, 13] = thm2
            out[idx, 14] = thm3
            out[idx, 15] = thm4
            out[idx, 16] = thm5
        return out

    def interior_table_nb(n, member):
        return _interior_table_nb(n, np.ascontiguousarray(member, dtype=np.bool_))

    def h_open_mask_nb(n, open_member):
        return _h_open_mask_nb(n, np.ascontiguousarray(open_member, dtype=np.bool_))

    def sweep_maps_nb(m, n, dom_flags, dom_ops, cod_flags, cod_ops):
        return _sweep_maps_nb(
            m,
            n,
            np.ascontiguousarray(dom_flags, dtype=np.bool_),
            np.ascontiguousarray(dom_ops, dtype=np.int64),
            np.ascontiguousarray(cod_flags, dtype=np.bool_),
            np.ascontiguousarray(cod_ops, dtype=np.int64),
        )

    NUMBA_KERNELS = {
        "interior_table": interior_table_nb,
        "h_open_mask": h_open_mask_nb,
        "sweep_maps": sweep_maps_nb,
    }
else:  # pragma: no cover
    NUMBA_KERNELS = None


def backend_name() -> str:
    choice = os.environ.get("NANOH_KERNEL", "").strip().lower()
    if choice == "numpy" or not HAVE_NUMBA:
        return "numpy"
    return "numba"


def kernels(backend: str | None = None) -> dict:
    name = backend or backend_name()
    if name == "numba":
        if NUMBA_KERNELS is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return NUMBA_KERNELS
    if name == "numpy":
        return NUMPY_KERNELS
    raise ValueError(f"unknown kernel backend {name!r}")


def interior_table(n, member, backend=None):
    return kernels(backend)["interior_table"](n, member)


def h_open_mask(n, open_member, backend=None):
    return kernels(backend)["h_open_mask"](n, open_member)


def sweep_maps(m, n, dom_flags, dom_ops, cod_flags, cod_ops, backend=None):
    return kernels(backend)["sweep_maps"](m, n, dom_flags, dom_ops, cod_flags, cod_ops)
