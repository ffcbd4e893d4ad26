"""Pure-numpy kernel implementations (fallback backend).

Each function matches its _numba twin exactly on integer outputs; the float
nlogn column can differ by normal summation-order noise.
"""

import numpy as np


def _response_row(gc, scodes, n_symbols):
    """Codes of one guess against every row of scodes, via the two-pass rule."""
    n, length = scodes.shape
    greens = scodes == gc[None, :]
    digits = np.where(greens, np.uint8(2), np.uint8(0))
    letters = np.unique(gc)
    # per letter: how many copies the secret still owes after green matches
    avail = {}
    used = {}
    for a in letters:
        owed = (scodes == a).sum(axis=1) - (greens & (gc == a)[None, :]).sum(axis=1)
        avail[a] = owed.astype(np.int32)
        used[a] = np.zeros(n, dtype=np.int32)
    for i in range(length):
        a = gc[i]
        hit = ~greens[:, i] & (used[a] < avail[a])
        digits[hit, i] = 1
        used[a] += hit
    code = np.zeros(n, dtype=np.int64)
    for i in range(length):
        code = code * 3 + digits[:, i]
    return code


def fill_responses(gcodes, scodes, n_symbols, out):
    for g in range(gcodes.shape[0]):
        out[g, :] = _response_row(gcodes[g], scodes, n_symbols)


def _run_lengths(rmat, cand):
    """Sorted-run decomposition of each guess row restricted to cand.

    Returns (nsplits per row, run lengths flattened, first-run offset per row).
    """
    sub = np.ascontiguousarray(rmat[:, cand])
    sub.sort(axis=1)
    m, k = sub.shape
    bounds = np.empty((m, k), dtype=bool)
    bounds[:, 0] = True
    bounds[:, 1:] = sub[:, 1:] != sub[:, :-1]
    nsplits = bounds.sum(axis=1).astype(np.int32)
    starts = np.flatnonzero(bounds.ravel())
    runlens = np.diff(np.append(starts, m * k))
    offsets = np.zeros(m, dtype=np.int64)
    np.cumsum(nsplits[:-1], out=offsets[1:])
    rows = starts // k
    return nsplits, runlens, offsets, rows


def split_stats(rmat, cand, n_responses):
    m = rmat.shape[0]
    if cand.size == 0:
        z32 = np.zeros(m, dtype=np.int32)
        return z32, z32.copy(), np.zeros(m, dtype=np.int64), np.zeros(m)
    nsplits, runlens, offsets, rows = _run_lengths(rmat, cand)
    maxsize = np.maximum.reduceat(runlens, offsets).astype(np.int32)
    lens_f = runlens.astype(np.float64)
    sumsq = np.bincount(rows, weights=lens_f * lens_f, minlength=m).astype(np.int64)
    nlogn = np.bincount(rows, weights=lens_f * np.log2(lens_f), minlength=m)
    return nsplits, maxsize, sumsq, nlogn


def table_sum(rmat, cand, table, n_responses):
    m = rmat.shape[0]
    if cand.size == 0:
        return np.zeros(m, dtype=np.int64)
    _, runlens, _, rows = _run_lengths(rmat, cand)
    # table values stay far below 2**53, so float accumulation is exact
    vals = table[runlens].astype(np.float64)
    return np.bincount(rows, weights=vals, minlength=m).astype(np.int64)


def max_nsplits(rmat, cand, n_responses, cap):
    nsplits, _, _, _ = _run_lengths(rmat, cand)
    return int(nsplits.max(initial=0))
