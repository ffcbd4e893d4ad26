"""JIT-compiled kernel implementations (the default backend)."""

import math

import numpy as np
from numba import njit, prange


@njit(cache=True, parallel=True)
def fill_responses(gcodes, scodes, n_symbols, out):
    m, length = gcodes.shape
    n = scodes.shape[0]
    for g in prange(m):
        cnt = np.zeros(n_symbols, dtype=np.int32)
        digits = np.empty(length, dtype=np.uint8)
        for s in range(n):
            # only the symbols touched last round need clearing
            for i in range(length):
                cnt[scodes[s, i]] = 0
                cnt[gcodes[g, i]] = 0
            for i in range(length):
                if gcodes[g, i] == scodes[s, i]:
                    digits[i] = 2
                else:
                    digits[i] = 0
                    cnt[scodes[s, i]] += 1
            code = 0
            for i in range(length):
                if digits[i] != 2:
                    a = gcodes[g, i]
                    if cnt[a] > 0:
                        digits[i] = 1
                        cnt[a] -= 1
                code = code * 3 + digits[i]
            out[g, s] = code


@njit(cache=True, parallel=True)
def split_stats(rmat, cand, n_responses):
    m = rmat.shape[0]
    k = cand.size
    nsplits = np.zeros(m, dtype=np.int32)
    maxsize = np.zeros(m, dtype=np.int32)
    sumsq = np.zeros(m, dtype=np.int64)
    nlogn = np.zeros(m, dtype=np.float64)
    width = min(k, n_responses)
    for g in prange(m):
        counts = np.zeros(n_responses, dtype=np.int32)
        seen = np.empty(width, dtype=np.int32)
        ns = 0
        for j in range(k):
            c = rmat[g, cand[j]]
            if counts[c] == 0:
                seen[ns] = c
                ns += 1
            counts[c] += 1
        mx = 0
        ss = 0
        nl = 0.0
        for t in range(ns):
            cn = counts[seen[t]]
            if cn > mx:
                mx = cn
            ss += cn * cn
            nl += cn * math.log2(cn)
        nsplits[g] = ns
        maxsize[g] = mx
        sumsq[g] = ss
        nlogn[g] = nl
    return nsplits, maxsize, sumsq, nlogn


@njit(cache=True, parallel=True)
def table_sum(rmat, cand, table, n_responses):
    m = rmat.shape[0]
    k = cand.size
    out = np.zeros(m, dtype=np.int64)
    width = min(k, n_responses)
    for g in prange(m):
        counts = np.zeros(n_responses, dtype=np.int32)
        seen = np.empty(width, dtype=np.int32)
        ns = 0
        for j in range(k):
            c = rmat[g, cand[j]]
            if counts[c] == 0:
                seen[ns] = c
                ns += 1
            counts[c] += 1
        acc = 0
        for t in range(ns):
            acc += table[counts[seen[t]]]
        out[g] = acc
    return out


@njit(cache=True)
def max_nsplits(rmat, cand, n_responses, cap):
    m = rmat.shape[0]
    k = cand.size
    counts = np.zeros(n_responses, dtype=np.int32)
    seen = np.empty(min(k, n_responses), dtype=np.int32)
    best = 0
    for g in range(m):
        ns = 0
        for j in range(k):
            c = rmat[g, cand[j]]
            if counts[c] == 0:
                seen[ns] = c
                ns += 1
            counts[c] += 1
        for t in range(ns):
            counts[seen[t]] = 0
        if ns > best:
            best = ns
            if best >= cap:
                return best
    return best
