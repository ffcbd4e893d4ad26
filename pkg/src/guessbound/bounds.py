"""Minimum depth-sums of bounded-fanout trees.

``bound(n, b)`` is the smallest possible sum of node depths (root depth 1)
over all trees with n nodes in which every node has at most b children. It is
the basic quantity the lower-bound tower in :mod:`.prover` is built from.
"""

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def bound(n: int, b: int) -> int:
    """Closed form, evaluated in exact integer arithmetic.

    The depth k of the last fully-filled level is found by comparing the
    filled-node count (b^k - 1)/(b - 1) against n directly; no floating logs.
    """
    if b < 1:
        raise ValueError("branching factor must be >= 1")
    if n < 0:
        raise ValueError("node count must be >= 0")
    if n == 0:
        return 0
    if b == 1:
        return n * (n + 1) // 2
    k = 0
    filled = 0
    level_cap = 1  # b**k nodes fit at depth k+1
    while filled + level_cap <= n:
        filled += level_cap
        level_cap *= b
        k += 1
    total = 0
    p = 1
    for i in range(1, k + 1):
        total += i * p
        p *= b
    return total + (k + 1) * (n - filled)


def bound_table(n_max: int, b: int) -> np.ndarray:
    """bound(n, b) for n = 0..n_max as an int64 array (kernel-friendly)."""
    if b == 1:
        n = np.arange(n_max + 1, dtype=np.int64)
        return n * (n + 1) // 2
    out = np.empty(n_max + 1, dtype=np.int64)
    total = 0
    filled = 0
    level_cap = 1
    depth = 0
    out[0] = 0
    for n in range(1, n_max + 1):
        if filled + level_cap < n:
            filled += level_cap
            level_cap *= b
            depth += 1
        total += depth + 1
        out[n] = total
    return out


def game_depth_table(game) -> np.ndarray:
    """bound(n, MaxSplits(S)) for n = 0..|S|, cached on the game."""
    tab = game._cache.get("depth_table")
    if tab is None:
        m = game.max_splits(game.all_candidates())
        tab = bound_table(game.n_secrets, max(m, 1))
        game._cache["depth_table"] = tab
        game._cache["max_splits_all"] = m
    return tab


def game_max_splits(game) -> int:
    """MaxSplits of the full secret set, cached on the game."""
    if "max_splits_all" not in game._cache:
        game_depth_table(game)
    return game._cache["max_splits_all"]
