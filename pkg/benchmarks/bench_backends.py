#!/usr/bin/env python3
"""Time the numba kernels against the pure-numpy fallback.

Run:
    python benchmarks/bench_backends.py [--game wordle-original] [--repeats 3]

The kernels compared are the two hot paths: building the full response
matrix, and scoring every guess against a candidate set (split statistics
plus the packed-tree floor sums used for pruning). Backend selection for the
package itself is controlled by GUESSBOUND_BACKEND; this script imports both
implementations directly so one process can time both.
"""

import argparse
import time

import numpy as np

from guessbound import corpus
from guessbound.bounds import game_depth_table
from guessbound.kernels import _numba, _numpy, response_dtype


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--game", default="wordle-original")
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    game = corpus.load_game(args.game)
    nsym = len(game.alphabet)
    nresp = game.n_responses
    full = game.all_candidates()
    rng = np.random.default_rng(0)
    small = np.sort(rng.choice(game.n_secrets, size=min(40, game.n_secrets), replace=False)).astype(np.int32)
    dtable = game_depth_table(game)
    mat = game.response_matrix()
    if mat is None:
        raise SystemExit("game too large for a full matrix; pick a smaller one")

    out = np.empty((game.n_guesses, game.n_secrets), dtype=response_dtype(nresp))

    cases = [
        (
            f"response matrix {game.n_guesses}x{game.n_secrets}",
            lambda impl: impl.fill_responses(game.gcodes, game.scodes, nsym, out),
        ),
        (
            f"split stats, all guesses vs |C|={game.n_secrets}",
            lambda impl: impl.split_stats(mat, full, nresp),
        ),
        (
            f"split stats, all guesses vs |C|={small.size}",
            lambda impl: impl.split_stats(mat, small, nresp),
        ),
        (
            f"floor sums, all guesses vs |C|={game.n_secrets}",
            lambda impl: impl.table_sum(mat, full, dtable, nresp),
        ),
        (
            f"max split count vs |C|={small.size}",
            lambda impl: impl.max_nsplits(mat, small, nresp, small.size),
        ),
    ]

    # trigger JIT compilation outside the timed region
    for _, fn in cases:
        fn(_numba)

    print(f"game={game.name}  guesses={game.n_guesses}  secrets={game.n_secrets}")
    print(f"{'kernel':<46} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for label, fn in cases:
        tb = timeit(lambda: fn(_numba), args.repeats)
        tp = timeit(lambda: fn(_numpy), args.repeats)
        print(f"{label:<46} {tb * 1e3:>8.1f}ms {tp * 1e3:>8.1f}ms {tp / tb:>7.1f}x")


if __name__ == "__main__":
    main()
