"""Hot numeric kernels with two interchangeable backends.

The numba backend JIT-compiles the inner loops (response coding, split
statistics); the numpy backend is a pure-vectorized fallback used when numba
is unavailable or when ``GUESSBOUND_BACKEND=numpy`` is set. Both expose the
same four functions and produce bit-identical integer results; see
``benchmarks/bench_backends.py`` for a speed comparison.
"""

import os
import warnings

import numpy as np

_REQUESTED = os.environ.get("GUESSBOUND_BACKEND", "numba").strip().lower()

if _REQUESTED not in ("numba", "numpy"):
    raise ValueError(
        f"GUESSBOUND_BACKEND must be 'numba' or 'numpy', got {_REQUESTED!r}"
    )

if _REQUESTED == "numba":
    try:
        from . import _numba as _impl

        BACKEND = "numba"
    except ImportError as exc:  # pragma: no cover - depends on environment
        warnings.warn(f"numba backend unavailable ({exc}); falling back to numpy")
        from . import _numpy as _impl

        BACKEND = "numpy"
else:
    from . import _numpy as _impl

    BACKEND = "numpy"


def response_dtype(n_responses: int):
    """Smallest unsigned dtype that can hold every response code."""
    return np.uint8 if n_responses <= 256 else np.uint16


def compute_responses(gcodes, scodes, n_symbols, n_responses):
    """Response codes for every (guess, secret) pair.

    gcodes/scodes are (m, L) and (n, L) uint8 symbol matrices; the result is
    an (m, n) matrix of base-3 codes (big-endian digit order, 0=grey,
    1=yellow, 2=green) using the two-pass duplicate-letter rule.
    """
    out = np.empty((gcodes.shape[0], scodes.shape[0]), dtype=response_dtype(n_responses))
    _impl.fill_responses(gcodes, scodes, n_symbols, out)
    return out


def split_stats(rmat, cand, n_responses):
    """Per-guess split statistics over the candidate columns ``cand``.

    Returns (nsplits int32, maxsize int32, sumsq int64, nlogn float64) where
    nsplits counts non-empty splits, maxsize is the largest split, sumsq is
    the sum of squared split sizes and nlogn is sum(n * log2(n)).
    """
    return _impl.split_stats(rmat, cand, n_responses)


def table_sum(rmat, cand, table, n_responses):
    """Per-guess sum of table[split_size] over non-empty splits."""
    return _impl.table_sum(rmat, cand, table, n_responses)


def max_nsplits(rmat, cand, n_responses, cap):
    """Max over guesses of the non-empty split count, stopping early at cap."""
    if cand.size == 0:
        return 0
    return int(_impl.max_nsplits(rmat, cand, n_responses, cap))
