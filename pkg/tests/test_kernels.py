"""The two kernel backends must agree bit-for-bit on integer outputs."""

import numpy as np
import pytest

from guessbound.kernels import _numba, _numpy


def reference_response(guess, secret, n_symbols):
    """Straight-line restatement of the two-pass colouring rule."""
    length = len(guess)
    digits = [0] * length
    pool = {}
    for i in range(length):
        if guess[i] == secret[i]:
            digits[i] = 2
        else:
            pool[secret[i]] = pool.get(secret[i], 0) + 1
    for i in range(length):
        if digits[i] != 2 and pool.get(guess[i], 0) > 0:
            digits[i] = 1
            pool[guess[i]] -= 1
    code = 0
    for d in digits:
        code = code * 3 + d
    return code


@pytest.fixture()
def random_words(rng):
    n_symbols, length = 5, 4
    gcodes = rng.integers(0, n_symbols, size=(60, length), dtype=np.uint8)
    scodes = rng.integers(0, n_symbols, size=(45, length), dtype=np.uint8)
    return gcodes, scodes, n_symbols


def _fill(impl, gcodes, scodes, nsym):
    out = np.zeros((len(gcodes), len(scodes)), dtype=np.uint16)
    impl.fill_responses(gcodes, scodes, nsym, out)
    return out


def test_fill_responses_matches_reference(random_words):
    gcodes, scodes, nsym = random_words
    got = _fill(_numba, gcodes, scodes, nsym)
    for i in range(0, len(gcodes), 7):
        for j in range(0, len(scodes), 5):
            assert got[i, j] == reference_response(
                list(gcodes[i]), list(scodes[j]), nsym
            )


def test_backends_agree_on_responses(random_words):
    gcodes, scodes, nsym = random_words
    assert np.array_equal(
        _fill(_numba, gcodes, scodes, nsym), _fill(_numpy, gcodes, scodes, nsym)
    )


def test_backends_agree_on_split_stats(rng):
    n_resp = 81
    rmat = rng.integers(0, n_resp, size=(200, 120), dtype=np.uint16)
    for size in (1, 2, 7, 120):
        cand = np.sort(rng.choice(120, size=size, replace=False)).astype(np.int32)
        a = _numba.split_stats(rmat, cand, n_resp)
        b = _numpy.split_stats(rmat, cand, n_resp)
        for x, y in zip(a[:3], b[:3]):
            assert np.array_equal(x, y)
        assert np.allclose(a[3], b[3])


def test_backends_agree_on_table_sum_and_max_nsplits(rng):
    n_resp = 64
    rmat = rng.integers(0, n_resp, size=(150, 90), dtype=np.uint8)
    table = np.arange(91, dtype=np.int64) ** 2
    for size in (1, 3, 33, 90):
        cand = np.sort(rng.choice(90, size=size, replace=False)).astype(np.int32)
        assert np.array_equal(
            _numba.table_sum(rmat, cand, table, n_resp),
            _numpy.table_sum(rmat, cand, table, n_resp),
        )
        assert _numba.max_nsplits(rmat, cand, n_resp, size + 1) == _numpy.max_nsplits(
            rmat, cand, n_resp, size + 1
        )


def test_split_stats_against_bincount(rng):
    n_resp = 27
    rmat = rng.integers(0, n_resp, size=(40, 50), dtype=np.uint8)
    cand = np.sort(rng.choice(50, size=20, replace=False)).astype(np.int32)
    nsplits, maxsize, sumsq, _ = _numba.split_stats(rmat, cand, n_resp)
    for g in range(40):
        counts = np.bincount(rmat[g, cand], minlength=n_resp)
        counts = counts[counts > 0]
        assert nsplits[g] == counts.size
        assert maxsize[g] == counts.max()
        assert sumsq[g] == (counts.astype(np.int64) ** 2).sum()
