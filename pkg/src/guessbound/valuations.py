"""Guess-scoring heuristics and their lexicographic combinations.

Five classic valuations score a guess against a candidate set (lower is
better); a combined valuation compares tuples of them lexicographically.
Internally every comparison uses exact integer keys where the definition
allows it: the expected-split-size ranking is done on sum(n_r^2) since |C| is
constant across guesses, so the only float key is the entropy term.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np


class Valuation(enum.Enum):
    IN_SET = "inset"
    MAX_SIZE_SPLIT = "maxsizesplit"
    EXP_SIZE_SPLIT = "expsizesplit"
    INFORMATION = "information"
    MOST_PARTS = "mostparts"


_ALIASES = {
    "inset": Valuation.IN_SET,
    "maxsizesplit": Valuation.MAX_SIZE_SPLIT,
    "mss": Valuation.MAX_SIZE_SPLIT,
    "expsizesplit": Valuation.EXP_SIZE_SPLIT,
    "ess": Valuation.EXP_SIZE_SPLIT,
    "information": Valuation.INFORMATION,
    "info": Valuation.INFORMATION,
    "mostparts": Valuation.MOST_PARTS,
    "mp": Valuation.MOST_PARTS,
}


@dataclass(frozen=True)
class CombinedValuation:
    ids: tuple[Valuation, ...]

    def __post_init__(self):
        if not 1 <= len(self.ids) <= 5:
            raise ValueError("combined valuation needs 1..5 components")
        if len(set(self.ids)) != len(self.ids):
            raise ValueError("combined valuation components must be distinct")

    @classmethod
    def parse(cls, text: str) -> "CombinedValuation":
        """Parse a comma-separated list, e.g. "mostparts,inset,ess"."""
        ids = []
        for part in text.split(","):
            name = part.strip().lower()
            if name not in _ALIASES:
                raise ValueError(f"unknown valuation {part.strip()!r}")
            ids.append(_ALIASES[name])
        return cls(tuple(ids))

    def __str__(self) -> str:
        return ",".join(v.value for v in self.ids)


# The best-performing combination found for Wordle; also the ordering the
# breadth-limited search uses to pick its candidate pools.
DEFAULT_VALUATION = CombinedValuation(
    (Valuation.MOST_PARTS, Valuation.IN_SET, Valuation.EXP_SIZE_SPLIT)
)


def _stats(game, cand):
    nsplits, maxsize, sumsq, nlogn = game.score_all_guesses(cand)
    return nsplits, maxsize, sumsq, nlogn


def ranking_keys(game, combined: CombinedValuation, cand: np.ndarray) -> list[np.ndarray]:
    """One ascending sort key per component, over all guesses."""
    nsplits, maxsize, sumsq, nlogn = _stats(game, cand)
    keys = []
    for vid in combined.ids:
        if vid is Valuation.IN_SET:
            keys.append(-game.in_candidates_mask(cand).astype(np.int8))
        elif vid is Valuation.MAX_SIZE_SPLIT:
            keys.append(maxsize)
        elif vid is Valuation.EXP_SIZE_SPLIT:
            keys.append(sumsq)
        elif vid is Valuation.INFORMATION:
            keys.append(nlogn)
        elif vid is Valuation.MOST_PARTS:
            keys.append(-nsplits)
    return keys


def rank_guesses(game, combined: CombinedValuation, cand: np.ndarray) -> np.ndarray:
    """All guess indices, best tuple first, alphabetical on full ties."""
    if cand.size == 0:
        raise ValueError("candidate set is empty")
    keys = ranking_keys(game, combined, cand)
    # lexsort treats the last key as primary; index order breaks full ties
    return np.lexsort(tuple(reversed(keys)))


def choose_guess(game, combined: CombinedValuation, cand: np.ndarray) -> int:
    """Argmin of the combined score over all guesses."""
    return int(rank_guesses(game, combined, cand)[0])


def best_n_guesses(game, combined: CombinedValuation, cand: np.ndarray, n: int) -> np.ndarray:
    """The n lowest-scoring guesses in ascending tuple order."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return rank_guesses(game, combined, cand)[:n]


def _split_sizes(game, guess, cand) -> np.ndarray:
    gi = game._guess_id(guess)
    row = game.response_rows(np.array([gi], dtype=np.int32), cand)[0]
    return np.unique(row, return_counts=True)[1]


def evaluate(game, vid: Valuation, guess, cand: np.ndarray) -> float:
    """Score one guess with one valuation, per the defining formula."""
    gi = game._guess_id(guess)
    if vid is Valuation.IN_SET:
        pos = game.secret_pos_of_guess[gi]
        return -1 if pos >= 0 and pos in cand else 0
    if cand.size == 0:
        if vid in (Valuation.EXP_SIZE_SPLIT, Valuation.INFORMATION):
            raise ValueError(f"{vid.value} is undefined on an empty candidate set")
        return 0
    sizes = _split_sizes(game, gi, cand)
    if vid is Valuation.MAX_SIZE_SPLIT:
        return int(sizes.max())
    if vid is Valuation.MOST_PARTS:
        return -int(sizes.size)
    n = cand.size
    if vid is Valuation.EXP_SIZE_SPLIT:
        return float((sizes.astype(np.int64) ** 2).sum() / n)
    if vid is Valuation.INFORMATION:
        p = sizes / n
        return float((p * np.log2(p)).sum())
    raise AssertionError(vid)


def evaluate_combined(game, combined: CombinedValuation, guess, cand: np.ndarray) -> tuple:
    """Tuple of per-component scores in component order."""
    return tuple(evaluate(game, vid, guess, cand) for vid in combined.ids)
