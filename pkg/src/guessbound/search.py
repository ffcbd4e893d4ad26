"""Strategy construction and evaluation.

Exact minimum-total search on small candidate sets, breadth-limited
approximate search with strategy-tree extraction, and the turn-count metrics
used to score finished trees. Both searches recurse over candidate sets,
memoize on the canonical set key, and prune with the depth-sum table (the
per-split floor bound never exceeds the true subtree cost, so pruning is
lossless).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import valuations
from .bounds import game_depth_table
from .game import Game, MalformedTreeError, candidate_key


class SizeGuardError(RuntimeError):
    """Exact search refused: candidate set larger than the size guard."""


class GreedyStallError(RuntimeError):
    """Greedy chooser picked a non-useful guess; recursion would not end."""


@dataclass
class StrategyTree:
    """Guess-labelled node; branches keyed by non-affirmative response code."""

    guess: int
    branches: dict[int, "StrategyTree"] = field(default_factory=dict)

    def node_count(self) -> int:
        return 1 + sum(ch.node_count() for ch in self.branches.values())


@dataclass(frozen=True)
class SearchConfig:
    breadth: int = 10
    valuation: valuations.CombinedValuation = valuations.DEFAULT_VALUATION
    use_cache: bool = True

    def __post_init__(self):
        if self.breadth < 1:
            raise ValueError("search breadth must be >= 1")


class _Searcher:
    """Shared machinery for exact (breadth=None) and breadth-limited search."""

    def __init__(self, game: Game, breadth: int | None, valuation, use_cache=True):
        self.game = game
        self.breadth = breadth
        self.valuation = valuation
        self.use_cache = use_cache
        self.memo: dict[bytes, tuple[int, int]] = {}  # key -> (value, guess)
        self.dtable = game_depth_table(game)

    def solve(self, cand: np.ndarray) -> int:
        n = cand.size
        if n == 0:
            return 0
        key = candidate_key(cand)
        hit = self.memo.get(key)
        if hit is not None:
            return hit[0]
        game = self.game
        if n == 1:
            value, guess = 1, int(game.secret_indices[cand[0]])
        elif n == 2:
            # either candidate ends one secret immediately and isolates the
            # other (answers between distinct words are never affirmative)
            value, guess = 3, int(game.secret_indices[cand[0]])
        else:
            value, guess = self._solve_branching(cand)
        if self.use_cache:
            self.memo[key] = (value, guess)
        return value

    def _pool(self, cand: np.ndarray) -> np.ndarray:
        game = self.game
        if self.breadth is None:
            return game.useful_guesses(cand)
        order = valuations.rank_guesses(game, self.valuation, cand)
        nsplits, _, _, _ = game.score_all_guesses(cand)
        useful = nsplits[order] != 1
        # the breadth budget is spent on the ranking's head; useless entries
        # there are dropped, not refilled (unless nothing useful made the cut)
        pool = order[: self.breadth][useful[: self.breadth]]
        if pool.size == 0:
            pool = order[useful][: self.breadth]
        return pool

    def _solve_branching(self, cand: np.ndarray) -> tuple[int, int]:
        game = self.game
        pool = self._pool(cand)
        # optimistic cost of each pool guess: every split laid out as a
        # perfectly-packed tree; true cost can only be higher
        tsum = game.table_sum_all_guesses(cand, self.dtable)
        in_c = game.in_candidates_mask(cand)
        floor = cand.size + tsum[pool] - in_c[pool]
        # scan in (floor, guess index) order so the early break below keeps
        # the lowest-index guess among equal-value ties
        order = np.lexsort((pool, floor))
        best_val = np.iinfo(np.int64).max
        best_guess = -1
        rstar = game.affirmative
        for oi in order:
            g = int(pool[oi])
            f = int(floor[oi])
            if f > best_val or (f == best_val and g >= best_guess):
                break
            splits = game.split(cand, g)
            splits.pop(rstar, None)
            running = f
            aborted = False
            # biggest splits first: their floor terms are loosest
            for sub in sorted(splits.values(), key=len, reverse=True):
                running += self.solve(sub) - int(self.dtable[sub.size])
                if running > best_val:
                    aborted = True
                    break
            if aborted:
                continue
            if running < best_val or (running == best_val and g < best_guess):
                best_val = int(running)
                best_guess = g
        return best_val, best_guess

    def tree(self, cand: np.ndarray) -> StrategyTree:
        """Rebuild the chosen strategy for cand from the memo."""
        self.solve(cand)
        _, guess = self.memo[candidate_key(cand)]
        node = StrategyTree(guess)
        splits = self.game.split(cand, guess)
        splits.pop(self.game.affirmative, None)
        for code, sub in sorted(splits.items()):
            node.branches[code] = self.tree(sub)
        return node


class ExactSolver:
    """Exact minimum-total over useful guesses; exponential, so size-guarded."""

    def __init__(self, game: Game, size_guard: int = 25):
        self.size_guard = size_guard
        self._inner = _Searcher(game, breadth=None, valuation=None)

    def min_total(self, cand: np.ndarray) -> int:
        if cand.size > self.size_guard:
            raise SizeGuardError(
                f"exact search limited to {self.size_guard} candidates "
                f"(size_guard), got {cand.size}"
            )
        return self._inner.solve(cand)

    def strategy(self, cand: np.ndarray) -> StrategyTree:
        self.min_total(cand)
        return self._inner.tree(cand)


class BreadthSolver:
    """Breadth-limited approximate search (upper bound on the exact total)."""

    def __init__(self, game: Game, config: SearchConfig = SearchConfig()):
        self.game = game
        self.config = config
        self._inner = _Searcher(
            game, config.breadth, config.valuation, config.use_cache
        )

    def solve(self, cand: np.ndarray) -> tuple[int, StrategyTree]:
        if cand.size == 0:
            raise ValueError("candidate set is empty")
        value = self._inner.solve(cand)
        return value, self._inner.tree(cand)


def min_total(game: Game, cand: np.ndarray, size_guard: int = 25) -> int:
    return ExactSolver(game, size_guard).min_total(cand)


def ap_min_total(game: Game, cand: np.ndarray, config: SearchConfig = SearchConfig()):
    return BreadthSolver(game, config).solve(cand)


# -- scoring finished trees --------------------------------------------------


def turns_needed(game: Game, tree: StrategyTree, secret: str) -> int:
    """Depth (root = 1) at which the tree guesses the given secret."""
    if secret not in game.guess_index:
        raise MalformedTreeError(f"{secret!r} is not a word of this game")
    node = tree
    for depth in range(1, game.n_secrets + 2):
        code = game.answer(game.guesses[node.guess], secret)
        if code == game.affirmative:
            return depth
        child = node.branches.get(code)
        if child is None:
            raise MalformedTreeError(
                f"secret {secret!r} unreachable: no branch for response "
                f"{code} under {game.guesses[node.guess]}"
            )
        node = child
    raise MalformedTreeError("strategy tree deeper than the secret count")


def _walk(game: Game, tree: StrategyTree, cand: np.ndarray, depth: int, hist: dict):
    if cand.size == 0:
        raise MalformedTreeError("tree branch reached an empty candidate set")
    total = 0
    splits = game.split(cand, tree.guess)
    hit = splits.pop(game.affirmative, None)
    if hit is not None:
        total += depth
        hist[depth] = hist.get(depth, 0) + 1
    n_parts = len(splits) + (1 if hit is not None else 0)
    if (cand.size == 1 and hit is None) or (cand.size > 1 and n_parts <= 1):
        raise MalformedTreeError(
            f"non-useful guess {game.guesses[tree.guess]!r} over "
            f"{cand.size} candidates"
        )
    for code, sub in splits.items():
        child = tree.branches.get(code)
        if child is None:
            raise MalformedTreeError(
                f"missing branch {code} under {game.guesses[tree.guess]!r}"
            )
        total += _walk(game, child, sub, depth + 1, hist)
    for code in tree.branches:
        if code == game.affirmative:
            raise MalformedTreeError("tree contains an affirmative-response branch")
        if code not in splits:
            raise MalformedTreeError(
                f"branch {code} under {game.guesses[tree.guess]!r} matches "
                "no candidate"
            )
    return total


def depth_histogram(game: Game, tree: StrategyTree, cand: np.ndarray | None = None):
    """Secrets resolved per depth; also validates the tree along the way."""
    if cand is None:
        cand = game.all_candidates()
    hist: dict[int, int] = {}
    _walk(game, tree, cand, 1, hist)
    return dict(sorted(hist.items()))


def total_turns(game: Game, tree: StrategyTree, cand: np.ndarray | None = None) -> int:
    """Sum of turns needed over every candidate secret."""
    if cand is None:
        cand = game.all_candidates()
    hist: dict[int, int] = {}
    return _walk(game, tree, cand, 1, hist)


def validate_tree(game: Game, tree: StrategyTree, cand: np.ndarray | None = None):
    """Raise MalformedTreeError unless the tree resolves every candidate."""
    if cand is None:
        cand = game.all_candidates()
    hist: dict[int, int] = {}
    _walk(game, tree, cand, 1, hist)
    if sum(hist.values()) != cand.size:
        raise MalformedTreeError("tree does not resolve every candidate")


def build_greedy_strategy(
    game: Game, combined: valuations.CombinedValuation, cand: np.ndarray | None = None
) -> StrategyTree:
    """Recursively guess the combined-valuation argmin until all sets resolve."""
    if cand is None:
        cand = game.all_candidates()
    if cand.size == 0:
        raise ValueError("candidate set is empty")
    guess = valuations.choose_guess(game, combined, cand)
    if not game.is_useful(guess, cand):
        raise GreedyStallError(
            f"{combined} chose non-useful {game.guesses[guess]!r} for a "
            f"{cand.size}-candidate set; greedy recursion would not terminate"
        )
    node = StrategyTree(guess)
    splits = game.split(cand, guess)
    splits.pop(game.affirmative, None)
    for code, sub in sorted(splits.items()):
        node.branches[code] = build_greedy_strategy(game, combined, sub)
    return node
