"""Strategy search and certified optimality for Wordle-style guessing games."""

from .bounds import bound
from .game import Game, format_response, parse_response
from .prover import (
    LowerBoundEngine,
    OptimalityCertificate,
    filter_starting_guesses,
    prove_optimal,
)
from .search import (
    SearchConfig,
    StrategyTree,
    ap_min_total,
    build_greedy_strategy,
    min_total,
    total_turns,
    turns_needed,
)
from .valuations import CombinedValuation, DEFAULT_VALUATION, Valuation

__version__ = "0.1.0"

__all__ = [
    "Game",
    "bound",
    "format_response",
    "parse_response",
    "LowerBoundEngine",
    "OptimalityCertificate",
    "filter_starting_guesses",
    "prove_optimal",
    "SearchConfig",
    "StrategyTree",
    "ap_min_total",
    "build_greedy_strategy",
    "min_total",
    "total_turns",
    "turns_needed",
    "CombinedValuation",
    "DEFAULT_VALUATION",
    "Valuation",
    "__version__",
]
