"""Strategy-tree serialization, validation and replay.

Trees travel as JSON: branches are keyed by response digit strings so a
serialized strategy diffs cleanly. Parsing validates every structural
invariant against the named game before handing the tree to callers.
"""

from __future__ import annotations

import json
from hashlib import sha256
from pathlib import Path

import numpy as np

from .game import Game, MalformedTreeError, format_response, parse_response
from .search import StrategyTree, validate_tree

FORMAT_VERSION = 1


def _node_doc(game: Game, node: StrategyTree) -> dict:
    doc = {"guess": game.guesses[node.guess], "branches": {}}
    for code, child in sorted(node.branches.items()):
        doc["branches"][format_response(code, game.word_length)] = _node_doc(game, child)
    return doc


def serialize_tree(game: Game, tree: StrategyTree) -> dict:
    doc = _node_doc(game, tree)
    doc["format"] = FORMAT_VERSION
    doc["game"] = game.name
    return doc


def tree_digest(doc: dict) -> str:
    return sha256(json.dumps(doc, sort_keys=True).encode()).hexdigest()


def _parse_node(game: Game, doc: dict, where: str) -> StrategyTree:
    word = doc.get("guess")
    if word not in game.guess_index:
        raise MalformedTreeError(f"{where}: unknown word {word!r}")
    node = StrategyTree(game.guess_index[word])
    for label, sub in doc.get("branches", {}).items():
        try:
            code = parse_response(label, game.word_length)
        except ValueError as exc:
            raise MalformedTreeError(f"{where}: {exc}") from exc
        if code == game.affirmative:
            raise MalformedTreeError(
                f"{where}: affirmative response {label} must not be a branch"
            )
        node.branches[code] = _parse_node(game, sub, f"{where}/{label}")
    return node


def parse_tree(doc: dict, game: Game, cand: np.ndarray | None = None) -> StrategyTree:
    """Parse and fully validate a tree document against the game."""
    if doc.get("format") != FORMAT_VERSION:
        raise MalformedTreeError(f"unsupported tree format {doc.get('format')!r}")
    if doc.get("game") != game.name:
        raise MalformedTreeError(
            f"tree belongs to game {doc.get('game')!r}, not {game.name!r}"
        )
    tree = _parse_node(game, doc, "root")
    validate_tree(game, tree, cand)
    return tree


def save_tree(path, game: Game, tree: StrategyTree) -> dict:
    doc = serialize_tree(game, tree)
    Path(path).write_text(json.dumps(doc, indent=1) + "\n")
    return doc


def load_tree(path, game: Game) -> StrategyTree:
    return parse_tree(json.loads(Path(path).read_text()), game)


def replay(game: Game, tree: StrategyTree, secret: str) -> list[tuple[str, str]]:
    """The (guess, response) transcript the tree produces against a secret."""
    gi = game.guess_index.get(secret)
    if gi is None or game.secret_pos_of_guess[gi] < 0:
        raise ValueError(f"{secret!r} is not a secret of {game.name}")
    node = tree
    transcript = []
    while True:
        word = game.guesses[node.guess]
        code = game.answer(word, secret)
        transcript.append((word, format_response(code, game.word_length)))
        if code == game.affirmative:
            return transcript
        child = node.branches.get(code)
        if child is None:
            raise MalformedTreeError(
                f"secret {secret!r} fell off the tree after {word}"
            )
        node = child
