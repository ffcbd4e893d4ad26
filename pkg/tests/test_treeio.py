import json

import pytest

from guessbound import search, treeio, valuations
from guessbound.game import MalformedTreeError


@pytest.fixture(scope="module")
def mini_tree(mini):
    _, tree = search.ap_min_total(
        mini, mini.all_candidates(), search.SearchConfig(breadth=20)
    )
    return tree


def test_round_trip_identity(mini, mini_tree, tmp_path):
    path = tmp_path / "tree.json"
    doc = treeio.save_tree(path, mini, mini_tree)
    loaded = treeio.load_tree(path, mini)
    assert treeio.serialize_tree(mini, loaded) == doc
    assert search.total_turns(mini, loaded) == search.total_turns(mini, mini_tree)
    assert treeio.tree_digest(doc) == treeio.tree_digest(treeio.serialize_tree(mini, loaded))


def test_single_node_document():
    from guessbound.game import Game

    game = Game("one", ["AA", "AB"], ["AB"])
    _, tree = search.ap_min_total(game, game.all_candidates())
    doc = treeio.serialize_tree(game, tree)
    assert doc == {"format": 1, "game": "one", "guess": "AB", "branches": {}}
    assert treeio.parse_tree(doc, game).guess == game.guess_index["AB"]


def test_parse_rejects_unknown_word(mini, mini_tree):
    doc = treeio.serialize_tree(mini, mini_tree)
    doc["guess"] = "0+0=99"
    with pytest.raises(MalformedTreeError, match="unknown word"):
        treeio.parse_tree(doc, mini)


def test_parse_rejects_bad_label(mini, mini_tree):
    doc = treeio.serialize_tree(mini, mini_tree)
    label, sub = next(iter(doc["branches"].items()))
    doc["branches"]["9" * mini.word_length] = sub
    with pytest.raises(MalformedTreeError, match="digits"):
        treeio.parse_tree(doc, mini)


def test_parse_rejects_affirmative_branch(mini, mini_tree):
    doc = treeio.serialize_tree(mini, mini_tree)
    doc["branches"]["2" * mini.word_length] = {"guess": doc["guess"], "branches": {}}
    with pytest.raises(MalformedTreeError, match="affirmative"):
        treeio.parse_tree(doc, mini)


def test_parse_rejects_incomplete_strategy(mini, mini_tree):
    doc = treeio.serialize_tree(mini, mini_tree)
    victim = sorted(doc["branches"])[0]
    del doc["branches"][victim]
    with pytest.raises(MalformedTreeError, match="missing branch"):
        treeio.parse_tree(doc, mini)


def test_parse_rejects_wrong_game(mini, mini_tree, toy4):
    doc = treeio.serialize_tree(mini, mini_tree)
    with pytest.raises(MalformedTreeError, match="belongs to"):
        treeio.parse_tree(doc, toy4)


def test_replay_transcripts(mini, mini_tree):
    total = 0
    for secret in mini.secrets:
        transcript = treeio.replay(mini, mini_tree, secret)
        total += len(transcript)
        assert transcript[-1][1] == "2" * mini.word_length
        assert len(transcript) == search.turns_needed(mini, mini_tree, secret)
    assert total == search.total_turns(mini, mini_tree)


def test_replay_root_secret(mini, mini_tree):
    root = mini.guesses[mini_tree.guess]
    assert treeio.replay(mini, mini_tree, root) == [(root, "2" * mini.word_length)]


def test_replay_rejects_non_secret(wordle):
    tree = search.build_greedy_strategy(
        wordle, valuations.DEFAULT_VALUATION
    )
    with pytest.raises(ValueError, match="not a secret"):
        treeio.replay(wordle, tree, "QAJAQ")
