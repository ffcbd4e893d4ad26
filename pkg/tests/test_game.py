import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from guessbound.game import (
    Game,
    InvalidWordError,
    format_response,
    parse_response,
    parse_response_lenient,
)

from conftest import random_subset


# -- responses ----------------------------------------------------------------


def test_response_rendering_roundtrip():
    assert format_response(1, 5) == "00001"
    assert format_response(3 ** 5 - 1, 5) == "22222"
    assert parse_response("00001", 5) == 1
    for code in (0, 1, 7, 80, 242):
        assert parse_response(format_response(code, 5), 5) == code


def test_response_parse_errors():
    for bad in ("0000", "000000", "0003a", "00 01"):
        with pytest.raises(ValueError):
            parse_response(bad, 5)


def test_lenient_parse_accepts_colour_letters():
    assert parse_response_lenient("BYGBG", 5) == parse_response("01202", 5)
    assert parse_response_lenient("01202", 5) == parse_response("01202", 5)


@pytest.mark.parametrize(
    "guess,secret,expected",
    [
        ("AAB", "ABA", "211"),  # duplicate letter consumed by the yellow pass
        ("ABA", "AAB", "211"),
        ("AAA", "ABA", "202"),
        ("BBA", "ABB", "121"),
    ],
)
def test_two_pass_rule_hand_traces(guess, secret, expected):
    game = Game("t", ["AAA", "AAB", "ABA", "ABB", "BBA"], ["AAB", "ABA", "ABB"])
    assert game.answer_text(guess, secret) == expected


def test_answer_paper_traces(wordle):
    # the alphabetical-strategy walkthrough pins several responses
    assert wordle.answer_text("ABACK", "SNAKE") == "00201"
    assert wordle.answer_text("DRAKE", "SNAKE") == "00222"
    assert wordle.answer_text("SALET", "SALET") == "22222"


def test_answer_biconditional_sample(wordle, rng):
    gi = rng.choice(wordle.n_guesses, size=50, replace=False)
    si = rng.choice(wordle.n_secrets, size=50, replace=False)
    for g in gi:
        for s in si:
            gw = wordle.guesses[int(g)]
            sw = wordle.secrets[int(s)]
            code = wordle.answer(gw, sw)
            assert (code == wordle.affirmative) == (gw == sw)


def test_answer_validates_words(wordle):
    with pytest.raises(InvalidWordError):
        wordle.answer("TOOLONGX", "SNAKE")
    with pytest.raises(InvalidWordError):
        wordle.answer("SAL3T", "SNAKE")


# -- filtering and splits -------------------------------------------------------


def test_filter_chain_reaches_lemur_lumen_melee(wordle):
    cand = wordle.all_candidates()
    for guess, resp in (("COILS", "00010"), ("ALPHA", "01000"), ("OMEGA", "01100")):
        cand = wordle.filter_candidates(cand, guess, parse_response(resp, 5))
    assert wordle.candidate_words(cand) == ["LEMUR", "LUMEN", "MELEE"]


def test_tares_yellow_s_filter_narrows_consistently(wordle):
    # the march-22 walkthrough names no secret; only the pair is usable
    cand = wordle.filter_candidates(
        wordle.all_candidates(), "TARES", parse_response("00001", 5)
    )
    assert 0 < cand.size < wordle.n_secrets
    for w in wordle.candidate_words(cand):
        assert "S" in w and not w.endswith("S")
        assert not set("TARE") & set(w)


def test_filter_affirmative_leaves_the_guess(wordle):
    cand = wordle.all_candidates()
    got = wordle.filter_candidates(cand, "SNAKE", wordle.affirmative)
    assert wordle.candidate_words(got) == ["SNAKE"]


def test_filter_equals_per_word_scan(toy3, rng):
    cand = random_subset(rng, toy3, 10)
    gi = int(rng.integers(toy3.n_guesses))
    gw = toy3.guesses[gi]
    for code in range(toy3.n_responses):
        got = toy3.filter_candidates(cand, gi, code)
        want = [c for c in cand if toy3.answer(gw, toy3.secrets[int(c)]) == code]
        assert list(got) == want


@pytest.fixture(scope="module")
def splits_example_game(wordle):
    # the worked split example uses COILS, which is a legal guess but not a
    # Wordle secret; rebuild it as a game whose secrets are exactly those words
    words = ["COILS", "DONUT", "FINAL", "MELEE", "OMEGA", "REALM", "TITAN", "TRIAD"]
    return Game("splits-example", list(wordle.guesses), sorted(words))


def test_split_alpha_example(splits_example_game):
    g = splits_example_game
    got = {
        format_response(code, 5): g.candidate_words(sub)
        for code, sub in g.split(g.all_candidates(), "ALPHA").items()
    }
    assert got == {
        "00000": ["DONUT"],
        "00002": ["OMEGA"],
        "01000": ["COILS", "MELEE"],
        "10000": ["TITAN", "TRIAD"],
        "11000": ["FINAL", "REALM"],
    }
    assert g.n_splits("ALPHA", g.all_candidates()) == 5


def test_split_of_self_is_single_affirmative(wordle):
    cand = wordle.filter_candidates(wordle.all_candidates(), "SNAKE", wordle.affirmative)
    splits = wordle.split(cand, "SNAKE")
    assert list(splits) == [wordle.affirmative]


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_split_partition_law(toy3, data):
    size = data.draw(st.integers(1, toy3.n_secrets))
    cand = np.sort(
        np.array(
            data.draw(
                st.lists(
                    st.integers(0, toy3.n_secrets - 1),
                    min_size=size,
                    max_size=size,
                    unique=True,
                )
            ),
            dtype=np.int32,
        )
    )
    gi = data.draw(st.integers(0, toy3.n_guesses - 1))
    splits = toy3.split(cand, gi)
    union = np.sort(np.concatenate(list(splits.values())))
    assert np.array_equal(union, cand)  # disjoint and complete
    assert sum(s.size for s in splits.values()) == cand.size
    # affirmative split holds exactly the guess itself, when it is a candidate
    pos = toy3.secret_pos_of_guess[gi]
    expect_self = 1 if (pos >= 0 and pos in cand) else 0
    aff = splits.get(toy3.affirmative, np.empty(0))
    assert aff.size == expect_self


# -- usefulness and maxsplits ---------------------------------------------------


def test_usefulness_examples(wordle):
    threes = Game(
        "threes", list(wordle.guesses), sorted(["COILS", "OMEGA", "REALM"])
    )
    cand = threes.all_candidates()
    assert threes.is_useful("ALPHA", cand)
    assert not threes.is_useful("FUZZY", cand)  # a single split teaches nothing
    assert not threes.is_useful("FUZZY", np.empty(0, dtype=np.int32))


def test_useful_guesses_of_singleton_is_the_candidate(toy4):
    cand = np.array([3], dtype=np.int32)
    got = toy4.useful_guesses(cand)
    assert list(got) == [int(toy4.secret_indices[3])]


def test_useful_guesses_match_bruteforce(toy4, rng):
    for _ in range(10):
        cand = random_subset(rng, toy4, toy4.n_secrets)
        got = list(toy4.useful_guesses(cand))
        want = [g for g in range(toy4.n_guesses) if toy4.is_useful(g, cand)]
        assert got == want


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_property_one_equivalence(toy3, data):
    """For |C| > 1: useful iff every split is strictly smaller than C."""
    idx = data.draw(
        st.lists(st.integers(0, toy3.n_secrets - 1), min_size=2, unique=True)
    )
    cand = np.sort(np.array(idx, dtype=np.int32))
    gi = data.draw(st.integers(0, toy3.n_guesses - 1))
    splits = toy3.split(cand, gi)
    all_smaller = all(s.size < cand.size for s in splits.values())
    assert toy3.is_useful(gi, cand) == all_smaller


def test_maxsplits_monotone_under_inclusion(toy3, rng):
    for _ in range(20):
        cand = random_subset(rng, toy3, toy3.n_secrets)
        keep = rng.random(cand.size) < 0.6
        sub = cand[keep] if keep.any() else cand[:1]
        assert toy3.max_splits(sub) <= toy3.max_splits(cand)


def test_maxsplits_wordle_values(wordle):
    full = wordle.all_candidates()
    assert wordle.max_splits(full) == 150
    nsplits, _, _, _ = wordle.score_all_guesses(full)
    winners = [wordle.guesses[int(i)] for i in np.flatnonzero(nsplits == 150)]
    assert winners == ["TRACE"]  # 150 splits is achieved by TRACE alone
    a_words = np.flatnonzero([w.startswith("A") for w in wordle.secrets]).astype(np.int32)
    assert wordle.max_splits(a_words) == 49
    assert wordle.max_splits(np.empty(0, dtype=np.int32)) == 0


# -- construction guards ---------------------------------------------------------


def test_game_requires_sorted_unique_guesses():
    with pytest.raises(ValueError):
        Game("bad", ["BB", "AA"], ["AA"])
    with pytest.raises(ValueError):
        Game("bad", ["AA", "AA"], ["AA"])


def test_game_requires_secret_subset():
    with pytest.raises(ValueError):
        Game("bad", ["AA", "AB"], ["ZZ"])


def test_restricted_game_matches_filtering(wordle):
    sub = np.array([3, 100, 710, 2000], dtype=np.int32)
    small = wordle.restricted(sub)
    assert small.n_secrets == 4
    assert small.secrets == tuple(wordle.secrets[int(i)] for i in sub)
    gw = "TRACE"
    big_row = wordle.response_rows(
        np.array([wordle.guess_index[gw]], dtype=np.int32), sub
    )[0]
    small_row = small.response_rows(
        np.array([small.guess_index[gw]], dtype=np.int32), small.all_candidates()
    )[0]
    assert np.array_equal(big_row, small_row)
