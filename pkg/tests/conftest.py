import itertools

import numpy as np
import pytest

from guessbound import corpus
from guessbound.game import Game


@pytest.fixture(scope="session")
def wordle():
    return corpus.load_game("wordle-original", strict=True)


@pytest.fixture(scope="session")
def mini():
    return corpus.load_game("mininerdle", strict=True)


@pytest.fixture(scope="session")
def toy4():
    """16 two-letter words over ABCD; 10 of them are secrets."""
    words = ["".join(p) for p in itertools.product("ABCD", repeat=2)]
    secrets = [words[i] for i in (0, 1, 2, 4, 5, 7, 9, 11, 13, 14)]
    return Game("toy4", words, secrets)


@pytest.fixture(scope="session")
def toy3():
    """27 three-letter words over ABC; 12 secrets."""
    words = ["".join(p) for p in itertools.product("ABC", repeat=3)]
    secrets = [words[i] for i in (0, 2, 3, 5, 8, 11, 13, 16, 19, 21, 24, 26)]
    return Game("toy3", words, secrets)


def random_subset(rng, game, max_size, min_size=1):
    size = int(rng.integers(min_size, max_size + 1))
    return np.sort(rng.choice(game.n_secrets, size=size, replace=False)).astype(np.int32)


@pytest.fixture()
def rng():
    return np.random.default_rng(20230417)
