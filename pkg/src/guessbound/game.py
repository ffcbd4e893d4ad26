"""Guessing-game substrate: games, responses, candidate sets and splits.

A game is a finite guess list G, a subset of secrets S, and the per-position
grey/yellow/green answering rule. Candidate sets are sorted int32 arrays of
*secret positions* (0..|S|-1); the sorted array is the canonical form used as
a cache key everywhere. Responses are base-3 integers rendered big-endian as
digit strings ("00102"), with the all-green code as the affirmative response.
"""

from __future__ import annotations

import numpy as np

from . import kernels

# Above this many cells the full response matrix is not materialized and
# response rows are computed on demand (Wordle needs ~30 MB, Nerdle ~630 MB).
DEFAULT_MATRIX_CELL_LIMIT = 2 ** 27

_SCORE_CHUNK = 2048


class InvalidWordError(ValueError):
    """Word has the wrong length or symbols outside the game alphabet."""


class MalformedTreeError(ValueError):
    """Strategy tree violates a structural invariant for its game."""


def format_response(code: int, word_length: int) -> str:
    """Render a response code as word_length base-3 digits, big-endian."""
    digits = []
    for _ in range(word_length):
        digits.append(str(code % 3))
        code //= 3
    if code:
        raise ValueError(f"response code out of range for length {word_length}")
    return "".join(reversed(digits))


def parse_response(text: str, word_length: int) -> int:
    """Parse a digit-string response ("01020") into its integer code."""
    if len(text) != word_length or any(ch not in "012" for ch in text):
        raise ValueError(
            f"response must be {word_length} digits over 0/1/2, got {text!r}"
        )
    code = 0
    for ch in text:
        code = code * 3 + int(ch)
    return code


_LETTER_DIGITS = {"B": "0", "Y": "1", "G": "2"}


def parse_response_lenient(text: str, word_length: int) -> int:
    """Accept digits ("01020") or colour letters ("BYGBG"); digits canonical."""
    text = text.strip().upper()
    if text and all(ch in _LETTER_DIGITS for ch in text):
        text = "".join(_LETTER_DIGITS[ch] for ch in text)
    return parse_response(text, word_length)


class Game:
    """A concrete guessing game plus the precomputed arrays the solvers use.

    ``guesses`` must be strictly increasing (alphabetical); tie-breaks
    throughout the package rely on index order equalling word order.
    """

    def __init__(
        self,
        name: str,
        guesses: list[str],
        secrets: list[str],
        alphabet: str | None = None,
        matrix_cell_limit: int = DEFAULT_MATRIX_CELL_LIMIT,
    ):
        if not guesses:
            raise ValueError("guess list is empty")
        self.name = name
        self.word_length = len(guesses[0])
        if alphabet is None:
            alphabet = "".join(sorted(set("".join(guesses))))
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("alphabet contains duplicate symbols")
        self.alphabet = alphabet
        self.guesses = tuple(guesses)
        if any(guesses[i] >= guesses[i + 1] for i in range(len(guesses) - 1)):
            raise ValueError("guess list must be strictly increasing")

        self._sym = np.full(128, 255, dtype=np.uint8)
        for i, ch in enumerate(alphabet):
            o = ord(ch)
            if o >= 128:
                raise ValueError("alphabet must be ASCII")
            self._sym[o] = i

        self.gcodes = self._encode_words(guesses)
        self.guess_index = {w: i for i, w in enumerate(guesses)}

        idx = []
        for w in secrets:
            i = self.guess_index.get(w)
            if i is None:
                raise ValueError(f"secret {w!r} is not in the guess list")
            idx.append(i)
        self.secret_indices = np.asarray(idx, dtype=np.int32)
        if len(secrets) == 0:
            raise ValueError("secret list is empty")
        if np.any(np.diff(self.secret_indices) <= 0):
            raise ValueError("secret list must be strictly increasing")
        self.secrets = tuple(secrets)
        self.scodes = self.gcodes[self.secret_indices]

        # guess index -> secret position, or -1 when the guess is no secret
        self.secret_pos_of_guess = np.full(len(guesses), -1, dtype=np.int32)
        self.secret_pos_of_guess[self.secret_indices] = np.arange(
            len(secrets), dtype=np.int32
        )

        self.n_responses = 3 ** self.word_length
        self.affirmative = self.n_responses - 1
        self._matrix_cell_limit = matrix_cell_limit
        self._matrix: np.ndarray | None = None
        self._cache: dict = {}

    def _encode_words(self, words) -> np.ndarray:
        raw = "".join(words).encode("ascii", errors="replace")
        arr = np.frombuffer(raw, dtype=np.uint8).reshape(len(words), -1)
        if arr.shape[1] != self.word_length:
            raise InvalidWordError("words have inconsistent lengths")
        codes = self._sym[arr]
        if np.any(codes == 255):
            bad = words[int(np.argmax((codes == 255).any(axis=1)))]
            raise InvalidWordError(f"word {bad!r} uses symbols outside the alphabet")
        return codes

    # -- basic sizes -------------------------------------------------------

    @property
    def n_guesses(self) -> int:
        return len(self.guesses)

    @property
    def n_secrets(self) -> int:
        return len(self.secrets)

    def all_candidates(self) -> np.ndarray:
        return np.arange(self.n_secrets, dtype=np.int32)

    def encode_word(self, word: str) -> np.ndarray:
        if len(word) != self.word_length:
            raise InvalidWordError(
                f"{word!r} has length {len(word)}, expected {self.word_length}"
            )
        return self._encode_words([word])[0]

    # -- response computation ---------------------------------------------

    def answer(self, guess: str, secret: str) -> int:
        """Response code for one (guess, secret) pair."""
        gc = self.encode_word(guess)[None, :]
        sc = self.encode_word(secret)[None, :]
        return int(
            kernels.compute_responses(gc, sc, len(self.alphabet), self.n_responses)[0, 0]
        )

    def answer_text(self, guess: str, secret: str) -> str:
        return format_response(self.answer(guess, secret), self.word_length)

    def response_matrix(self) -> np.ndarray | None:
        """Full |G| x |S| code matrix, or None above the cell limit."""
        if self._matrix is None:
            if self.n_guesses * self.n_secrets > self._matrix_cell_limit:
                return None
            self._matrix = kernels.compute_responses(
                self.gcodes, self.scodes, len(self.alphabet), self.n_responses
            )
        return self._matrix

    def response_rows(self, guess_indices: np.ndarray, cand: np.ndarray) -> np.ndarray:
        """Codes of the given guesses against the candidate positions."""
        guess_indices = np.atleast_1d(np.asarray(guess_indices))
        mat = self.response_matrix()
        if mat is not None:
            return mat[np.ix_(guess_indices, cand)]
        return kernels.compute_responses(
            self.gcodes[guess_indices],
            self.scodes[cand],
            len(self.alphabet),
            self.n_responses,
        )

    # -- candidate filtering and splits -------------------------------------

    def filter_candidates(self, cand: np.ndarray, guess: int | str, code: int) -> np.ndarray:
        """Candidates c with answer(guess, c) == code; may be empty."""
        gi = self._guess_id(guess)
        row = self.response_rows(np.array([gi], dtype=np.int32), cand)[0]
        return cand[row == code]

    def split(self, cand: np.ndarray, guess: int | str) -> dict[int, np.ndarray]:
        """Partition of cand by response to guess; only non-empty splits."""
        gi = self._guess_id(guess)
        if cand.size == 0:
            return {}
        row = self.response_rows(np.array([gi], dtype=np.int32), cand)[0]
        order = np.argsort(row, kind="stable")
        sorted_codes = row[order]
        starts = np.flatnonzero(
            np.concatenate(([True], sorted_codes[1:] != sorted_codes[:-1]))
        )
        out = {}
        for a, b in zip(starts, np.append(starts[1:], row.size)):
            out[int(sorted_codes[a])] = np.sort(cand[order[a:b]])
        return out

    def n_splits(self, guess: int | str, cand: np.ndarray) -> int:
        gi = self._guess_id(guess)
        if cand.size == 0:
            return 0
        row = self.response_rows(np.array([gi], dtype=np.int32), cand)[0]
        return len(np.unique(row))

    def is_useful(self, guess: int | str, cand: np.ndarray) -> bool:
        """Whether guessing is guaranteed to shrink the candidate set."""
        gi = self._guess_id(guess)
        if cand.size <= 1:
            pos = self.secret_pos_of_guess[gi]
            return pos >= 0 and bool(np.isin(pos, cand).any())
        return self.n_splits(gi, cand) != 1

    def useful_guesses(self, cand: np.ndarray) -> np.ndarray:
        """Guess indices useful w.r.t. cand, in guess-list order."""
        if cand.size <= 1:
            return self.secret_indices[cand].astype(np.int32)
        nsplits, _, _, _ = self.score_all_guesses(cand)
        return np.flatnonzero(nsplits != 1).astype(np.int32)

    def max_splits(self, cand: np.ndarray) -> int:
        """max over guesses of the non-empty split count of cand."""
        if cand.size == 0:
            return 0
        cap = int(min(cand.size, self.n_responses))
        mat = self.response_matrix()
        if mat is not None:
            return kernels.max_nsplits(mat, cand, self.n_responses, cap)
        best = 0
        for lo in range(0, self.n_guesses, _SCORE_CHUNK):
            block = self.response_rows(
                np.arange(lo, min(lo + _SCORE_CHUNK, self.n_guesses), dtype=np.int32),
                cand,
            )
            sub = kernels.max_nsplits(
                block, np.arange(cand.size, dtype=np.int32), self.n_responses, cap
            )
            if sub > best:
                best = sub
                if best >= cap:
                    break
        return best

    # -- bulk scoring (hot path for valuations and bounds) -------------------

    def score_all_guesses(self, cand: np.ndarray):
        """split_stats of every guess against cand (see kernels.split_stats)."""
        mat = self.response_matrix()
        if mat is not None:
            return kernels.split_stats(mat, cand, self.n_responses)
        parts = []
        local = np.arange(cand.size, dtype=np.int32)
        for lo in range(0, self.n_guesses, _SCORE_CHUNK):
            gidx = np.arange(lo, min(lo + _SCORE_CHUNK, self.n_guesses), dtype=np.int32)
            block = self.response_rows(gidx, cand)
            parts.append(kernels.split_stats(block, local, self.n_responses))
        return tuple(np.concatenate(cols) for cols in zip(*parts))

    def table_sum_all_guesses(self, cand: np.ndarray, table: np.ndarray) -> np.ndarray:
        """Per guess: sum of table[split size] over non-empty splits of cand."""
        mat = self.response_matrix()
        if mat is not None:
            return kernels.table_sum(mat, cand, table, self.n_responses)
        parts = []
        local = np.arange(cand.size, dtype=np.int32)
        for lo in range(0, self.n_guesses, _SCORE_CHUNK):
            gidx = np.arange(lo, min(lo + _SCORE_CHUNK, self.n_guesses), dtype=np.int32)
            block = self.response_rows(gidx, cand)
            parts.append(kernels.table_sum(block, local, table, self.n_responses))
        return np.concatenate(parts)

    def in_candidates_mask(self, cand: np.ndarray) -> np.ndarray:
        """Boolean per guess: is the guess itself a member of cand?"""
        mask = np.zeros(self.n_guesses, dtype=bool)
        mask[self.secret_indices[cand]] = True
        return mask

    # -- misc ----------------------------------------------------------------

    def _guess_id(self, guess: int | str) -> int:
        if isinstance(guess, str):
            gi = self.guess_index.get(guess)
            if gi is None:
                raise InvalidWordError(f"{guess!r} is not an allowed guess")
            return gi
        return int(guess)

    def candidate_words(self, cand: np.ndarray) -> list[str]:
        return [self.secrets[int(c)] for c in cand]

    def restricted(self, cand: np.ndarray) -> "Game":
        """Same guesses, secrets reduced to the given candidate positions."""
        sub = Game.__new__(Game)
        sub.__dict__.update(self.__dict__)
        sub.name = f"{self.name}[{cand.size}]"
        sub.secret_indices = self.secret_indices[cand]
        sub.secrets = tuple(self.secrets[int(c)] for c in cand)
        sub.scodes = self.gcodes[sub.secret_indices]
        sub.secret_pos_of_guess = np.full(self.n_guesses, -1, dtype=np.int32)
        sub.secret_pos_of_guess[sub.secret_indices] = np.arange(
            cand.size, dtype=np.int32
        )
        mat = self.response_matrix()
        sub._matrix = mat[:, cand].copy() if mat is not None else None
        sub._cache = {}
        return sub


def candidate_key(cand: np.ndarray) -> bytes:
    """Canonical cache key of a candidate set (sorted int32 positions)."""
    return cand.astype(np.int32, copy=False).tobytes()
