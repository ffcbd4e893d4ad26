"""Word-list ingestion, variant-game generators and integrity checks.

The reference Wordle lists (the pre-2022-02-15 editions: 12972 guesses, 2315
secrets) ship as data files with pinned SHA-256 digests; the digit games
(Primel, Nerdle, Mininerdle) are regenerated from rules and validated against
their expected counts. A manifest maps game names to descriptors so every
entry point loads identical corpora.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from hashlib import sha256
from pathlib import Path

import numpy as np

from .game import Game

DATA_DIR = Path(__file__).parent / "data"


class CorpusError(ValueError):
    """Word list missing, malformed, or failing an integrity check."""


def load_word_list(path, word_length: int) -> list[str]:
    """Read one word per line: uppercase, validate length, dedupe, sort."""
    words = []
    seen = set()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            word = line.strip().upper()
            if not word:
                continue
            if len(word) != word_length:
                raise CorpusError(
                    f"{path}:{lineno}: {word!r} has length {len(word)}, "
                    f"expected {word_length}"
                )
            if word not in seen:
                seen.add(word)
                words.append(word)
    words.sort()
    return words


def save_word_list(path, words) -> None:
    Path(path).write_text("".join(w + "\n" for w in words), encoding="utf-8")


def word_list_digest(words) -> str:
    """SHA-256 of the canonical form: sorted words joined by newlines."""
    blob = "".join(w + "\n" for w in words).encode("utf-8")
    return sha256(blob).hexdigest()


# -- generators ---------------------------------------------------------------


@lru_cache(maxsize=None)
def generate_primel() -> tuple[str, ...]:
    """All 5-digit primes, ascending, as strings."""
    limit = 100000
    sieve = np.ones(limit, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(limit ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    primes = np.flatnonzero(sieve)
    return tuple(str(p) for p in primes[primes >= 10000])


def _numbers_of_len(digits: int, zero_ok: bool) -> range:
    if digits == 1:
        return range(0 if zero_ok else 1, 10)
    return range(10 ** (digits - 1), 10 ** digits)


def _expressions(chars: int, zero_ok: bool):
    """Number (op number)* token strings of exactly `chars` characters."""
    for nd in range(1, chars + 1):
        for num in _numbers_of_len(nd, zero_ok):
            if nd == chars:
                yield str(num), (num,), ()
            rest = chars - nd - 1
            if rest >= 1:
                text = str(num)
                for op in "+-*/":
                    for rtext, rnums, rops in _expressions(rest, zero_ok):
                        yield text + op + rtext, (num,) + rnums, (op,) + rops


def _lhs_values(chars: int, zero_ok: bool):
    """All operator-containing expressions of exactly `chars` characters.

    Yields (text, exact value) under standard precedence (*, / before +, -,
    each left to right). Division stays exact via Fraction; dividing by zero
    prunes the expression.
    """
    for text, nums, ops in _expressions(chars, zero_ok):
        if not ops:
            continue  # a bare number is not an equation left-hand side
        vals = [nums[0]]
        pend = []
        ok = True
        for op, num in zip(ops, nums[1:]):
            if op == "*":
                vals[-1] = vals[-1] * num
            elif op == "/":
                if num == 0:
                    ok = False
                    break
                cur = vals[-1]
                if isinstance(cur, int) and cur % num == 0:
                    vals[-1] = cur // num
                else:
                    vals[-1] = Fraction(cur) / num
            else:
                pend.append(op)
                vals.append(num)
        if not ok:
            continue
        acc = vals[0]
        for op, v in zip(pend, vals[1:]):
            acc = acc + v if op == "+" else acc - v
        yield text, acc


@lru_cache(maxsize=None)
def generate_nerdle(length: int) -> tuple[str, ...]:
    """All true equations of exactly `length` characters, ascending.

    Grammar (reconstructed from the published game rules, validated by the
    known corpus sizes): digits and + - * / = only; a single '='; the right
    side is a plain integer, possibly 0; left-side numbers are positive with
    no leading zeros; standard precedence with exact rational division.
    """
    if length < 5:
        raise ValueError("equations need at least 5 characters")
    out = []
    for rhs_len in range(1, length - 3):
        lhs_len = length - 1 - rhs_len
        lo = 0 if rhs_len == 1 else 10 ** (rhs_len - 1)
        hi = 10 ** rhs_len
        for text, value in _lhs_values(lhs_len, zero_ok=False):
            if value.denominator == 1 and lo <= int(value) < hi:
                out.append(f"{text}={int(value)}")
    out.sort()
    return tuple(out)


_GENERATORS = {
    "primel": lambda: generate_primel(),
    "nerdle6": lambda: generate_nerdle(6),
    "nerdle8": lambda: generate_nerdle(8),
}


# -- descriptors and the manifest ---------------------------------------------


@dataclass
class CorpusDescriptor:
    name: str
    word_length: int
    alphabet: str
    guesses_source: dict  # {"file": name} or {"generator": id}
    secrets_source: dict
    expected_guesses: int | None = None
    expected_secrets: int | None = None
    guesses_digest: str | None = None
    secrets_digest: str | None = None

    @classmethod
    def from_json(cls, name: str, obj: dict) -> "CorpusDescriptor":
        return cls(
            name=name,
            word_length=obj["wordLength"],
            alphabet=obj["alphabet"],
            guesses_source=obj["guesses"],
            secrets_source=obj["secrets"],
            expected_guesses=obj["guesses"].get("count"),
            expected_secrets=obj["secrets"].get("count"),
            guesses_digest=obj["guesses"].get("sha256"),
            secrets_digest=obj["secrets"].get("sha256"),
        )


@dataclass
class CorpusReport:
    name: str
    checks: list = field(default_factory=list)  # (label, ok, detail)

    def add(self, label: str, ok: bool, detail: str):
        self.checks.append((label, ok, detail))

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)


def default_manifest_path() -> Path:
    return DATA_DIR / "manifest.json"


@lru_cache(maxsize=None)
def load_manifest(path=None) -> dict[str, CorpusDescriptor]:
    path = Path(path) if path else default_manifest_path()
    doc = json.loads(path.read_text())
    return {
        name: CorpusDescriptor.from_json(name, obj)
        for name, obj in doc["games"].items()
    }


def _resolve_words(desc: CorpusDescriptor, source: dict, base: Path) -> list[str]:
    if "generator" in source:
        gen = _GENERATORS.get(source["generator"])
        if gen is None:
            raise CorpusError(f"unknown generator {source['generator']!r}")
        return list(gen())
    path = base / source["file"]
    if not path.exists():
        raise CorpusError(
            f"corpus file {path} for game {desc.name!r} is not available"
        )
    return load_word_list(path, desc.word_length)


def load_corpus(
    name: str, manifest_path=None, strict: bool = False
) -> tuple[CorpusDescriptor, list[str], list[str], CorpusReport]:
    manifest = load_manifest(manifest_path)
    if name not in manifest:
        raise CorpusError(f"unknown game {name!r}; known: {sorted(manifest)}")
    desc = manifest[name]
    base = Path(manifest_path).parent if manifest_path else DATA_DIR
    guesses = _resolve_words(desc, desc.guesses_source, base)
    if desc.secrets_source == desc.guesses_source:
        secrets = list(guesses)
    else:
        secrets = _resolve_words(desc, desc.secrets_source, base)
    report = verify_corpus(desc, guesses, secrets)
    if not report.ok:
        bad = "; ".join(f"{l}: {d}" for l, ok, d in report.checks if not ok)
        if strict:
            raise CorpusError(f"corpus {name!r} failed strict verification: {bad}")
        warnings.warn(f"corpus {name!r} failed verification: {bad}")
    return desc, guesses, secrets, report


def verify_corpus(desc: CorpusDescriptor, guesses, secrets) -> CorpusReport:
    report = CorpusReport(desc.name)
    for label, words, expected, digest in (
        ("guesses", guesses, desc.expected_guesses, desc.guesses_digest),
        ("secrets", secrets, desc.expected_secrets, desc.secrets_digest),
    ):
        if expected is not None:
            report.add(
                f"{label}-count",
                len(words) == expected,
                f"{len(words)} (expected {expected})",
            )
        if digest is not None:
            actual = word_list_digest(words)
            report.add(
                f"{label}-digest",
                actual == digest,
                f"{actual[:12]}… (expected {digest[:12]}…)",
            )
    return report


def load_game(
    name: str,
    manifest_path=None,
    strict: bool = False,
    matrix_cell_limit: int | None = None,
) -> Game:
    desc, guesses, secrets, _ = load_corpus(name, manifest_path, strict)
    kwargs = {}
    if matrix_cell_limit is not None:
        kwargs["matrix_cell_limit"] = matrix_cell_limit
    return Game(name, guesses, secrets, alphabet=desc.alphabet, **kwargs)
