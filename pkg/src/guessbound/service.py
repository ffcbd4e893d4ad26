"""Assistant HTTP API consumed by the browser UI.

Sessions are in-memory with TTL expiry: each one is a pure fold over its
feedback transcript, so clients can rebuild any session from scratch. The
suggestion comes from a loaded strategy tree while the play stays on-tree,
falling back to the default combined valuation once it wanders off.
"""

from __future__ import annotations

import threading
import time
import uuid

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from . import corpus, treeio, valuations
from .game import format_response, parse_response_lenient

SESSION_TTL_SECONDS = 24 * 3600
SAMPLE_LIMIT = 20


class NewSession(BaseModel):
    game: str


class Feedback(BaseModel):
    guess: str
    response: str


class _Session:
    def __init__(self, sid, game, tree):
        self.sid = sid
        self.game = game
        self.cand = game.all_candidates()
        self.node = tree
        self.transcript: list[tuple[str, str]] = []
        self.solved = False
        self.touched = time.monotonic()
        self.lock = threading.Lock()

    def suggestion(self):
        if self.solved or self.cand.size == 0:
            return None
        if self.node is not None:
            return self.game.guesses[self.node.guess]
        return self.game.guesses[
            valuations.choose_guess(self.game, valuations.DEFAULT_VALUATION, self.cand)
        ]

    def payload(self):
        return {
            "sessionId": self.sid,
            "game": self.game.name,
            "suggestion": self.suggestion(),
            "candidateCount": int(self.cand.size),
            "sampleCandidates": self.game.candidate_words(self.cand[:SAMPLE_LIMIT]),
            "solved": self.solved,
            "transcript": [
                {"guess": g, "response": r} for g, r in self.transcript
            ],
        }


class _State:
    def __init__(self, manifest_path, tree_paths):
        self.manifest_path = manifest_path
        self.tree_paths = tree_paths or {}
        self.games = {}
        self.trees = {}
        self.sessions: dict[str, _Session] = {}
        self.lock = threading.Lock()

    def game(self, name):
        if name not in self.games:
            self.games[name] = corpus.load_game(name, manifest_path=self.manifest_path)
            if name in self.tree_paths:
                self.trees[name] = treeio.load_tree(self.tree_paths[name], self.games[name])
        return self.games[name]

    def expire(self):
        cutoff = time.monotonic() - SESSION_TTL_SECONDS
        with self.lock:
            for sid in [s for s, sess in self.sessions.items() if sess.touched < cutoff]:
                del self.sessions[sid]


def create_app(manifest_path=None, tree_paths=None) -> FastAPI:
    state = _State(manifest_path, tree_paths)
    app = FastAPI(title="guessbound assistant", version="1")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )
    app.state.guessbound = state

    @app.get("/api/v1/games")
    def games():
        out = []
        for name, desc in corpus.load_manifest(state.manifest_path).items():
            entry = {
                "name": name,
                "wordLength": desc.word_length,
                "alphabet": desc.alphabet,
                "guessCount": desc.expected_guesses,
                "secretCount": desc.expected_secrets,
                "digests": {"guesses": desc.guesses_digest, "secrets": desc.secrets_digest},
            }
            try:
                game = state.game(name)
                entry["available"] = True
                entry["words"] = None if game.n_guesses > 50000 else list(game.guesses)
            except corpus.CorpusError as exc:
                entry["available"] = False
                entry["reason"] = str(exc)
            out.append(entry)
        return out

    @app.post("/api/v1/sessions", status_code=201)
    def new_session(body: NewSession):
        state.expire()
        try:
            game = state.game(body.game)
        except corpus.CorpusError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        sid = uuid.uuid4().hex
        sess = _Session(sid, game, state.trees.get(body.game))
        with state.lock:
            state.sessions[sid] = sess
        return sess.payload()

    def _get(sid) -> _Session:
        sess = state.sessions.get(sid)
        if sess is None:
            raise HTTPException(status_code=404, detail=f"unknown session {sid}")
        return sess

    @app.get("/api/v1/sessions/{sid}")
    def get_session(sid: str):
        return _get(sid).payload()

    @app.post("/api/v1/sessions/{sid}/feedback")
    def feedback(sid: str, body: Feedback):
        sess = _get(sid)
        game = sess.game
        word = body.guess.strip().upper()
        if word not in game.guess_index:
            raise HTTPException(status_code=400, detail=f"{word!r} is not an allowed guess")
        try:
            code = parse_response_lenient(body.response, game.word_length)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc))
        with sess.lock:
            sess.touched = time.monotonic()
            if sess.solved:
                raise HTTPException(status_code=409, detail="session already solved")
            if code == game.affirmative:
                sess.solved = True
                sess.transcript.append((word, format_response(code, game.word_length)))
                sess.cand = game.filter_candidates(sess.cand, game.guess_index[word], code)
                return sess.payload()
            narrowed = game.filter_candidates(sess.cand, game.guess_index[word], code)
            if narrowed.size == 0:
                # leave the session untouched so the client can retry
                raise HTTPException(
                    status_code=409,
                    detail={
                        "error": "contradiction",
                        "message": "no secret matches that combination of responses",
                        "candidateCount": 0,
                    },
                )
            sess.cand = narrowed
            sess.transcript.append((word, format_response(code, game.word_length)))
            if sess.node is not None and game.guesses[sess.node.guess] == word:
                sess.node = sess.node.branches.get(code)
            else:
                sess.node = None
            return sess.payload()

    @app.delete("/api/v1/sessions/{sid}", status_code=204)
    def delete_session(sid: str):
        with state.lock:
            if sid not in state.sessions:
                raise HTTPException(status_code=404, detail=f"unknown session {sid}")
            del state.sessions[sid]

    return app
