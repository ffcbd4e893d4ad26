"""Command-line entry points.

Machine-readable output (JSON summaries) goes to stdout; progress and
interactive chatter go to stderr. Exit codes: 0 success, 2 validation
problem, 3 proof ran clean but stayed inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import corpus, prover, search, treeio, valuations
from .game import MalformedTreeError, parse_response_lenient

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_INCONCLUSIVE = 3


def _load_game(args):
    return corpus.load_game(
        args.game, manifest_path=args.corpus_manifest, strict=args.strict_corpus
    )


def _corpus_digests(args):
    _, guesses, secrets, _ = corpus.load_corpus(args.game, args.corpus_manifest)
    return {
        "guesses": corpus.word_list_digest(guesses),
        "secrets": corpus.word_list_digest(secrets),
    }


def cmd_build(args) -> int:
    game = _load_game(args)
    cfg = search.SearchConfig(
        breadth=args.breadth, valuation=valuations.CombinedValuation.parse(args.valuation)
    )
    print(f"searching {game.name} at breadth {cfg.breadth}", file=sys.stderr)
    value, tree = search.ap_min_total(game, game.all_candidates(), cfg)
    hist = search.depth_histogram(game, tree)
    summary = {
        "game": game.name,
        "breadth": cfg.breadth,
        "valuation": str(cfg.valuation),
        "total": value,
        "expected": value / game.n_secrets,
        "starter": game.guesses[tree.guess],
        "histogram": {str(k): v for k, v in hist.items()},
    }
    if args.out:
        doc = treeio.save_tree(args.out, game, tree)
        summary["treePath"] = args.out
        summary["treeDigest"] = treeio.tree_digest(doc)
    print(json.dumps(summary, indent=1))
    return EXIT_OK


def cmd_prove(args) -> int:
    game = _load_game(args)
    tree = treeio.load_tree(args.tree, game)
    doc = treeio.serialize_tree(game, tree)
    cert = prover.prove_optimal(
        game,
        tree,
        max_level=args.max_level,
        tree_digest=treeio.tree_digest(doc),
        checkpoint_path=args.checkpoint,
        corpus_digests=_corpus_digests(args),
    )
    payload = cert.to_json()
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(payload, fh, indent=1)
    print(json.dumps(payload["verdict"], indent=1))
    return EXIT_OK if cert.status == "proved" else EXIT_INCONCLUSIVE


def cmd_evaluate(args) -> int:
    game = _load_game(args)
    tree = treeio.load_tree(args.tree, game)
    total = search.total_turns(game, tree)
    hist = search.depth_histogram(game, tree)
    print(
        json.dumps(
            {
                "game": game.name,
                "total": total,
                "expected": total / game.n_secrets,
                "maxDepth": max(hist),
                "histogram": {str(k): v for k, v in hist.items()},
            },
            indent=1,
        )
    )
    return EXIT_OK


def cmd_assist(args) -> int:
    game = _load_game(args)
    tree = treeio.load_tree(args.tree, game) if args.tree else None
    cand = game.all_candidates()
    node = tree
    err = sys.stderr
    print(f"assisting {game.name}; enter responses as digits 0/1/2 (or B/Y/G)", file=err)
    while True:
        if cand.size == 0:
            print("no candidates remain; a response must have been wrong", file=err)
            return EXIT_VALIDATION
        if node is not None:
            suggestion = game.guesses[node.guess]
        else:
            suggestion = game.guesses[
                valuations.choose_guess(game, valuations.DEFAULT_VALUATION, cand)
            ]
        print(f"suggest: {suggestion}  ({cand.size} candidates)", file=err)
        try:
            line = input("guess response> ")
        except EOFError:
            return EXIT_OK
        parts = line.split()
        if not parts:
            continue
        if len(parts) == 1:
            word, resp = suggestion, parts[0]
        else:
            word, resp = parts[0].upper(), parts[1]
        try:
            code = parse_response_lenient(resp, game.word_length)
            gi = game._guess_id(word) if word in game.guess_index else None
            if gi is None:
                raise ValueError(f"{word!r} is not an allowed guess")
        except ValueError as exc:
            print(f"error: {exc}", file=err)
            continue
        if code == game.affirmative:
            print("solved!", file=err)
            return EXIT_OK
        cand = game.filter_candidates(cand, gi, code)
        if node is not None:
            node = node.branches.get(code) if game.guesses[node.guess] == word else None


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    trees = {}
    for spec in args.tree or []:
        name, _, path = spec.partition("=")
        if not path:
            print("--tree expects GAME=PATH", file=sys.stderr)
            return EXIT_VALIDATION
        trees[name] = path
    host, _, port = args.bind.rpartition(":")
    app = create_app(manifest_path=args.corpus_manifest, tree_paths=trees)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return EXIT_OK


def cmd_games(args) -> int:
    manifest = corpus.load_manifest(args.corpus_manifest)
    rows = []
    for name, desc in manifest.items():
        rows.append(
            {
                "name": name,
                "wordLength": desc.word_length,
                "guesses": desc.expected_guesses,
                "secrets": desc.expected_secrets,
            }
        )
    print(json.dumps(rows, indent=1))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="guessbound")
    ap.add_argument("--corpus-manifest", help="path to a corpus manifest JSON")
    ap.add_argument(
        "--strict-corpus",
        action="store_true",
        help="fail instead of warn when corpus digests mismatch",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="search for a strategy and write its tree")
    p.add_argument("--game", required=True)
    p.add_argument("--breadth", type=int, default=10)
    p.add_argument("--valuation", default=str(valuations.DEFAULT_VALUATION))
    p.add_argument("--out", help="tree JSON output path")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("prove", help="certify a strategy tree optimal")
    p.add_argument("--game", required=True)
    p.add_argument("--tree", required=True)
    p.add_argument("--max-level", type=int, default=prover.DEFAULT_MAX_LEVEL)
    p.add_argument("--checkpoint", help="resumable elimination state path")
    p.add_argument("--out", help="certificate JSON output path")
    p.set_defaults(func=cmd_prove)

    p = sub.add_parser("evaluate", help="score a strategy tree")
    p.add_argument("--game", required=True)
    p.add_argument("--tree", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("assist", help="interactive play helper")
    p.add_argument("--game", required=True)
    p.add_argument("--tree")
    p.set_defaults(func=cmd_assist)

    p = sub.add_parser("serve", help="run the assistant HTTP API")
    p.add_argument("--bind", default="127.0.0.1:8000")
    p.add_argument("--tree", action="append", help="GAME=PATH, repeatable")
    p.set_defaults(func=cmd_serve)

    p = sub.add_parser("games", help="list known corpora")
    p.set_defaults(func=cmd_games)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (corpus.CorpusError, MalformedTreeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
