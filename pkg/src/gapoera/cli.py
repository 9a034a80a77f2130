"""Command-line front end: serve the HTTP API, run tournaments, trace demo games."""

from __future__ import annotations

import argparse
import os
import random
import socket
import sys
from pathlib import Path

from . import engine
from .agents import KINDS, AgentSpec, agent_for_level, choose_action
from .engine import BoardConfig
from .tournament import MatchPlan, PairingResult, emit_report, run_match, run_table3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gapoera", description="Mancala game service")
    sub = parser.add_subparsers(dest="command", required=True)

    serve = sub.add_parser("serve", help="run the HTTP game service")
    serve.add_argument(
        "--host",
        default=os.environ.get("GAPOERA_HOST", "127.0.0.1"),
        help="bind address (env GAPOERA_HOST)",
    )
    serve.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("GAPOERA_PORT", "8080")),
        help="bind port, 0 picks a free one (env GAPOERA_PORT)",
    )
    serve.add_argument("--allow-cors", action="store_true", help="allow cross-origin requests")
    serve.add_argument(
        "--snapshot-file",
        default=None,
        help="restore sessions from this JSON file on start and write it back on shutdown",
    )
    serve.add_argument(
        "--static-dir",
        default=None,
        help="serve this directory at /app (for a bundled web client)",
    )
    serve.set_defaults(func=_cmd_serve)

    tournament = sub.add_parser("tournament", help="run seeded bot-vs-bot matches")
    tournament.add_argument("--games", type=int, default=10, help="games per pairing")
    tournament.add_argument("--seed", type=int, default=0, help="master seed")
    tournament.add_argument(
        "--pairings",
        default="table3",
        help="'table3' for the four greedy cross pairings, or 'kind:eps,kind:eps'",
    )
    tournament.add_argument("--format", choices=("csv", "pretty"), default="pretty")
    tournament.add_argument("--pits", type=int, default=7, help="pits per side")
    tournament.add_argument("--stones", type=int, default=7, help="starting stones per pit")
    tournament.set_defaults(func=_cmd_tournament)

    demo = sub.add_parser("demo", help="trace one bot-vs-bot game to stdout")
    demo.add_argument("--level-a", type=int, default=3, help="bot level for player 0")
    demo.add_argument("--level-b", type=int, default=1, help="bot level for player 1")
    demo.add_argument("--seed", type=int, default=0)
    demo.set_defaults(func=_cmd_demo)

    return parser


def _cmd_serve(args: argparse.Namespace) -> int:
    # imported lazily so tournament/demo work without the service dependencies
    import uvicorn

    from .service import create_app
    from .session import SessionStore

    sock = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    sock.setsockopt(socket.SOL_SOCKET, socket.SO_REUSEADDR, 1)
    try:
        sock.bind((args.host, args.port))
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        sock.close()
        return 1
    host, port = sock.getsockname()[:2]

    store = SessionStore()
    if args.snapshot_file and Path(args.snapshot_file).exists():
        restored = store.load_snapshot(args.snapshot_file)
        print(f"restored {restored} session(s) from {args.snapshot_file}", flush=True)

    app = create_app(store=store, allow_cors=args.allow_cors, static_dir=args.static_dir)
    print(f"gapoera listening on http://{host}:{port}", flush=True)
    server = uvicorn.Server(uvicorn.Config(app, log_level="warning"))
    try:
        server.run(sockets=[sock])
    finally:
        if args.snapshot_file:
            store.save_snapshot(args.snapshot_file)
            print(f"saved {len(store.session_ids())} session(s) to {args.snapshot_file}", flush=True)
    return 0


def _parse_pairing(text: str) -> tuple[AgentSpec, AgentSpec]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 'kind:eps,kind:eps', got {text!r}")
    specs = []
    for part in parts:
        kind, _, eps = part.partition(":")
        if kind not in KINDS:
            raise ValueError(f"unknown agent kind {kind!r}, expected one of {sorted(KINDS)}")
        specs.append(AgentSpec(kind, float(eps) if eps else 0.0))
    return specs[0], specs[1]


def _cmd_tournament(args: argparse.Namespace) -> int:
    config = BoardConfig(pits_per_side=args.pits, stones_per_pit=args.stones)
    if args.pairings == "table3":
        report = emit_report(run_table3(args.games, args.seed, config=config), args.format)
    else:
        spec_a, spec_b = _parse_pairing(args.pairings)
        plan = MatchPlan(spec_a, spec_b, num_games=args.games, master_seed=args.seed, config=config)
        cell = PairingResult(f"{spec_a.kind}(eps={spec_a.epsilon}) vs {spec_b.kind}(eps={spec_b.epsilon})", plan, run_match(plan))
        report = emit_report([cell], args.format)
    print(report, end="")
    return 0


def _cmd_demo(args: argparse.Namespace) -> int:
    specs = {0: agent_for_level(args.level_a), 1: agent_for_level(args.level_b)}
    rngs = {0: random.Random(f"{args.seed}:a"), 1: random.Random(f"{args.seed}:b")}

    state = engine.new_game(BoardConfig())
    print(f"demo: level {args.level_a} (player 0) vs level {args.level_b} (player 1), seed {args.seed}")
    while not state.is_over:
        player = state.current_player
        action = choose_action(specs[player], state, rngs[player])
        state, outcome = engine.apply_action(state, action)
        notes = ""
        if outcome.extra_turn:
            notes += " extra_turn"
        if outcome.capture is not None:
            notes += f" capture={outcome.capture.stones_captured}"
        board = ",".join(str(n) for n in state.board)
        print(f"# {state.turn_index:>3} p{player} pit={action} reward={outcome.reward} board={board}{notes}")
    scores = engine.scores(state)
    winner = "tie" if state.winner == engine.TIE else str(state.winner)
    print(f"result: winner={winner} scores={scores[0]},{scores[1]} turns={state.turn_index}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 0


if __name__ == "__main__":
    sys.exit(main())
