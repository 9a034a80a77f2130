"""Seeded agent-vs-agent match runner and report emitter.

Each game draws from its own derived random streams, so games are
independent, reproducible, and could run in parallel without changing
results.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass

from . import engine
from .agents import GREEDY1, GREEDY2, AgentSpec, choose_action
from .engine import BoardConfig

_MAX_ACTIONS = 1_000_000  # safety net; Kalah games terminate long before this


@dataclass(frozen=True)
class MatchPlan:
    agent_a: AgentSpec
    agent_b: AgentSpec
    num_games: int
    alternate_after: int | None = None  # games before the first mover swaps; default half
    master_seed: int = 0
    config: BoardConfig = BoardConfig()

    def __post_init__(self) -> None:
        if self.num_games < 0:
            raise ValueError(f"num_games must be >= 0, got {self.num_games}")
        if self.alternate_after is None:
            object.__setattr__(self, "alternate_after", self.num_games // 2)
        if not 0 <= self.alternate_after <= self.num_games:
            raise ValueError(
                f"alternate_after must be in [0, {self.num_games}], got {self.alternate_after}"
            )


@dataclass(frozen=True)
class GameTranscript:
    game_index: int
    first_mover: str  # "a" | "b": who played player 0
    seed: str
    moves: tuple[int, ...]
    final_scores: tuple[int, int]  # player 0, player 1
    winner: str  # "a" | "b" | "tie"


@dataclass(frozen=True)
class MatchResult:
    wins_a: int
    wins_b: int
    ties: int
    transcripts: tuple[GameTranscript, ...]

    @property
    def num_games(self) -> int:
        return self.wins_a + self.wins_b + self.ties


@dataclass(frozen=True)
class PairingResult:
    pairing: str
    plan: MatchPlan
    result: MatchResult


@dataclass(frozen=True)
class Table3Report:
    cells: tuple[PairingResult, ...]
    totals: dict[str, int]  # total wins per agent label


def _game_rng(master_seed: int, game_index: int, role: str) -> random.Random:
    # string seeding hashes via sha512: stable across platforms and runs
    return random.Random(f"{master_seed}:{game_index}:{role}")


def _play_game(plan: MatchPlan, game_index: int) -> GameTranscript:
    a_first = game_index < plan.alternate_after
    player_a = 0 if a_first else 1
    rng = {"a": _game_rng(plan.master_seed, game_index, "a"),
           "b": _game_rng(plan.master_seed, game_index, "b")}
    spec = {"a": plan.agent_a, "b": plan.agent_b}

    state = engine.new_game(plan.config)
    moves: list[int] = []
    while not state.is_over:
        side = "a" if state.current_player == player_a else "b"
        action = choose_action(spec[side], state, rng[side])
        state, _ = engine.apply_action(state, action)
        moves.append(action)
        if len(moves) > _MAX_ACTIONS:
            raise RuntimeError(f"game {game_index} did not terminate")

    scores = engine.scores(state)
    score_a, score_b = scores[player_a], scores[1 - player_a]
    winner = "a" if score_a > score_b else "b" if score_b > score_a else "tie"
    return GameTranscript(
        game_index=game_index,
        first_mover="a" if a_first else "b",
        seed=f"{plan.master_seed}:{game_index}",
        moves=tuple(moves),
        final_scores=scores,
        winner=winner,
    )


def run_match(plan: MatchPlan) -> MatchResult:
    """Play the whole plan to terminal states; deterministic in master_seed."""
    transcripts = tuple(_play_game(plan, i) for i in range(plan.num_games))
    tally = {"a": 0, "b": 0, "tie": 0}
    for t in transcripts:
        tally[t.winner] += 1
    return MatchResult(tally["a"], tally["b"], tally["tie"], transcripts)


def replay_transcript(transcript: GameTranscript, config: BoardConfig) -> engine.GameState:
    """Re-feed a transcript's moves through the engine; returns the end state."""
    state = engine.new_game(config)
    for action in transcript.moves:
        state, _ = engine.apply_action(state, action)
    return state


_GA1_LABELS = [("GA I (eps=0.1)", AgentSpec(GREEDY1, 0.1)), ("GA I (eps=0.3)", AgentSpec(GREEDY1, 0.3))]
_GA2_LABELS = [("GA II (eps=0.1)", AgentSpec(GREEDY2, 0.1)), ("GA II (eps=0.3)", AgentSpec(GREEDY2, 0.3))]


def run_table3(
    num_games_per_pairing: int,
    master_seed: int,
    config: BoardConfig = BoardConfig(),
) -> Table3Report:
    """Run the four store-greedy vs extra-turn-greedy pairings and total the wins."""
    cells = []
    totals = {label: 0 for label, _ in _GA1_LABELS + _GA2_LABELS}
    index = 0
    for label_a, spec_a in _GA1_LABELS:
        for label_b, spec_b in _GA2_LABELS:
            plan = MatchPlan(
                agent_a=spec_a,
                agent_b=spec_b,
                num_games=num_games_per_pairing,
                master_seed=master_seed * 4 + index,
                config=config,
            )
            result = run_match(plan)
            cells.append(PairingResult(f"{label_a} vs {label_b}", plan, result))
            totals[label_a] += result.wins_a
            totals[label_b] += result.wins_b
            index += 1
    return Table3Report(cells=tuple(cells), totals=totals)


def emit_report(results: Table3Report | list[PairingResult] | tuple[PairingResult, ...], format: str) -> str:
    """Render results as `csv` (stable schema) or a `pretty` text table."""
    rows = list(results.cells) if isinstance(results, Table3Report) else list(results)
    if format == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["pairing", "wins_a", "wins_b", "ties", "seed"])
        for row in rows:
            writer.writerow(
                [row.pairing, row.result.wins_a, row.result.wins_b, row.result.ties, row.plan.master_seed]
            )
        return out.getvalue()
    if format == "pretty":
        width = max([len("pairing")] + [len(r.pairing) for r in rows])
        lines = [f"{'pairing'.ljust(width)}  wins_a  wins_b  ties"]
        for row in rows:
            lines.append(
                f"{row.pairing.ljust(width)}  {row.result.wins_a:>6}  {row.result.wins_b:>6}  {row.result.ties:>4}"
            )
        if isinstance(results, Table3Report):
            lines.append("")
            lines.append("total wins:")
            for label, wins in results.totals.items():
                lines.append(f"  {label.ljust(width)}  {wins}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format {format!r}, expected 'csv' or 'pretty'")
