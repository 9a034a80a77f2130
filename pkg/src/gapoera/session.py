"""Server-side game lifecycle: session store, legality enforcement, bot binding,
and the LIFO simulation stack.

A session's `state` is the effective state: the live game when no simulation
is active, otherwise the scratch state at the top of the stack. Engine states
are immutable, so snapshots are plain references.
"""

from __future__ import annotations

import json
import random
import secrets
import threading
import time
from collections import OrderedDict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from . import engine
from .agents import AgentSpec, agent_for_level, choose_action
from .engine import BoardConfig, GameState, Observation, StepOutcome
from .errors import (
    GameOverError,
    NoBotError,
    NotYourTurnError,
    SimStackEmptyError,
    UnknownGameError,
    UnknownSessionError,
)

DEFAULT_BOT_PLAYER = 1  # the human (or caller's agent) opens as player 0


@dataclass(frozen=True)
class GameRules:
    """The environment callables a registered game must provide."""

    new_game: Callable[[BoardConfig], GameState]
    legal_actions: Callable[[GameState], set[int]]
    apply_action: Callable[[GameState, int], tuple[GameState, StepOutcome]]
    observe: Callable[[GameState, int], Observation]


MANCALA_RULES = GameRules(
    new_game=engine.new_game,
    legal_actions=engine.legal_actions,
    apply_action=engine.apply_action,
    observe=engine.observe,
)


def default_registry() -> dict[str, GameRules]:
    return {"mancala": MANCALA_RULES}


@dataclass
class Session:
    game_id: str
    game_name: str
    config: BoardConfig
    rules: GameRules
    state: GameState
    seed: int
    rng: random.Random
    bot: AgentSpec | None = None
    bot_player: int = DEFAULT_BOT_PLAYER
    sim_stack: list[GameState] = field(default_factory=list)
    created_at: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def sim_depth(self) -> int:
        return len(self.sim_stack)


class SessionStore:
    """Thread-safe registry of live sessions keyed by game id.

    Map operations take the store lock; operations on one session serialize
    on that session's lock, so distinct games proceed in parallel. Sessions
    live until explicitly deleted unless `max_sessions` enables LRU eviction.
    """

    def __init__(self, registry: dict[str, GameRules] | None = None, max_sessions: int | None = None):
        self._registry = default_registry() if registry is None else registry
        self._sessions: OrderedDict[str, Session] = OrderedDict()
        self._lock = threading.Lock()
        self._max_sessions = max_sessions

    def create_session(
        self,
        game_name: str,
        config: BoardConfig | None = None,
        bot: AgentSpec | int | None = None,
        seed: int | None = None,
    ) -> str:
        """Open a fresh session; returns its unique game id.

        `bot` may be an AgentSpec, a difficulty level (1..3), or None for a
        two-human game. The bot plays player 1 unless rebound later.
        """
        try:
            rules = self._registry[game_name]
        except KeyError:
            raise UnknownGameError(f"unknown game {game_name!r}") from None
        config = config if config is not None else BoardConfig()
        if isinstance(bot, int) and not isinstance(bot, bool):
            bot = agent_for_level(bot)
        if seed is None:
            seed = secrets.randbits(64)

        session = Session(
            game_id=secrets.token_hex(16),
            game_name=game_name,
            config=config,
            rules=rules,
            state=rules.new_game(config),
            seed=seed,
            rng=random.Random(seed),
            bot=bot,
        )
        with self._lock:
            self._sessions[session.game_id] = session
            if self._max_sessions is not None:
                while len(self._sessions) > self._max_sessions:
                    self._sessions.popitem(last=False)
        return session.game_id

    def get_session(self, game_id: str) -> Session:
        with self._lock:
            try:
                session = self._sessions[game_id]
            except KeyError:
                raise UnknownSessionError(f"unknown game id {game_id!r}") from None
            self._sessions.move_to_end(game_id)
            return session

    def delete_session(self, game_id: str) -> None:
        with self._lock:
            if self._sessions.pop(game_id, None) is None:
                raise UnknownSessionError(f"unknown game id {game_id!r}")

    def step(self, game_id: str, player: int, action: int) -> tuple[GameState, StepOutcome]:
        """Apply `action` for `player`; rejects out-of-turn and illegal moves
        without touching the state."""
        session = self.get_session(game_id)
        with session.lock:
            state = session.state
            if state.is_over:
                raise GameOverError("game is finished")
            if player != state.current_player:
                raise NotYourTurnError(f"player {state.current_player} is to move, not {player}")
            successor, outcome = session.rules.apply_action(state, action)
            session.state = successor
            return successor, outcome

    def bot_step(self, game_id: str, level: int | None = None) -> tuple[int, GameState, StepOutcome]:
        """Let a bot act once; returns (action, state, outcome).

        With an explicit `level` the agent moves for whoever is to play.
        Otherwise the session's bound bot moves, and it must be its turn.
        """
        session = self.get_session(game_id)
        with session.lock:
            state = session.state
            if state.is_over:
                raise GameOverError("game is finished")
            if level is not None:
                spec = agent_for_level(level)
            elif session.bot is not None:
                spec = session.bot
                if state.current_player != session.bot_player:
                    raise NotYourTurnError(
                        f"bot plays player {session.bot_player}, but player {state.current_player} is to move"
                    )
            else:
                raise NoBotError("no bot bound to this session and no level given")
            action = choose_action(spec, state, session.rng)
            successor, outcome = session.rules.apply_action(state, action)
            session.state = successor
            return action, successor, outcome

    def sim_start(self, game_id: str) -> int:
        """Push a snapshot; subsequent steps move a scratch state. Returns depth."""
        session = self.get_session(game_id)
        with session.lock:
            session.sim_stack.append(session.state)
            return len(session.sim_stack)

    def sim_stop(self, game_id: str) -> tuple[GameState, int]:
        """Discard the scratch state and restore the matching snapshot."""
        session = self.get_session(game_id)
        with session.lock:
            if not session.sim_stack:
                raise SimStackEmptyError("sim_stop without a matching sim_start")
            session.state = session.sim_stack.pop()
            return session.state, len(session.sim_stack)

    def get_state(self, game_id: str) -> GameState:
        return self.get_session(game_id).state

    def get_observation(self, game_id: str, player: int) -> Observation:
        session = self.get_session(game_id)
        return session.rules.observe(session.state, player)

    def get_legal_actions(self, game_id: str) -> set[int]:
        session = self.get_session(game_id)
        return session.rules.legal_actions(session.state)

    def peek(self, game_id: str) -> tuple[Session, GameState, int]:
        """Consistent (session, effective state, sim depth) triple."""
        session = self.get_session(game_id)
        with session.lock:
            return session, session.state, len(session.sim_stack)

    def session_ids(self) -> list[str]:
        with self._lock:
            return list(self._sessions)

    # -- snapshot-to-disk (operational convenience) --------------------------

    def save_snapshot(self, path: str | Path) -> None:
        """Write all sessions to one JSON document (states use the wire field
        names); loading restores play exactly, including bot random streams."""
        docs = []
        for game_id in self.session_ids():
            try:
                session = self.get_session(game_id)
            except UnknownSessionError:
                continue
            with session.lock:
                docs.append(_session_doc(session))
        Path(path).write_text(json.dumps({"version": 1, "sessions": docs}, indent=2))

    def load_snapshot(self, path: str | Path) -> int:
        """Recreate sessions from a snapshot document; returns how many loaded."""
        data = json.loads(Path(path).read_text())
        count = 0
        for doc in data.get("sessions", []):
            session = _session_from_doc(doc, self._registry)
            with self._lock:
                self._sessions[session.game_id] = session
            count += 1
        return count


def _state_doc(state: GameState) -> dict:
    return {
        "board": list(state.board),
        "current_player": state.current_player,
        "turn_index": state.turn_index,
        "is_over": state.is_over,
        "winner": state.winner,
    }


def _state_from_doc(doc: dict) -> GameState:
    return GameState(
        board=tuple(doc["board"]),
        current_player=doc["current_player"],
        turn_index=doc["turn_index"],
        winner=doc["winner"],
    )


def _session_doc(session: Session) -> dict:
    version, internal, gauss = session.rng.getstate()
    return {
        "game_id": session.game_id,
        "game": session.game_name,
        "config": {"pits": session.config.pits_per_side, "stones": session.config.stones_per_pit},
        **_state_doc(session.state),
        "sim_stack": [_state_doc(s) for s in session.sim_stack],
        "bot": None
        if session.bot is None
        else {"kind": session.bot.kind, "epsilon": session.bot.epsilon, "seed": session.bot.seed},
        "bot_player": session.bot_player,
        "seed": session.seed,
        "rng_state": [version, list(internal), gauss],
        "created_at": session.created_at,
    }


def _session_from_doc(doc: dict, registry: dict[str, GameRules]) -> Session:
    game_name = doc["game"]
    try:
        rules = registry[game_name]
    except KeyError:
        raise UnknownGameError(f"snapshot references unregistered game {game_name!r}") from None
    rng = random.Random(doc["seed"])
    version, internal, gauss = doc["rng_state"]
    rng.setstate((version, tuple(internal), gauss))
    bot_doc = doc["bot"]
    return Session(
        game_id=doc["game_id"],
        game_name=game_name,
        config=BoardConfig(doc["config"]["pits"], doc["config"]["stones"]),
        rules=rules,
        state=_state_from_doc(doc),
        seed=doc["seed"],
        rng=rng,
        bot=None if bot_doc is None else AgentSpec(bot_doc["kind"], bot_doc["epsilon"], bot_doc["seed"]),
        bot_player=doc["bot_player"],
        sim_stack=[_state_from_doc(d) for d in doc["sim_stack"]],
        created_at=doc["created_at"],
    )
