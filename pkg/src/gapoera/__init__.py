"""Mancala (Kalah) game engine, bots, sessions, HTTP service, and client SDK."""

from .agents import GREEDY1, GREEDY2, LEVELS, RANDOM, Agent, AgentSpec, agent_for_level, choose_action
from .client import ApiError, ClientError, GameClient, TransportError
from .engine import (
    TIE,
    BoardConfig,
    GameState,
    Observation,
    StepOutcome,
    apply_action,
    legal_actions,
    new_game,
    observe,
    scores,
)
from .errors import (
    GameError,
    GameOverError,
    IllegalActionError,
    NotYourTurnError,
    SimStackEmptyError,
    UnknownGameError,
    UnknownSessionError,
)
from .session import SessionStore
from .tournament import MatchPlan, MatchResult, Table3Report, emit_report, run_match, run_table3

__version__ = "0.1.0"

__all__ = [
    "Agent",
    "AgentSpec",
    "ApiError",
    "BoardConfig",
    "ClientError",
    "GameClient",
    "GameError",
    "GameOverError",
    "GameState",
    "GREEDY1",
    "GREEDY2",
    "IllegalActionError",
    "LEVELS",
    "MatchPlan",
    "MatchResult",
    "NotYourTurnError",
    "Observation",
    "RANDOM",
    "SessionStore",
    "SimStackEmptyError",
    "StepOutcome",
    "Table3Report",
    "TIE",
    "TransportError",
    "UnknownGameError",
    "UnknownSessionError",
    "agent_for_level",
    "apply_action",
    "choose_action",
    "emit_report",
    "legal_actions",
    "new_game",
    "observe",
    "run_match",
    "run_table3",
    "scores",
    "__version__",
]
