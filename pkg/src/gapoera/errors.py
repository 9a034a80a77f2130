"""Error types shared by the engine, the session store, and the HTTP facade.

Each class carries the machine-readable ``code`` that appears on the wire.
"""

from __future__ import annotations


class GameError(Exception):
    code = "bad_request"


class UnknownGameError(GameError):
    code = "unknown_game"


class UnknownSessionError(GameError):
    code = "unknown_session"


class NotYourTurnError(GameError):
    code = "not_your_turn"


class IllegalActionError(GameError):
    code = "illegal_action"


class GameOverError(GameError):
    code = "game_over"


class SimStackEmptyError(GameError):
    code = "sim_stack_empty"


class NoBotError(GameError):
    # conflict with the session's configuration, not a malformed request,
    # but the wire vocabulary has no dedicated code for it
    code = "bad_request"
