"""Pydantic models for the /v1 JSON wire protocol.

Field declaration order is the canonical serialization order; tests compare
serialized states byte-for-byte, so do not reorder fields casually.
"""

from __future__ import annotations

from pydantic import BaseModel

from ..engine import GameState, Observation, StepOutcome, scores
from ..session import Session


class WireConfig(BaseModel):
    pits: int
    stones: int


class WireState(BaseModel):
    game_id: str
    game: str
    config: WireConfig
    board: list[int]
    current_player: int
    turn_index: int
    is_over: bool
    winner: int | str | None
    scores: list[int]
    sim_depth: int


class WireObservation(BaseModel):
    own_pits: list[int]
    own_store: int
    opponent_pits: list[int]
    opponent_store: int
    to_move: bool
    is_over: bool
    winner: int | str | None


class WireCapture(BaseModel):
    landing_pit_index: int
    opposite_pit_index: int
    stones_captured: int


class WireTerminal(BaseModel):
    winner: int | str
    final_scores: list[int]
    swept: list[int]


class WireOutcome(BaseModel):
    reward: int
    extra_turn: bool
    capture: WireCapture | None
    terminal: WireTerminal | None


class WireError(BaseModel):
    error: str
    message: str


class CreateGameRequest(BaseModel):
    game: str
    config: WireConfig | None = None
    bot_level: int | None = None
    seed: int | None = None


class CreateGameResponse(BaseModel):
    game_id: str
    state: WireState


class StepRequest(BaseModel):
    player: int
    action: int


class StepResponse(BaseModel):
    state: WireState
    outcome: WireOutcome


class BotStepRequest(BaseModel):
    level: int | None = None


class BotStepResponse(BaseModel):
    action: int
    state: WireState
    outcome: WireOutcome


class LegalActionsResponse(BaseModel):
    actions: list[int]


class SimStartResponse(BaseModel):
    sim_depth: int


class SimStopResponse(BaseModel):
    sim_depth: int
    state: WireState


def wire_state(session: Session, state: GameState, sim_depth: int) -> WireState:
    return WireState(
        game_id=session.game_id,
        game=session.game_name,
        config=WireConfig(pits=session.config.pits_per_side, stones=session.config.stones_per_pit),
        board=list(state.board),
        current_player=state.current_player,
        turn_index=state.turn_index,
        is_over=state.is_over,
        winner=state.winner,
        scores=list(scores(state)),
        sim_depth=sim_depth,
    )


def wire_observation(obs: Observation) -> WireObservation:
    return WireObservation(
        own_pits=list(obs.own_pits),
        own_store=obs.own_store,
        opponent_pits=list(obs.opponent_pits),
        opponent_store=obs.opponent_store,
        to_move=obs.to_move,
        is_over=obs.is_over,
        winner=obs.winner,
    )


def wire_outcome(outcome: StepOutcome) -> WireOutcome:
    return WireOutcome(
        reward=outcome.reward,
        extra_turn=outcome.extra_turn,
        capture=None
        if outcome.capture is None
        else WireCapture(
            landing_pit_index=outcome.capture.landing_pit_index,
            opposite_pit_index=outcome.capture.opposite_pit_index,
            stones_captured=outcome.capture.stones_captured,
        ),
        terminal=None
        if outcome.terminal is None
        else WireTerminal(
            winner=outcome.terminal.winner,
            final_scores=list(outcome.terminal.final_scores),
            swept=list(outcome.terminal.swept),
        ),
    )
