"""HTTP facade over the session store.

Routes are synchronous; FastAPI runs them in a threadpool and the store's
per-session locks serialize writers, so the service layer stays stateless.
"""

from __future__ import annotations

from pathlib import Path

from fastapi import APIRouter, FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from ..engine import BoardConfig
from ..errors import (
    GameError,
    GameOverError,
    IllegalActionError,
    NoBotError,
    NotYourTurnError,
    SimStackEmptyError,
    UnknownGameError,
    UnknownSessionError,
)
from ..session import SessionStore
from .schemas import (
    BotStepRequest,
    BotStepResponse,
    CreateGameRequest,
    CreateGameResponse,
    LegalActionsResponse,
    SimStartResponse,
    SimStopResponse,
    StepRequest,
    StepResponse,
    WireError,
    WireObservation,
    WireState,
    wire_observation,
    wire_outcome,
    wire_state,
)

_ERROR_STATUS = {
    UnknownGameError: 404,
    UnknownSessionError: 404,
    NotYourTurnError: 409,
    GameOverError: 409,
    SimStackEmptyError: 409,
    NoBotError: 409,
    IllegalActionError: 422,
}

router = APIRouter(prefix="/v1")


def _store(request: Request) -> SessionStore:
    return request.app.state.store


def _state_of(store: SessionStore, game_id: str) -> WireState:
    session, state, depth = store.peek(game_id)
    return wire_state(session, state, depth)


@router.post("/games", status_code=201, response_model=CreateGameResponse)
def create_game(body: CreateGameRequest, request: Request) -> CreateGameResponse:
    store = _store(request)
    config = None
    if body.config is not None:
        config = BoardConfig(body.config.pits, body.config.stones)
    game_id = store.create_session(body.game, config=config, bot=body.bot_level, seed=body.seed)
    return CreateGameResponse(game_id=game_id, state=_state_of(store, game_id))


@router.get("/games/{game_id}/state", response_model=WireState)
def get_state(game_id: str, request: Request) -> WireState:
    return _state_of(_store(request), game_id)


@router.get("/games/{game_id}/observe", response_model=WireObservation)
def get_observation(game_id: str, player: int, request: Request) -> WireObservation:
    return wire_observation(_store(request).get_observation(game_id, player))


@router.get("/games/{game_id}/legal_actions", response_model=LegalActionsResponse)
def get_legal_actions(game_id: str, request: Request) -> LegalActionsResponse:
    return LegalActionsResponse(actions=sorted(_store(request).get_legal_actions(game_id)))


@router.post("/games/{game_id}/step", response_model=StepResponse)
def step(game_id: str, body: StepRequest, request: Request) -> StepResponse:
    store = _store(request)
    _, outcome = store.step(game_id, body.player, body.action)
    return StepResponse(state=_state_of(store, game_id), outcome=wire_outcome(outcome))


@router.post("/games/{game_id}/bot_step", response_model=BotStepResponse)
def bot_step(game_id: str, request: Request, body: BotStepRequest | None = None) -> BotStepResponse:
    store = _store(request)
    level = body.level if body is not None else None
    action, _, outcome = store.bot_step(game_id, level=level)
    return BotStepResponse(action=action, state=_state_of(store, game_id), outcome=wire_outcome(outcome))


@router.post("/games/{game_id}/sim/start", response_model=SimStartResponse)
def sim_start(game_id: str, request: Request) -> SimStartResponse:
    return SimStartResponse(sim_depth=_store(request).sim_start(game_id))


@router.post("/games/{game_id}/sim/stop", response_model=SimStopResponse)
def sim_stop(game_id: str, request: Request) -> SimStopResponse:
    store = _store(request)
    _, depth = store.sim_stop(game_id)
    return SimStopResponse(sim_depth=depth, state=_state_of(store, game_id))


@router.delete("/games/{game_id}", status_code=204)
def delete_game(game_id: str, request: Request) -> None:
    _store(request).delete_session(game_id)


def create_app(
    store: SessionStore | None = None,
    allow_cors: bool = False,
    static_dir: str | Path | None = None,
) -> FastAPI:
    """Build the service around a session store.

    `allow_cors` opens permissive cross-origin headers for browser clients;
    `static_dir` optionally serves the web client bundle at /app.
    """
    app = FastAPI(title="gapoera", version="0.1.0")
    app.state.store = store if store is not None else SessionStore()
    app.include_router(router)

    if allow_cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    if static_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/app", StaticFiles(directory=str(static_dir), html=True), name="app")

    @app.exception_handler(GameError)
    def _game_error(request: Request, exc: GameError) -> JSONResponse:
        status = _ERROR_STATUS.get(type(exc), 400)
        body = WireError(error=exc.code, message=str(exc))
        return JSONResponse(status_code=status, content=body.model_dump())

    @app.exception_handler(ValueError)
    def _value_error(request: Request, exc: ValueError) -> JSONResponse:
        body = WireError(error="bad_request", message=str(exc))
        return JSONResponse(status_code=400, content=body.model_dump())

    @app.exception_handler(RequestValidationError)
    def _validation_error(request: Request, exc: RequestValidationError) -> JSONResponse:
        body = WireError(error="bad_request", message=str(exc.errors()))
        return JSONResponse(status_code=400, content=body.model_dump())

    return app
