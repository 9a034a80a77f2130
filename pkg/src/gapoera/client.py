"""Programmatic HTTP client for the /v1 game API.

Synchronous, one instance per session. Mutating calls are never retried, so
an ambiguous timeout cannot double-step a game.
"""

from __future__ import annotations

from typing import Any

import httpx

from .engine import BoardConfig


class ClientError(Exception):
    pass


class TransportError(ClientError):
    pass


class ApiError(ClientError):
    """A WireError returned by the service."""

    def __init__(self, code: str, message: str, status: int):
        super().__init__(f"{code} ({status}): {message}")
        self.code = code
        self.message = message
        self.status = status


class GameClient:
    def __init__(
        self,
        game_name: str = "mancala",
        host_url: str = "http://127.0.0.1:8080",
        http: httpx.Client | None = None,
    ):
        self.game_name = game_name
        self.host_url = host_url.rstrip("/")
        self._http = http if http is not None else httpx.Client(base_url=self.host_url, timeout=10.0)
        self.game_id: str | None = None
        self._state: dict[str, Any] | None = None  # last WireState seen

    # -- wire plumbing --------------------------------------------------------

    def _request(self, method: str, path: str, **kwargs: Any) -> Any:
        try:
            response = self._http.request(method, path, **kwargs)
        except httpx.HTTPError as exc:
            raise TransportError(f"{method} {path}: {exc}") from exc
        if response.status_code >= 400:
            try:
                doc = response.json()
                code, message = doc["error"], doc["message"]
            except Exception:
                raise TransportError(
                    f"{method} {path}: unexpected {response.status_code} response"
                ) from None
            raise ApiError(code, message, response.status_code)
        if response.status_code == 204:
            return None
        return response.json()

    def _require_game(self) -> str:
        if self.game_id is None:
            raise ClientError("no active game: call start() first")
        return self.game_id

    # -- session lifecycle ----------------------------------------------------

    def start(
        self,
        config: BoardConfig | tuple[int, int] | None = None,
        bot_level: int | None = None,
        seed: int | None = None,
    ) -> str:
        body: dict[str, Any] = {"game": self.game_name}
        if config is not None:
            if isinstance(config, tuple):
                config = BoardConfig(*config)
            body["config"] = {"pits": config.pits_per_side, "stones": config.stones_per_pit}
        if bot_level is not None:
            body["bot_level"] = bot_level
        if seed is not None:
            body["seed"] = seed
        doc = self._request("POST", "/v1/games", json=body)
        self.game_id = doc["game_id"]
        self._state = doc["state"]
        return self.game_id

    def delete(self) -> None:
        self._request("DELETE", f"/v1/games/{self._require_game()}")
        self.game_id = None
        self._state = None

    # -- reads ----------------------------------------------------------------

    def state(self) -> dict[str, Any]:
        self._state = self._request("GET", f"/v1/games/{self._require_game()}/state")
        return self._state

    def observe(self, player: int) -> dict[str, Any]:
        return self._request(
            "GET", f"/v1/games/{self._require_game()}/observe", params={"player": player}
        )

    def legal_actions(self) -> set[int]:
        doc = self._request("GET", f"/v1/games/{self._require_game()}/legal_actions")
        return set(doc["actions"])

    def is_over(self) -> bool:
        return bool(self._cached_state()["is_over"])

    def current_player(self) -> int:
        return int(self._cached_state()["current_player"])

    def _cached_state(self) -> dict[str, Any]:
        if self._state is None:
            return self.state()
        return self._state

    # -- moves ----------------------------------------------------------------

    def step(self, action: int, player: int | None = None) -> tuple[dict[str, Any], dict[str, Any]]:
        if player is None:
            player = self.current_player()
        doc = self._request(
            "POST",
            f"/v1/games/{self._require_game()}/step",
            json={"player": player, "action": action},
        )
        self._state = doc["state"]
        return doc["state"], doc["outcome"]

    def bot_step(self, level: int | None = None) -> tuple[int, dict[str, Any], dict[str, Any]]:
        body = {} if level is None else {"level": level}
        doc = self._request("POST", f"/v1/games/{self._require_game()}/bot_step", json=body)
        self._state = doc["state"]
        return doc["action"], doc["state"], doc["outcome"]

    # -- speculative simulation -----------------------------------------------

    def sim_start(self) -> int:
        doc = self._request("POST", f"/v1/games/{self._require_game()}/sim/start")
        self.state()
        return doc["sim_depth"]

    def sim_stop(self) -> tuple[int, dict[str, Any]]:
        doc = self._request("POST", f"/v1/games/{self._require_game()}/sim/stop")
        self._state = doc["state"]
        return doc["sim_depth"], doc["state"]

    # -- housekeeping -----------------------------------------------------------

    def close(self) -> None:
        self._http.close()

    def __enter__(self) -> "GameClient":
        return self

    def __exit__(self, *exc: object) -> None:
        self.close()
