"""Bot players: two one-ply greedy strategies and a uniform-random baseline.

Every agent first rolls an exploration gate: with probability epsilon it
plays a uniformly random legal pit and skips the greedy evaluation.
"""

from __future__ import annotations

import random
import threading
from dataclasses import dataclass

from . import engine
from .errors import GameOverError

GREEDY1 = "greedy1"  # maximize stones banked this move, captures included
GREEDY2 = "greedy2"  # prefer extra turns, rightmost pit on ties
RANDOM = "random"

KINDS = (GREEDY1, GREEDY2, RANDOM)


@dataclass(frozen=True, slots=True)
class AgentSpec:
    kind: str
    epsilon: float = 0.0
    seed: int = 0

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown agent kind {self.kind!r}")
        if not 0.0 <= self.epsilon <= 1.0:
            raise ValueError(f"epsilon must be in [0, 1], got {self.epsilon!r}")


# difficulty ladder: level 3 is the hardest opponent
LEVELS = {
    3: (GREEDY1, 0.1),
    2: (GREEDY1, 0.3),
    1: (GREEDY2, 0.1),
}


def agent_for_level(level: int, seed: int = 0) -> AgentSpec:
    try:
        kind, epsilon = LEVELS[level]
    except (KeyError, TypeError):
        raise ValueError(f"unknown level {level!r}, expected one of {sorted(LEVELS)}") from None
    return AgentSpec(kind=kind, epsilon=epsilon, seed=seed)


def choose_action(spec: AgentSpec, state: engine.GameState, rng: random.Random) -> engine.Action:
    """Pick a legal action for `state` per the agent's strategy.

    Deterministic given (spec, state, rng state). Raises GameOverError on a
    finished game.
    """
    legal = sorted(engine.legal_actions(state))
    if not legal:
        raise GameOverError("no legal actions: game is finished")

    if rng.random() < spec.epsilon or spec.kind == RANDOM:
        return rng.choice(legal)

    outcomes = [(a, engine.apply_action(state, a)[1]) for a in legal]
    if spec.kind == GREEDY1:
        best = max(out.reward for _, out in outcomes)
        return rng.choice([a for a, out in outcomes if out.reward == best])

    # greedy2: rightmost extra-turn pit, random fallback when none grants one
    extra = [a for a, out in outcomes if out.extra_turn]
    if extra:
        return max(extra)
    return rng.choice(legal)


class Agent:
    """An AgentSpec bound to a private random stream.

    Distinct instances are independent; one instance serializes draws so it
    may be shared across threads.
    """

    def __init__(self, spec: AgentSpec):
        self.spec = spec
        self._rng = random.Random(spec.seed)
        self._lock = threading.Lock()

    def act(self, state: engine.GameState) -> engine.Action:
        with self._lock:
            return choose_action(self.spec, state, self._rng)
