import random
from collections import Counter

import pytest

from gapoera import engine
from gapoera.agents import (
    GREEDY1,
    GREEDY2,
    LEVELS,
    RANDOM,
    Agent,
    AgentSpec,
    agent_for_level,
    choose_action,
)
from gapoera.engine import BoardConfig, GameState
from gapoera.errors import GameOverError


def test_spec_validation():
    AgentSpec(GREEDY1, 0.0)
    AgentSpec(RANDOM, 1.0)
    with pytest.raises(ValueError):
        AgentSpec("minimax", 0.1)
    with pytest.raises(ValueError):
        AgentSpec(GREEDY1, -0.1)
    with pytest.raises(ValueError):
        AgentSpec(GREEDY1, 1.5)


def test_level_ladder():
    assert LEVELS == {3: (GREEDY1, 0.1), 2: (GREEDY1, 0.3), 1: (GREEDY2, 0.1)}
    for level, (kind, eps) in LEVELS.items():
        spec = agent_for_level(level)
        assert spec.kind == kind
        assert spec.epsilon == eps
    with pytest.raises(ValueError):
        agent_for_level(0)
    with pytest.raises(ValueError):
        agent_for_level(4)


def test_greedy1_takes_best_immediate_haul():
    # pit 1 reaches the big capture; pit 0 only banks one stone
    state = GameState(board=(3, 1, 0, 0, 9, 1, 1, 0), current_player=0, turn_index=0)
    rng = random.Random(0)
    for _ in range(50):
        assert choose_action(AgentSpec(GREEDY1, 0.0), state, rng) == 1


def test_greedy1_breaks_ties_uniformly():
    state = engine.new_game(BoardConfig())  # every opener banks exactly 1
    rng = random.Random(7)
    counts = Counter(choose_action(AgentSpec(GREEDY1, 0.0), state, rng) for _ in range(14_000))
    assert set(counts) == set(range(7))
    expected = 14_000 / 7
    sigma = (14_000 * (1 / 7) * (6 / 7)) ** 0.5
    for action in range(7):
        assert abs(counts[action] - expected) < 4 * sigma


def test_greedy2_prefers_rightmost_extra_turn():
    # pits 0 and 2 both land in the store; the higher ordinal wins
    state = GameState(board=(3, 1, 1, 0, 2, 2, 2, 0), current_player=0, turn_index=0)
    rng = random.Random(1)
    for _ in range(50):
        assert choose_action(AgentSpec(GREEDY2, 0.0), state, rng) == 2


def test_greedy2_falls_back_to_uniform_random():
    state = GameState(board=(1, 1, 2, 0, 2, 2, 2, 0), current_player=0, turn_index=0)
    rng = random.Random(5)
    counts = Counter(choose_action(AgentSpec(GREEDY2, 0.0), state, rng) for _ in range(6_000))
    assert set(counts) == {0, 1, 2}
    for action in (0, 1, 2):
        assert counts[action] > 1_500


def test_exploration_overrides_greed():
    # with eps=1 even greedy1 must hit every opener
    state = engine.new_game(BoardConfig())
    rng = random.Random(3)
    counts = Counter(choose_action(AgentSpec(GREEDY1, 1.0), state, rng) for _ in range(700))
    assert set(counts) == set(range(7))


def test_random_kind_ignores_rewards():
    state = GameState(board=(3, 1, 0, 0, 9, 1, 1, 0), current_player=0, turn_index=0)
    rng = random.Random(9)
    counts = Counter(choose_action(AgentSpec(RANDOM, 0.0), state, rng) for _ in range(2_000))
    assert set(counts) == {0, 1}  # pit 2 is empty, everything else gets play


def test_choose_action_on_finished_game_raises():
    state = GameState(
        board=(0, 0, 6, 0, 0, 6), current_player=0, turn_index=4, winner=engine.TIE
    )
    with pytest.raises(GameOverError):
        choose_action(AgentSpec(GREEDY1, 0.1), state, random.Random(0))


def test_agent_instance_is_deterministic_per_seed():
    def trajectory(seed):
        agent = Agent(AgentSpec(GREEDY1, 0.3, seed=seed))
        state = engine.new_game(BoardConfig())
        actions = []
        while not state.is_over:
            action = agent.act(state)
            actions.append(action)
            state, _ = engine.apply_action(state, action)
        return actions

    assert trajectory(42) == trajectory(42)
    assert trajectory(42) != trajectory(43)


def test_levels_finish_games_against_each_other():
    rng = random.Random(17)
    for level_a in (1, 2, 3):
        for level_b in (1, 2, 3):
            specs = {0: agent_for_level(level_a), 1: agent_for_level(level_b)}
            state = engine.new_game(BoardConfig())
            for _ in range(10_000):
                if state.is_over:
                    break
                action = choose_action(specs[state.current_player], state, rng)
                state, _ = engine.apply_action(state, action)
            assert state.is_over
            assert sum(engine.scores(state)) == 98
