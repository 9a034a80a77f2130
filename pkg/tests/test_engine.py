import random

import pytest

from gapoera import engine
from gapoera.engine import TIE, BoardConfig, GameState, house_indices, store_index
from gapoera.errors import GameOverError, IllegalActionError


def test_config_defaults_and_total():
    cfg = BoardConfig()
    assert cfg.pits_per_side == 7
    assert cfg.stones_per_pit == 7
    assert cfg.total_stones() == 98
    assert BoardConfig(2, 3).total_stones() == 12


@pytest.mark.parametrize("pits,stones", [(0, 7), (7, 0), (-1, 1), (1, -1)])
def test_config_rejects_nonpositive(pits, stones):
    with pytest.raises(ValueError):
        BoardConfig(pits_per_side=pits, stones_per_pit=stones)


def test_new_game_layout():
    state = engine.new_game(BoardConfig(3, 2))
    assert state.board == (2, 2, 2, 0, 2, 2, 2, 0)
    assert state.current_player == 0
    assert state.turn_index == 0
    assert not state.is_over
    assert store_index(3, 0) == 3
    assert store_index(3, 1) == 7
    assert house_indices(3, 0) == range(0, 3)
    assert house_indices(3, 1) == range(4, 7)


def test_legal_actions_initial_and_empty_pits():
    state = engine.new_game(BoardConfig())
    assert engine.legal_actions(state) == set(range(7))
    state = GameState(board=(0, 3, 0, 1, 5, 0, 2, 0), current_player=0, turn_index=4)
    assert engine.legal_actions(state) == {1}
    state = GameState(board=(0, 3, 0, 1, 5, 0, 2, 0), current_player=1, turn_index=4)
    assert engine.legal_actions(state) == {0, 2}


def test_all_openers_reward_one():
    state = engine.new_game(BoardConfig())
    for pit in range(7):
        _, outcome = engine.apply_action(state, pit)
        assert outcome.reward == 1
        assert outcome.extra_turn is (pit == 0)


def test_opener_pit_zero_extra_turn_keeps_mover():
    state = engine.new_game(BoardConfig())
    nxt, outcome = engine.apply_action(state, 0)
    assert outcome.extra_turn
    assert nxt.current_player == 0
    assert nxt.turn_index == 1
    assert nxt.board == (0, 8, 8, 8, 8, 8, 8, 1, 7, 7, 7, 7, 7, 7, 7, 0)


def test_opener_without_extra_turn_passes_move():
    state = engine.new_game(BoardConfig())
    nxt, _ = engine.apply_action(state, 3)
    assert nxt.current_player == 1
    assert nxt.board == (7, 7, 7, 0, 8, 8, 8, 1, 8, 8, 8, 7, 7, 7, 7, 0)


def test_sowing_skips_opponent_store():
    # 16 stones from player 0's last pit: one full lap and change, the
    # opponent store (index 7 in the 3-pit layout) must stay untouched
    state = GameState(board=(1, 1, 16, 0, 1, 1, 1, 3), current_player=0, turn_index=0)
    nxt, outcome = engine.apply_action(state, 2)
    assert nxt.board[7] == 3
    assert sum(nxt.board) == 24
    # two full passes over own store
    assert outcome.reward >= 2


def test_capture_takes_last_stone_and_facing_pit():
    state = GameState(board=(1, 0, 0, 1, 1, 0), current_player=0, turn_index=0)
    nxt, outcome = engine.apply_action(state, 0)
    assert outcome.capture is not None
    assert outcome.capture.landing_pit_index == 1
    assert outcome.capture.opposite_pit_index == 3
    assert outcome.capture.stones_captured == 2
    assert outcome.reward == 2
    # both rows emptied by capture + sweep; each side banked its leftovers
    assert nxt.board == (0, 0, 2, 0, 0, 1)
    assert nxt.is_over
    assert nxt.winner == 0
    assert outcome.terminal is not None
    assert outcome.terminal.final_scores == (2, 1)


def test_no_capture_when_facing_pit_empty():
    state = GameState(board=(1, 0, 0, 0, 1, 0), current_player=0, turn_index=0)
    nxt, outcome = engine.apply_action(state, 0)
    assert outcome.capture is None
    # landing stone stays put; row 0 still has it, no sweep
    assert nxt.board == (0, 1, 0, 0, 1, 0)
    assert not nxt.is_over


def test_no_capture_when_landing_pit_already_held_stones():
    state = GameState(board=(1, 1, 0, 9, 1, 1, 7, 4), current_player=0, turn_index=0)
    nxt, outcome = engine.apply_action(state, 0)
    # lands on pit 1 which held a stone already (now 2): not a capture
    assert outcome.capture is None
    assert nxt.board[1] == 2


def test_full_lap_captures_into_emptied_source_pit():
    # 7 stones on a 3-pit board walk the entire ring (2n+1 == 7 slots) and
    # the last stone falls back into the pit it started from
    state = GameState(board=(1, 7, 1, 0, 2, 2, 2, 1), current_player=0, turn_index=0)
    nxt, outcome = engine.apply_action(state, 1)
    assert outcome.capture is not None
    assert outcome.capture.landing_pit_index == 1
    assert outcome.capture.opposite_pit_index == 5
    assert outcome.capture.stones_captured == 4  # 1 landed + 3 facing
    assert nxt.board[1] == 0 and nxt.board[5] == 0


def test_sweep_banks_both_rows():
    state = GameState(board=(0, 0, 1, 5, 3, 2, 4, 1), current_player=0, turn_index=9)
    nxt, outcome = engine.apply_action(state, 2)
    # stone goes to own store, row 0 empties, player 1 banks 3+2+4
    assert nxt.board == (0, 0, 0, 6, 0, 0, 0, 10)
    assert nxt.is_over
    assert nxt.winner == 1
    assert outcome.terminal.swept == (0, 9)
    assert outcome.terminal.final_scores == (6, 10)
    assert outcome.reward == 1  # only the sown stone reached the actor's store


def test_sweep_can_be_triggered_by_opponent_row_emptying():
    # player 1's last pit drains through their store into player 0's row;
    # player 1's row empties so player 0 banks everything left over
    state = GameState(board=(2, 0, 1, 3, 0, 0, 2, 5), current_player=1, turn_index=9)
    nxt, outcome = engine.apply_action(state, 2)
    assert nxt.is_over
    assert nxt.board == (0, 0, 0, 7, 0, 0, 0, 6)
    assert nxt.winner == 0
    assert outcome.reward == 1
    assert outcome.terminal.swept == (4, 0)


def test_tie_game():
    state = GameState(board=(0, 0, 1, 5, 0, 0, 6, 0), current_player=0, turn_index=2)
    nxt, _ = engine.apply_action(state, 2)
    assert nxt.winner == TIE
    assert engine.scores(nxt) == (6, 6)


def test_illegal_actions_raise():
    state = engine.new_game(BoardConfig())
    with pytest.raises(IllegalActionError):
        engine.apply_action(state, 7)
    with pytest.raises(IllegalActionError):
        engine.apply_action(state, -1)
    empty_pit = GameState(board=(0, 1, 1, 0, 1, 1, 1, 7), current_player=0, turn_index=1)
    with pytest.raises(IllegalActionError):
        engine.apply_action(empty_pit, 0)


def test_acting_on_finished_game_raises():
    state = GameState(board=(0, 0, 6, 0, 0, 6), current_player=0, turn_index=8, winner=TIE)
    assert engine.legal_actions(state) == set()
    with pytest.raises(GameOverError):
        engine.apply_action(state, 0)


def test_states_are_immutable_values():
    state = engine.new_game(BoardConfig())
    nxt, _ = engine.apply_action(state, 2)
    assert state.board[2] == 7  # original untouched
    with pytest.raises(AttributeError):
        state.current_player = 1
    assert state == engine.new_game(BoardConfig())
    assert nxt != state


def test_observe_both_seats():
    state = GameState(board=(1, 2, 3, 4, 5, 6, 7, 8), current_player=1, turn_index=3)
    obs0 = engine.observe(state, 0)
    assert obs0.own_pits == (1, 2, 3)
    assert obs0.own_store == 4
    assert obs0.opponent_pits == (5, 6, 7)
    assert obs0.opponent_store == 8
    assert obs0.to_move is False
    obs1 = engine.observe(state, 1)
    assert obs1.own_pits == (5, 6, 7)
    assert obs1.own_store == 8
    assert obs1.to_move is True
    assert sorted(obs0.own_pits + obs0.opponent_pits) == sorted(state.board[:3] + state.board[4:7])
    with pytest.raises(ValueError):
        engine.observe(state, 2)


def test_random_playouts_conserve_stones_small():
    rng = random.Random(11)
    for _ in range(300):
        state = engine.new_game(BoardConfig())
        for _ in range(10_000):
            if state.is_over:
                break
            action = rng.choice(sorted(engine.legal_actions(state)))
            state, outcome = engine.apply_action(state, action)
            assert sum(state.board) == 98
            assert min(state.board) >= 0
            assert outcome.reward >= 0
        assert state.is_over
        assert engine.scores(state)[0] + engine.scores(state)[1] == 98
        assert all(state.board[i] == 0 for i in range(7))
        assert all(state.board[i] == 0 for i in range(8, 15))


def test_reward_equals_store_delta_fuzz():
    rng = random.Random(23)
    for _ in range(60):
        state = engine.new_game(BoardConfig(rng.randint(1, 5), rng.randint(1, 4)))
        while not state.is_over:
            action = rng.choice(sorted(engine.legal_actions(state)))
            me = state.current_player
            before = engine.scores(state)[me]
            state, outcome = engine.apply_action(state, action)
            assert outcome.reward == engine.scores(state)[me] - before
