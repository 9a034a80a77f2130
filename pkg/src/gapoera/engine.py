"""Kalah-variant Mancala rules engine over immutable states.

Board layout for n pits per side: indices 0..n-1 are player 0's house pits
in sowing order (n-1 adjacent to the store), index n is player 0's store,
n+1..2n are player 1's house pits, 2n+1 is player 1's store. Opposite house
pits satisfy i + i' == 2n.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GameOverError, IllegalActionError

TIE = "tie"

Action = int  # pit ordinal in [0, n); 0 is the pit farthest from the mover's store


@dataclass(frozen=True, slots=True)
class BoardConfig:
    pits_per_side: int = 7
    stones_per_pit: int = 7

    def __post_init__(self) -> None:
        if not isinstance(self.pits_per_side, int) or self.pits_per_side < 1:
            raise ValueError(f"pits_per_side must be an integer >= 1, got {self.pits_per_side!r}")
        if not isinstance(self.stones_per_pit, int) or self.stones_per_pit < 1:
            raise ValueError(f"stones_per_pit must be an integer >= 1, got {self.stones_per_pit!r}")

    def total_stones(self) -> int:
        return 2 * self.pits_per_side * self.stones_per_pit


@dataclass(frozen=True, slots=True)
class GameState:
    board: tuple[int, ...]
    current_player: int
    turn_index: int
    winner: int | str | None = None  # None while ongoing, else 0 | 1 | TIE

    @property
    def is_over(self) -> bool:
        return self.winner is not None

    @property
    def pits_per_side(self) -> int:
        return len(self.board) // 2 - 1


@dataclass(frozen=True, slots=True)
class Capture:
    landing_pit_index: int
    opposite_pit_index: int
    stones_captured: int


@dataclass(frozen=True, slots=True)
class Terminal:
    winner: int | str
    final_scores: tuple[int, int]
    swept: tuple[int, int]


@dataclass(frozen=True, slots=True)
class StepOutcome:
    reward: int
    extra_turn: bool
    capture: Capture | None = None
    terminal: Terminal | None = None


@dataclass(frozen=True, slots=True)
class Observation:
    own_pits: tuple[int, ...]
    own_store: int
    opponent_pits: tuple[int, ...]
    opponent_store: int
    to_move: bool
    winner: int | str | None

    @property
    def is_over(self) -> bool:
        return self.winner is not None


def store_index(n: int, player: int) -> int:
    return n if player == 0 else 2 * n + 1


def house_indices(n: int, player: int) -> range:
    return range(0, n) if player == 0 else range(n + 1, 2 * n + 1)


def new_game(config: BoardConfig) -> GameState:
    n, s = config.pits_per_side, config.stones_per_pit
    board = [s] * n + [0] + [s] * n + [0]
    return GameState(board=tuple(board), current_player=0, turn_index=0)


def legal_actions(state: GameState) -> set[Action]:
    if state.is_over:
        return set()
    n = state.pits_per_side
    base = 0 if state.current_player == 0 else n + 1
    return {pit for pit in range(n) if state.board[base + pit] > 0}


def apply_action(state: GameState, action: Action) -> tuple[GameState, StepOutcome]:
    """Sow from the current player's pit `action`; returns the successor and outcome.

    Raises GameOverError on a finished game and IllegalActionError for an
    out-of-range or empty pit. The input state is never mutated.
    """
    if state.is_over:
        raise GameOverError("game is finished")
    n = state.pits_per_side
    if not isinstance(action, int) or isinstance(action, bool) or not 0 <= action < n:
        raise IllegalActionError(f"pit ordinal must be in [0, {n}), got {action!r}")

    me = state.current_player
    src = action if me == 0 else n + 1 + action
    if state.board[src] == 0:
        raise IllegalActionError(f"pit {action} is empty")

    size = 2 * n + 2
    my_store = store_index(n, me)
    their_store = store_index(n, 1 - me)
    board = list(state.board)
    store_before = board[my_store]

    # sowing: one stone per position, skipping only the opponent's store
    stones = board[src]
    board[src] = 0
    pos = src
    while stones:
        pos = (pos + 1) % size
        if pos == their_store:
            continue
        board[pos] += 1
        stones -= 1

    extra_turn = pos == my_store

    # capture: last stone in an own pit that was empty, opposite pit nonempty
    capture = None
    if not extra_turn and pos in house_indices(n, me) and board[pos] == 1:
        opposite = 2 * n - pos
        if board[opposite] > 0:
            taken = board[opposite] + 1
            board[my_store] += taken
            board[pos] = 0
            board[opposite] = 0
            capture = Capture(pos, opposite, taken)

    # end sweep: when one row empties, the other side banks its remaining stones
    terminal = None
    winner: int | str | None = None
    row0 = sum(board[0:n])
    row1 = sum(board[n + 1 : 2 * n + 1])
    if row0 == 0 or row1 == 0:
        swept0 = swept1 = 0
        if row0 == 0 and row1 > 0:
            swept1 = row1
            board[2 * n + 1] += row1
            for i in house_indices(n, 1):
                board[i] = 0
        elif row1 == 0 and row0 > 0:
            swept0 = row0
            board[n] += row0
            for i in house_indices(n, 0):
                board[i] = 0
        s0, s1 = board[n], board[2 * n + 1]
        winner = 0 if s0 > s1 else 1 if s1 > s0 else TIE
        terminal = Terminal(winner, (s0, s1), (swept0, swept1))

    reward = board[my_store] - store_before
    successor = GameState(
        board=tuple(board),
        current_player=me if extra_turn else 1 - me,
        turn_index=state.turn_index + 1,
        winner=winner,
    )
    return successor, StepOutcome(reward, extra_turn, capture, terminal)


def observe(state: GameState, player: int) -> Observation:
    if player not in (0, 1):
        raise ValueError(f"player must be 0 or 1, got {player!r}")
    n = state.pits_per_side
    own = house_indices(n, player)
    opp = house_indices(n, 1 - player)
    return Observation(
        own_pits=tuple(state.board[i] for i in own),
        own_store=state.board[store_index(n, player)],
        opponent_pits=tuple(state.board[i] for i in opp),
        opponent_store=state.board[store_index(n, 1 - player)],
        to_move=state.current_player == player,
        winner=state.winner,
    )


def scores(state: GameState) -> tuple[int, int]:
    n = state.pits_per_side
    return state.board[n], state.board[2 * n + 1]


def is_terminal(state: GameState) -> bool:
    return state.is_over


def winner(state: GameState) -> int | str | None:
    return state.winner
