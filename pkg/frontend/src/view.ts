// Pure render model. Everything the DOM needs, derived from the last
// authoritative WireState plus a little interaction context.

import type { WireCapture, WireState } from './wire.js';

export const HUMAN = 0;
export const BOT = 1;

export type Highlight = 'none' | 'sown' | 'capture';

export interface PitView {
  ordinal: number; // pit number relative to its owner
  count: number;
  selectable: boolean;
  highlight: Highlight;
}

export interface LastMove {
  mover: 0 | 1;
  action: number;
  sownPath: number[]; // board indices touched, in sowing order
  capture: WireCapture | null;
  extraTurn: boolean;
}

export interface UiGameView {
  apiBaseUrl: string;
  level: number;
  humanPits: PitView[]; // ordinal order, drawn left to right
  botPits: PitView[]; // ordinal order, drawn right to left
  humanStore: number;
  botStore: number;
  scores: [number, number];
  turn: 'human' | 'bot' | 'over';
  selectable: number[];
  extraTurnBadge: boolean;
  lastMove: LastMove | null;
  banner: { kind: 'ongoing' | 'winner' | 'tie'; text: string };
  toast: string | null;
  offline: boolean; // network trouble: show retry, block moves
  busy: boolean; // a request is in flight: disable inputs
}

// Sowing path for highlights only; the server already applied the move.
export function sownPath(before: WireState, mover: 0 | 1, action: number): number[] {
  const n = before.config.pits;
  const start = mover === HUMAN ? action : n + 1 + action;
  const skip = mover === HUMAN ? 2 * n + 1 : n; // opponent's store
  let stones = before.board[start];
  let position = start;
  const path: number[] = [];
  while (stones > 0) {
    position = (position + 1) % (2 * n + 2);
    if (position === skip) {
      continue;
    }
    path.push(position);
    stones -= 1;
  }
  return path;
}

export interface ViewContext {
  apiBaseUrl: string;
  level: number;
  legal: number[];
  lastMove?: LastMove | null;
  toast?: string | null;
  offline?: boolean;
  busy?: boolean;
}

// What to show before any game exists (or when creating one failed).
export function emptyView(context: ViewContext): UiGameView {
  return {
    apiBaseUrl: context.apiBaseUrl,
    level: context.level,
    humanPits: [],
    botPits: [],
    humanStore: 0,
    botStore: 0,
    scores: [0, 0],
    turn: 'over',
    selectable: [],
    extraTurnBadge: false,
    lastMove: null,
    banner: { kind: 'ongoing', text: 'No game yet' },
    toast: context.toast ?? null,
    offline: context.offline ?? false,
    busy: context.busy ?? false,
  };
}

export function buildView(state: WireState, context: ViewContext): UiGameView {
  const n = state.config.pits;
  const humanTurn = !state.is_over && state.current_player === HUMAN;
  const selectable = humanTurn ? [...context.legal].sort((a, b) => a - b) : [];
  const lastMove = context.lastMove ?? null;

  const highlightFor = (boardIndex: number): Highlight => {
    if (!lastMove) return 'none';
    if (
      lastMove.capture &&
      (boardIndex === lastMove.capture.landing_pit_index ||
        boardIndex === lastMove.capture.opposite_pit_index)
    ) {
      return 'capture';
    }
    return lastMove.sownPath.includes(boardIndex) ? 'sown' : 'none';
  };

  const humanPits: PitView[] = [];
  const botPits: PitView[] = [];
  for (let ordinal = 0; ordinal < n; ordinal++) {
    humanPits.push({
      ordinal,
      count: state.board[ordinal],
      selectable: selectable.includes(ordinal),
      highlight: highlightFor(ordinal),
    });
    botPits.push({
      ordinal,
      count: state.board[n + 1 + ordinal],
      selectable: false,
      highlight: highlightFor(n + 1 + ordinal),
    });
  }

  let banner: UiGameView['banner'];
  if (!state.is_over) {
    banner = { kind: 'ongoing', text: humanTurn ? 'Your turn' : 'Bot is thinking' };
  } else if (state.winner === 'tie') {
    banner = { kind: 'tie', text: `Tie game, ${state.scores[0]} each` };
  } else {
    const text =
      state.winner === HUMAN
        ? `You win ${state.scores[0]} to ${state.scores[1]}`
        : `Bot wins ${state.scores[1]} to ${state.scores[0]}`;
    banner = { kind: 'winner', text };
  }

  return {
    apiBaseUrl: context.apiBaseUrl,
    level: context.level,
    humanPits,
    botPits,
    humanStore: state.board[n],
    botStore: state.board[2 * n + 1],
    scores: state.scores,
    turn: state.is_over ? 'over' : humanTurn ? 'human' : 'bot',
    selectable,
    extraTurnBadge: lastMove?.extraTurn ?? false,
    lastMove,
    banner,
    toast: context.toast ?? null,
    offline: context.offline ?? false,
    busy: context.busy ?? false,
  };
}
