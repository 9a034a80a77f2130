// Thin DOM layer: builds the static skeleton once, then repaints counts,
// classes, and text from each UiGameView. No game logic lives here.

import type { Renderer } from './controller.js';
import type { PitView, UiGameView } from './view.js';
import type { WireOutcome, WireState } from './wire.js';

const LEVEL_NAMES: Record<number, string> = { 1: 'Easy', 2: 'Medium', 3: 'Hard' };

export interface DomCallbacks {
  onPitClick(ordinal: number): void;
  onNewGame(level: number): void;
  onRetry(): void;
}

function sleep(ms: number): Promise<void> {
  return new Promise((resolve) => setTimeout(resolve, ms));
}

export class DomRenderer implements Renderer {
  private readonly root: HTMLElement;
  private readonly callbacks: DomCallbacks;
  private humanButtons: HTMLButtonElement[] = [];
  private botCells: HTMLElement[] = [];
  private readonly botMoveDelayMs: number;

  constructor(root: HTMLElement, callbacks: DomCallbacks, botMoveDelayMs = 350) {
    this.root = root;
    this.callbacks = callbacks;
    this.botMoveDelayMs = botMoveDelayMs;
    this.root.innerHTML = `
      <div class="mancala">
        <div class="controls">
          <label>Opponent
            <select data-role="level">
              <option value="1">Easy</option>
              <option value="2">Medium</option>
              <option value="3">Hard</option>
            </select>
          </label>
          <button data-role="new-game">New game</button>
          <span data-role="banner" class="banner"></span>
          <span data-role="badge" class="badge" hidden>extra turn</span>
        </div>
        <div class="board">
          <div class="store" data-role="bot-store"></div>
          <div class="rows">
            <div class="row row-reverse" data-role="bot-row"></div>
            <div class="row" data-role="human-row"></div>
          </div>
          <div class="store" data-role="human-store"></div>
        </div>
        <div data-role="scores" class="scores"></div>
        <div data-role="toast" class="toast" hidden></div>
        <div data-role="offline" class="offline" hidden>
          Connection lost.
          <button data-role="retry">Retry</button>
        </div>
      </div>`;
    this.part('new-game').addEventListener('click', () => {
      const level = Number((this.part('level') as HTMLSelectElement).value);
      this.callbacks.onNewGame(level);
    });
    this.part('retry').addEventListener('click', () => this.callbacks.onRetry());
  }

  private part(role: string): HTMLElement {
    return this.root.querySelector(`[data-role="${role}"]`) as HTMLElement;
  }

  private ensurePitCells(view: UiGameView): void {
    if (this.humanButtons.length === view.humanPits.length) return;
    const humanRow = this.part('human-row');
    const botRow = this.part('bot-row');
    humanRow.innerHTML = '';
    botRow.innerHTML = '';
    this.humanButtons = view.humanPits.map((pit) => {
      const button = document.createElement('button');
      button.className = 'pit';
      button.dataset.ordinal = String(pit.ordinal);
      button.addEventListener('click', () => this.callbacks.onPitClick(pit.ordinal));
      humanRow.appendChild(button);
      return button;
    });
    this.botCells = view.botPits.map((pit) => {
      const cell = document.createElement('div');
      cell.className = 'pit pit-bot';
      cell.dataset.ordinal = String(pit.ordinal);
      botRow.appendChild(cell);
      return cell;
    });
  }

  private paintPit(cell: HTMLElement, pit: PitView, enabled: boolean): void {
    cell.textContent = String(pit.count);
    cell.classList.toggle('sown', pit.highlight === 'sown');
    cell.classList.toggle('capture', pit.highlight === 'capture');
    if (cell instanceof HTMLButtonElement) {
      cell.disabled = !enabled;
    }
  }

  render(view: UiGameView): void {
    this.ensurePitCells(view);
    const inputsLive = !view.busy && !view.offline;
    view.humanPits.forEach((pit, i) =>
      this.paintPit(this.humanButtons[i], pit, pit.selectable && inputsLive),
    );
    view.botPits.forEach((pit, i) => this.paintPit(this.botCells[i], pit, false));
    this.part('human-store').textContent = String(view.humanStore);
    this.part('bot-store').textContent = String(view.botStore);
    this.part('scores').textContent = `You ${view.scores[0]} : ${view.scores[1]} Bot`;

    const banner = this.part('banner');
    banner.textContent = view.banner.text;
    banner.className = `banner banner-${view.banner.kind}`;

    this.part('badge').hidden = !view.extraTurnBadge;
    const toast = this.part('toast');
    toast.hidden = view.toast === null;
    toast.textContent = view.toast ?? '';
    this.part('offline').hidden = !view.offline;
    (this.part('level') as HTMLSelectElement).value = String(view.level);
    (this.part('new-game') as HTMLButtonElement).disabled = view.busy;
    this.root.title = `Mancala vs ${LEVEL_NAMES[view.level] ?? view.level}`;
  }

  async animateBotMove(action: number, outcome: WireOutcome, state: WireState): Promise<void> {
    // flash the pit the bot played, then let the counts settle
    const cell = this.botCells[action];
    if (cell) {
      cell.classList.add('playing');
    }
    const n = state.config.pits;
    this.botCells.forEach((c, i) => (c.textContent = String(state.board[n + 1 + i])));
    this.humanButtons.forEach((b, i) => (b.textContent = String(state.board[i])));
    this.part('bot-store').textContent = String(state.board[2 * n + 1]);
    this.part('human-store').textContent = String(state.board[n]);
    await sleep(this.botMoveDelayMs);
    if (cell) {
      cell.classList.remove('playing');
    }
  }
}
