// Game flow: reacts to clicks, calls the API, tells the renderer what to
// show. The server state is authoritative; the controller never advances
// a board locally.

import { buildView, emptyView, HUMAN, BOT, sownPath } from './view.js';
import type { LastMove, UiGameView } from './view.js';
import { ApiClient, ApiError, NetworkError } from './wire.js';
import type { WireOutcome, WireState } from './wire.js';

export interface Renderer {
  render(view: UiGameView): void;
  // one call per bot action, in order; resolves when the move has been shown
  animateBotMove(action: number, outcome: WireOutcome, state: WireState): Promise<void>;
}

export class GameController {
  private state: WireState | null = null;
  private legal: number[] = [];
  private level = 1;
  private lastMove: LastMove | null = null;
  private toast: string | null = null;
  private offline = false;
  private busy = false;
  view: UiGameView | null = null;

  constructor(
    private readonly api: ApiClient,
    private readonly renderer: Renderer,
  ) {}

  get gameId(): string | null {
    return this.state?.game_id ?? null;
  }

  private async fetchLegal(): Promise<void> {
    const state = this.state!;
    this.legal = state.is_over || state.current_player !== HUMAN
      ? []
      : await this.api.legalActions(state.game_id);
  }

  private show(): UiGameView {
    const context = {
      apiBaseUrl: this.api.baseUrl,
      level: this.level,
      legal: this.legal,
      lastMove: this.lastMove,
      toast: this.toast,
      offline: this.offline,
      busy: this.busy,
    };
    this.view = this.state ? buildView(this.state, context) : emptyView(context);
    this.renderer.render(this.view);
    return this.view;
  }

  async newGame(level: number): Promise<UiGameView | null> {
    if (this.busy) return this.view;
    this.busy = true;
    this.toast = null;
    this.lastMove = null;
    try {
      const created = await this.api.createGame(level);
      this.level = level;
      this.state = created.state;
      this.offline = false;
      await this.fetchLegal();
    } catch (err) {
      return this.fail(err);
    } finally {
      this.busy = false;
    }
    return this.show();
  }

  // Click on one of the human's pits. Ignored unless that pit is
  // currently selectable, so no request ever leaves for an illegal move.
  async clickPit(ordinal: number): Promise<UiGameView | null> {
    if (this.busy || this.offline || !this.state || !this.view) return this.view;
    if (!this.view.selectable.includes(ordinal)) return this.view;

    this.busy = true;
    this.toast = null;
    this.show(); // inputs go dark while the request runs
    try {
      const before = this.state;
      const reply = await this.api.step(before.game_id, HUMAN, ordinal);
      this.state = reply.state;
      this.lastMove = {
        mover: HUMAN,
        action: ordinal,
        sownPath: sownPath(before, HUMAN, ordinal),
        capture: reply.outcome.capture,
        extraTurn: reply.outcome.extra_turn,
      };
      await this.runBotReplies();
      await this.fetchLegal();
    } catch (err) {
      return this.fail(err);
    } finally {
      this.busy = false;
    }
    return this.show();
  }

  // Let the bot play out its turn, including extra-turn chains.
  private async runBotReplies(): Promise<void> {
    while (this.state && !this.state.is_over && this.state.current_player === BOT) {
      const before = this.state;
      const reply = await this.api.botStep(before.game_id);
      this.state = reply.state;
      this.lastMove = {
        mover: BOT,
        action: reply.action,
        sownPath: sownPath(before, BOT, reply.action),
        capture: reply.outcome.capture,
        extraTurn: reply.outcome.extra_turn,
      };
      await this.renderer.animateBotMove(reply.action, reply.outcome, reply.state);
    }
  }

  // Pull the authoritative state, e.g. after an error or to reconcile.
  async refresh(): Promise<UiGameView | null> {
    if (!this.state) return this.view;
    try {
      this.state = await this.api.state(this.state.game_id);
      await this.fetchLegal();
      this.offline = false;
    } catch (err) {
      return this.fail(err);
    }
    return this.show();
  }

  private async fail(err: unknown): Promise<UiGameView | null> {
    this.busy = false;
    if (err instanceof NetworkError) {
      // leave the board as rendered; moves stay blocked until a refresh works
      this.offline = true;
      return this.show();
    }
    if (err instanceof ApiError) {
      // e.g. a stale click raced the server: surface it, then resync
      this.toast = err.message;
      if (this.state) {
        try {
          this.state = await this.api.state(this.state.game_id);
          await this.fetchLegal();
        } catch {
          this.offline = true;
        }
      }
      return this.show();
    }
    throw err;
  }
}
