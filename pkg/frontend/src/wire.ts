// Types and transport for the /v1 JSON protocol. The server is the only
// authority on rules; this file just moves its documents around.

export interface WireConfig {
  pits: number;
  stones: number;
}

export interface WireState {
  game_id: string;
  game: string;
  config: WireConfig;
  board: number[];
  current_player: 0 | 1;
  turn_index: number;
  is_over: boolean;
  winner: 0 | 1 | 'tie' | null;
  scores: [number, number];
  sim_depth: number;
}

export interface WireCapture {
  landing_pit_index: number;
  opposite_pit_index: number;
  stones_captured: number;
}

export interface WireTerminal {
  winner: 0 | 1 | 'tie';
  final_scores: [number, number];
  swept: [number, number];
}

export interface WireOutcome {
  reward: number;
  extra_turn: boolean;
  capture: WireCapture | null;
  terminal: WireTerminal | null;
}

export interface StepReply {
  state: WireState;
  outcome: WireOutcome;
}

export interface BotStepReply {
  action: number;
  state: WireState;
  outcome: WireOutcome;
}

export class ApiError extends Error {
  constructor(
    readonly code: string,
    message: string,
    readonly status: number,
  ) {
    super(message);
  }
}

export class NetworkError extends Error {}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    let response: Response;
    try {
      response = await fetch(this.baseUrl + path, {
        method,
        headers: body === undefined ? undefined : { 'content-type': 'application/json' },
        body: body === undefined ? undefined : JSON.stringify(body),
      });
    } catch (err) {
      throw new NetworkError(`${method} ${path}: ${String(err)}`);
    }
    if (!response.ok) {
      let code = 'bad_request';
      let message = `unexpected ${response.status}`;
      try {
        const doc = await response.json();
        code = doc.error;
        message = doc.message;
      } catch {
        // non-JSON error body; keep the fallback message
      }
      throw new ApiError(code, message, response.status);
    }
    return (await response.json()) as T;
  }

  createGame(level: number): Promise<{ game_id: string; state: WireState }> {
    return this.request('POST', '/v1/games', { game: 'mancala', bot_level: level });
  }

  state(gameId: string): Promise<WireState> {
    return this.request('GET', `/v1/games/${gameId}/state`);
  }

  async legalActions(gameId: string): Promise<number[]> {
    const doc = await this.request<{ actions: number[] }>(
      'GET',
      `/v1/games/${gameId}/legal_actions`,
    );
    return doc.actions;
  }

  step(gameId: string, player: 0 | 1, action: number): Promise<StepReply> {
    return this.request('POST', `/v1/games/${gameId}/step`, { player, action });
  }

  botStep(gameId: string): Promise<BotStepReply> {
    return this.request('POST', `/v1/games/${gameId}/bot_step`, {});
  }
}
