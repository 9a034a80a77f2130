// Shared test plumbing: a real service subprocess and a renderer that
// records everything instead of touching a DOM.

import { spawn } from 'node:child_process';
import type { Renderer } from '../src/controller.js';
import type { UiGameView } from '../src/view.js';
import type { WireOutcome, WireState } from '../src/wire.js';

export interface LiveServer {
  baseUrl: string;
  stop(): Promise<number | null>;
}

export async function startServer(): Promise<LiveServer> {
  const proc = spawn('python3', ['-m', 'gapoera', 'serve', '--port', '0'], {
    stdio: ['ignore', 'pipe', 'pipe'],
  });
  const baseUrl = await new Promise<string>((resolve, reject) => {
    let seen = '';
    const timer = setTimeout(() => reject(new Error('server start timeout')), 30_000);
    proc.stdout.on('data', (chunk: Buffer) => {
      seen += chunk.toString();
      const match = seen.match(/listening on (http:\/\/[\d.]+:\d+)/);
      if (match) {
        clearTimeout(timer);
        resolve(match[1]);
      }
    });
    proc.on('exit', (code) => {
      clearTimeout(timer);
      reject(new Error(`server exited before binding: ${code}`));
    });
  });
  for (let attempt = 0; attempt < 100; attempt++) {
    try {
      await fetch(`${baseUrl}/v1/games/probe/state`);
      break;
    } catch {
      await new Promise((r) => setTimeout(r, 50));
    }
  }
  return {
    baseUrl,
    stop: () =>
      new Promise((resolve) => {
        proc.on('exit', (code) => resolve(code));
        proc.kill('SIGINT');
      }),
  };
}

export class RecordingRenderer implements Renderer {
  views: UiGameView[] = [];
  botMoves: { action: number; outcome: WireOutcome; state: WireState }[] = [];

  render(view: UiGameView): void {
    this.views.push(structuredClone(view));
  }

  async animateBotMove(action: number, outcome: WireOutcome, state: WireState): Promise<void> {
    this.botMoves.push({ action, outcome, state });
  }
}
