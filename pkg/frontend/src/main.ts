import { GameController } from './controller.js';
import { DomRenderer } from './dom.js';
import { ApiClient } from './wire.js';

export function boot(root: HTMLElement, apiBaseUrl: string): GameController {
  const api = new ApiClient(apiBaseUrl);
  // the renderer needs the controller for its callbacks and vice versa,
  // so wire them through a late binding
  let controller: GameController;
  const renderer = new DomRenderer(root, {
    onPitClick: (ordinal) => void controller.clickPit(ordinal),
    onNewGame: (level) => void controller.newGame(level),
    onRetry: () => void controller.refresh(),
  });
  controller = new GameController(api, renderer);
  void controller.newGame(1);
  return controller;
}

declare global {
  interface Window {
    gapoera?: GameController;
  }
}

if (typeof document !== 'undefined' && document.getElementById('app')) {
  // ?api=http://host:port overrides the default same-origin base
  const base = new URLSearchParams(window.location.search).get('api') ?? '';
  window.gapoera = boot(document.getElementById('app')!, base);
}
