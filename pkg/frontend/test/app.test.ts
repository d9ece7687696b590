// @vitest-environment jsdom
import { describe, expect, it } from 'vitest';

import { App } from '../dist/app.js';
import { GameClient } from '../dist/api.js';
import type { Snapshot } from '../dist/types.js';

function baseSnapshot(): Snapshot {
  return {
    id: 'game1',
    human: 'lata',
    opponent: 'none',
    graph: { vertices: 2, edges: [[0, 1]] },
    config: { attack_policy: 'mandatory', placement_cap: null },
    phase: 'placement',
    to_move: 'lata',
    first_passer: null,
    owners: {},
    troops: {},
    budgets: { lata: 2, raj: 2 },
    vulnerable: { lata: [], raj: [] },
    legal_moves: [
      { type: 'place', vertex: 0, count: 1 }, { type: 'place', vertex: 0, count: 2 },
      { type: 'place', vertex: 1, count: 1 }, { type: 'place', vertex: 1, count: 2 },
    ],
    move_log: [],
    outcome: null,
  };
}

function fakeFetch(handler: (url: string, init?: RequestInit) => unknown): typeof fetch {
  return (async (url: any, init?: any) => {
    const body = handler(String(url), init);
    return {
      ok: true,
      status: 200,
      statusText: 'OK',
      json: async () => body,
    } as Response;
  }) as typeof fetch;
}

async function flush(): Promise<void> {
  for (let i = 0; i < 5; i++) await Promise.resolve();
}

describe('app flow against a canned server', () => {
  it('renders the form, creates a game and shows clickable vertices', async () => {
    const calls: string[] = [];
    const client = new GameClient('http://test', fakeFetch((url, init) => {
      calls.push(`${init?.method ?? 'GET'} ${url}`);
      return baseSnapshot();
    }));
    const root = document.createElement('div');
    document.body.appendChild(root);
    const app = new App(client, root, document);
    app.mount();
    expect(document.getElementById('family')).toBeTruthy();
    (document.getElementById('start') as HTMLButtonElement).click();
    await flush();
    expect(calls[0]).toBe('POST http://test/v1/games');
    const cell = document.getElementById('vertex-0') as HTMLButtonElement;
    expect(cell.getAttribute('data-clickable')).toBe('true');
    // Clicking an empty vertex opens the bounded count selector: 1..2.
    cell.click();
    await flush();
    const selector = document.getElementById('count-selector')!;
    const counts = Array.from(selector.querySelectorAll('button'))
      .map((b) => b.getAttribute('data-count'));
    expect(counts).toEqual(['1', '2']);
    root.remove();
  });

  it('shows the named rule violation on a 409', async () => {
    let created = false;
    const client = new GameClient('http://test', (async (url: any, init?: any) => {
      if (!created) {
        created = true;
        return { ok: true, status: 201, statusText: 'Created',
                 json: async () => baseSnapshot() } as Response;
      }
      return { ok: false, status: 409, statusText: 'Conflict',
               json: async () => ({ error: 'vertex 0 is not empty' }) } as Response;
    }) as typeof fetch);
    const root = document.createElement('div');
    document.body.appendChild(root);
    const app = new App(client, root, document);
    app.mount();
    (document.getElementById('start') as HTMLButtonElement).click();
    await flush();
    (document.getElementById('vertex-0') as HTMLButtonElement).click();
    await flush();
    const button = document.querySelector('#count-selector button') as HTMLButtonElement;
    button.click();
    await flush();
    expect(document.getElementById('error-banner')!.textContent)
      .toBe('vertex 0 is not empty');
    root.remove();
  });

  it('renders outcome banner with strong-win tag at terminal snapshots', async () => {
    const terminal: Snapshot = {
      ...baseSnapshot(),
      phase: 'terminal',
      legal_moves: [],
      outcome: {
        territories: { lata: 0, raj: 2 },
        troops: { lata: 0, raj: 4 },
        result: 'RajWin',
        strong_win: true,
      },
    };
    const client = new GameClient('http://test', fakeFetch(() => terminal));
    const root = document.createElement('div');
    document.body.appendChild(root);
    const app = new App(client, root, document);
    app.mount();
    (document.getElementById('start') as HTMLButtonElement).click();
    await flush();
    expect(document.getElementById('outcome-banner')!.textContent)
      .toBe('Raj wins (strong win) - territories 0-2, troops 0-4');
    root.remove();
  });
});
