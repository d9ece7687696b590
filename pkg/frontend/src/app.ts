/** Browser wiring: create-game form, board rendering, click-to-move.
 *
 * The DOM here is a projection of the latest snapshot; every mutation goes
 * through the API client and re-renders from the server's reply (single
 * in-flight mutation per session).
 */

import { ApiError, GameClient } from './api.js';
import { layout } from './layout.js';
import type { MoveDoc, Snapshot } from './types.js';
import {
  exportMoveLog,
  isHumanTurn,
  outcomeBanner,
  passMove,
  phaseBanner,
  placementCounts,
  vertexBadges,
  canPass,
} from './view.js';

const OWNER_COLORS = { lata: '#2e7d32', raj: '#c62828' } as const;

export class App {
  private snapshot: Snapshot | null = null;
  private pending = false;
  private hint: MoveDoc | null = null;

  constructor(private client: GameClient, private root: HTMLElement,
              private doc: Document) {}

  mount(): void {
    this.root.replaceChildren(this.buildForm());
  }

  private el<K extends keyof HTMLElementTagNameMap>(
    tag: K, text?: string, className?: string): HTMLElementTagNameMap[K] {
    const node = this.doc.createElement(tag);
    if (text !== undefined) node.textContent = text;
    if (className) node.className = className;
    return node;
  }

  private buildForm(): HTMLElement {
    const form = this.el('div', undefined, 'setup');
    form.appendChild(this.el('h1', 'Aggression'));
    const family = this.el('select');
    family.id = 'family';
    for (const name of ['matching', 'cycle', 'path', 'complete', 'star']) {
      const option = this.el('option', name);
      option.setAttribute('value', name);
      family.appendChild(option);
    }
    const size = this.el('input') as HTMLInputElement;
    size.id = 'size';
    size.setAttribute('type', 'number');
    size.value = '3';
    const troops = this.el('input') as HTMLInputElement;
    troops.id = 'troops';
    troops.setAttribute('type', 'number');
    troops.value = '9';
    const side = this.el('select');
    side.id = 'side';
    for (const name of ['lata', 'raj']) {
      const option = this.el('option', name);
      option.setAttribute('value', name);
      side.appendChild(option);
    }
    const opponent = this.el('input') as HTMLInputElement;
    opponent.id = 'opponent';
    opponent.value = 'raj_three_edges';
    const start = this.el('button', 'start game');
    start.id = 'start';
    const error = this.el('p', '', 'error');
    start.addEventListener('click', () => {
      void this.createGame({
        family: `${(family as HTMLSelectElement).value}:${size.value}`,
        troops: Number(troops.value),
        human: (side as HTMLSelectElement).value as 'lata' | 'raj',
        opponent: opponent.value || 'solver',
      }, error);
    });
    for (const [label, node] of [['family', family], ['size', size],
                                 ['troops', troops], ['side', side],
                                 ['opponent', opponent]] as const) {
      const row = this.el('label', `${label}: `);
      row.appendChild(node);
      form.appendChild(row);
    }
    form.appendChild(start);
    form.appendChild(error);
    return form;
  }

  private async createGame(request: Parameters<GameClient['createGame']>[0],
                           error: HTMLElement): Promise<void> {
    try {
      this.snapshot = await this.client.createGame(request);
      this.render();
    } catch (exc) {
      error.textContent = exc instanceof ApiError ? exc.message : String(exc);
    }
  }

  private async mutate(action: () => Promise<Snapshot>): Promise<void> {
    if (this.pending || !this.snapshot) return;
    this.pending = true;
    try {
      this.snapshot = await action();
      this.hint = null;
      this.render();
    } catch (exc) {
      if (exc instanceof ApiError && exc.status === 409) {
        this.renderError(exc.message);  // the violated rule, by name
      } else if (exc instanceof ApiError) {
        this.renderError(`${exc.status}: ${exc.message}`);
      } else {
        this.snapshot = await this.client.getGame(this.snapshot.id);  // refetch stale
        this.render();
      }
    } finally {
      this.pending = false;
    }
  }

  private renderError(message: string): void {
    const banner = this.doc.getElementById('error-banner');
    if (banner) banner.textContent = message;
  }

  render(): void {
    const snap = this.snapshot;
    if (!snap) return;
    const page = this.el('div', undefined, 'game');
    const banner = this.el('h2', phaseBanner(snap), 'phase-banner');
    banner.id = 'phase-banner';
    page.appendChild(banner);
    if (snap.phase === 'terminal') {
      const finalBanner = this.el('h2', outcomeBanner(snap), 'outcome-banner');
      finalBanner.id = 'outcome-banner';
      page.appendChild(finalBanner);
    }
    const errorBanner = this.el('p', '', 'error');
    errorBanner.id = 'error-banner';
    page.appendChild(errorBanner);
    page.appendChild(this.buildBoard(snap));
    page.appendChild(this.buildControls(snap));
    this.root.replaceChildren(page);
  }

  private buildBoard(snap: Snapshot): HTMLElement {
    const board = this.el('div', undefined, 'board');
    board.id = 'board';
    const points = layout(snap.graph);
    const badges = vertexBadges(snap);
    for (const badge of badges) {
      const point = points[badge.vertex];
      const cell = this.el('button', undefined, 'vertex');
      cell.id = `vertex-${badge.vertex}`;
      cell.setAttribute('data-vertex', String(badge.vertex));
      cell.setAttribute('data-vulnerable', String(badge.vulnerable));
      cell.setAttribute('data-owner', badge.owner ?? 'none');
      cell.setAttribute('style',
        `left:${Math.round(point.x)}px;top:${Math.round(point.y)}px;` +
        (badge.owner ? `background:${OWNER_COLORS[badge.owner]};` : '') +
        (badge.vulnerable ? 'outline:3px dashed orange;' : '') +
        (this.hint?.vertex === badge.vertex ? 'box-shadow:0 0 0 4px #1565c0;' : ''));
      cell.textContent = badge.troops > 0 ? String(badge.troops) : '';
      if (badge.clickable) {
        cell.setAttribute('data-clickable', 'true');
        cell.addEventListener('click', () => this.onVertexClick(snap, badge.vertex));
      }
      board.appendChild(cell);
    }
    return board;
  }

  private onVertexClick(snap: Snapshot, vertex: number): void {
    if (snap.phase === 'attack') {
      void this.mutate(() => this.client.postMove(snap.id, { type: 'attack', vertex }));
      return;
    }
    this.openCountSelector(snap, vertex);
  }

  private openCountSelector(snap: Snapshot, vertex: number): void {
    const existing = this.doc.getElementById('count-selector');
    existing?.remove();
    const selector = this.el('div', undefined, 'count-selector');
    selector.id = 'count-selector';
    selector.appendChild(this.el('span', `troops on ${vertex}: `));
    for (const count of placementCounts(snap)) {
      const button = this.el('button', String(count));
      button.setAttribute('data-count', String(count));
      button.addEventListener('click', () => {
        void this.mutate(() => this.client.postMove(snap.id,
          { type: 'place', vertex, count }));
      });
      selector.appendChild(button);
    }
    this.root.appendChild(selector);
  }

  private buildControls(snap: Snapshot): HTMLElement {
    const controls = this.el('div', undefined, 'controls');
    if (canPass(snap)) {
      const pass = this.el('button', 'pass');
      pass.id = 'pass';
      pass.addEventListener('click', () => {
        void this.mutate(() => this.client.postMove(snap.id, passMove(snap)));
      });
      controls.appendChild(pass);
    }
    if (snap.phase !== 'terminal') {
      const hint = this.el('button', 'hint');
      hint.id = 'hint';
      hint.addEventListener('click', () => {
        void (async () => {
          this.hint = await this.client.getHint(snap.id);
          this.render();
        })();
      });
      controls.appendChild(hint);
    }
    const exportLog = this.el('button', 'export move log');
    exportLog.id = 'export-log';
    exportLog.addEventListener('click', () => {
      const area = this.el('textarea');
      area.id = 'move-log-export';
      area.value = exportMoveLog(snap);
      controls.appendChild(area);
    });
    controls.appendChild(exportLog);
    return controls;
  }
}

export function start(window: Window & typeof globalThis, baseUrl = ''): App {
  const client = new GameClient(baseUrl || window.location.origin,
                                window.fetch.bind(window));
  const root = window.document.getElementById('app');
  if (!root) throw new Error('missing #app mount point');
  const app = new App(client, root as HTMLElement, window.document);
  app.mount();
  return app;
}
