/** Pure view-model: everything the board shows is computed from the latest
 * server snapshot and nothing else (no local rules). */

import type { MoveDoc, OutcomeDoc, PlayerName, Snapshot } from './types.js';

export interface VertexBadge {
  vertex: number;
  owner: PlayerName | null;
  troops: number;
  vulnerable: boolean;
  /** placement: an empty vertex the human may select a count for;
   *  attack: a highlighted enemy vertex the human may strike. */
  clickable: boolean;
}

export function isHumanTurn(snap: Snapshot): boolean {
  return snap.phase !== 'terminal' && snap.to_move === snap.human;
}

export function remainingBudget(snap: Snapshot): number {
  return snap.budgets[snap.human];
}

export function maxPlacement(snap: Snapshot): number {
  const cap = snap.config.placement_cap;
  const budget = remainingBudget(snap);
  return cap === null || cap === undefined ? budget : Math.min(cap, budget);
}

export function vertexBadges(snap: Snapshot): VertexBadge[] {
  const marks = new Set<number>([...snap.vulnerable.lata, ...snap.vulnerable.raj]);
  const placeTargets = new Set<number>();
  const attackTargets = new Set<number>();
  if (isHumanTurn(snap)) {
    for (const move of snap.legal_moves) {
      if (move.type === 'place' && move.vertex !== undefined) placeTargets.add(move.vertex);
      if (move.type === 'attack' && move.vertex !== undefined) attackTargets.add(move.vertex);
    }
  }
  const badges: VertexBadge[] = [];
  for (let v = 0; v < snap.graph.vertices; v++) {
    const owner = snap.owners[String(v)] ?? null;
    badges.push({
      vertex: v,
      owner,
      troops: snap.troops[String(v)] ?? 0,
      vulnerable: marks.has(v),
      clickable: snap.phase === 'placement' ? placeTargets.has(v) : attackTargets.has(v),
    });
  }
  return badges;
}

export function phaseBanner(snap: Snapshot): string {
  if (snap.phase === 'terminal') return outcomeBanner(snap);
  const turn = isHumanTurn(snap) ? 'your turn' : `waiting for ${snap.to_move}`;
  return `${snap.phase} phase — ${turn} — budgets L:${snap.budgets.lata} R:${snap.budgets.raj}`;
}

/** The final banner; the e2e harness compares this text against a CLI
 * replay of the same move log. */
export function bannerFromOutcome(out: OutcomeDoc): string {
  const score = `territories ${out.territories.lata}-${out.territories.raj}, ` +
    `troops ${out.troops.lata}-${out.troops.raj}`;
  const tag = out.strong_win ? ' (strong win)' : '';
  if (out.result === 'Draw') return `Draw - ${score}`;
  const winner = out.result === 'LataWin' ? 'Lata wins' : 'Raj wins';
  return `${winner}${tag} - ${score}`;
}

export function outcomeBanner(snap: Snapshot): string {
  if (!snap.outcome) return 'game in progress';
  return bannerFromOutcome(snap.outcome);
}

export function passMove(snap: Snapshot): MoveDoc {
  return { type: snap.phase === 'placement' ? 'pass_placement' : 'pass_attack' };
}

export function canPass(snap: Snapshot): boolean {
  return isHumanTurn(snap) &&
    snap.legal_moves.some((m) => m.type === 'pass_placement' || m.type === 'pass_attack');
}

export function exportMoveLog(snap: Snapshot): string {
  return JSON.stringify(snap.move_log, null, 2) + '\n';
}

/** Count choices offered by the placement selector: 1..max, never 0. */
export function placementCounts(snap: Snapshot): number[] {
  const max = maxPlacement(snap);
  return Array.from({ length: Math.max(max, 0) }, (_, i) => i + 1);
}
