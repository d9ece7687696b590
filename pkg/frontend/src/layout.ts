/** 2D positions for board vertices.
 *
 * Cycles and paths sit on a circle/arc, matchings in paired columns, and
 * anything else gets a few rounds of force relaxation seeded on a circle.
 */

import type { GraphDoc } from './types.js';

export interface Point {
  x: number;
  y: number;
}

function degreeMap(graph: GraphDoc): number[] {
  const degree = new Array<number>(graph.vertices).fill(0);
  for (const [u, v] of graph.edges) {
    degree[u] += 1;
    degree[v] += 1;
  }
  return degree;
}

export function isMatching(graph: GraphDoc): boolean {
  return graph.edges.length > 0 && degreeMap(graph).every((d) => d <= 1);
}

export function isCycle(graph: GraphDoc): boolean {
  const n = graph.vertices;
  if (n < 3 || graph.edges.length !== n) return false;
  const expected = new Set<string>();
  for (let i = 0; i < n; i++) {
    const a = Math.min(i, (i + 1) % n);
    const b = Math.max(i, (i + 1) % n);
    expected.add(`${a}-${b}`);
  }
  return graph.edges.every(([u, v]) => expected.has(`${Math.min(u, v)}-${Math.max(u, v)}`));
}

export function isPath(graph: GraphDoc): boolean {
  const n = graph.vertices;
  if (graph.edges.length !== n - 1) return false;
  return graph.edges.every(([u, v]) => Math.abs(u - v) === 1);
}

function circle(n: number, width: number, height: number): Point[] {
  const cx = width / 2;
  const cy = height / 2;
  const r = Math.min(width, height) * 0.38;
  return Array.from({ length: n }, (_, i) => {
    const angle = (2 * Math.PI * i) / n - Math.PI / 2;
    return { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) };
  });
}

export function layout(graph: GraphDoc, width = 640, height = 420): Point[] {
  const n = graph.vertices;
  if (n === 0) return [];
  if (n === 1) return [{ x: width / 2, y: height / 2 }];
  if (isPath(graph)) {
    const step = width / (n + 1);
    return Array.from({ length: n }, (_, i) => ({ x: step * (i + 1), y: height / 2 }));
  }
  if (isCycle(graph)) {
    return circle(n, width, height);
  }
  if (isMatching(graph)) {
    // Edge i joins 2i and 2i+1: even ids in the left column, partners right.
    const pairs = Math.ceil(n / 2);
    const step = height / (pairs + 1);
    return Array.from({ length: n }, (_, v) => ({
      x: v % 2 === 0 ? width * 0.33 : width * 0.67,
      y: step * (Math.floor(v / 2) + 1),
    }));
  }
  // Generic: circle seed plus a little force relaxation.
  const points = circle(n, width, height);
  for (let round = 0; round < 60; round++) {
    const force = points.map(() => ({ x: 0, y: 0 }));
    for (let a = 0; a < n; a++) {
      for (let b = a + 1; b < n; b++) {
        const dx = points[b].x - points[a].x;
        const dy = points[b].y - points[a].y;
        const d2 = Math.max(dx * dx + dy * dy, 1);
        const push = 1800 / d2;
        const d = Math.sqrt(d2);
        force[a].x -= (dx / d) * push;
        force[a].y -= (dy / d) * push;
        force[b].x += (dx / d) * push;
        force[b].y += (dy / d) * push;
      }
    }
    for (const [u, v] of graph.edges) {
      const dx = points[v].x - points[u].x;
      const dy = points[v].y - points[u].y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = (d - 110) * 0.02;
      force[u].x += (dx / d) * pull;
      force[u].y += (dy / d) * pull;
      force[v].x -= (dx / d) * pull;
      force[v].y -= (dy / d) * pull;
    }
    for (let v = 0; v < n; v++) {
      points[v].x = Math.min(width - 24, Math.max(24, points[v].x + force[v].x));
      points[v].y = Math.min(height - 24, Math.max(24, points[v].y + force[v].y));
    }
  }
  return points;
}
