/** Deterministic force-directed layout.
 *
 * Seeded from the graph hash so the same graph always lands in the same
 * positions (stable screenshots); beyond the node limit physics is skipped
 * in favor of a static grid, and the caller shows a degraded-mode notice.
 */

import type { GraphFile } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

export interface LayoutResult {
  positions: Record<string, Point>;
  degraded: boolean;
}

export const DEGRADED_NODE_LIMIT = 2000;

/** mulberry32: tiny deterministic PRNG. */
export function seededRandom(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (state + 0x6d2b79f5) >>> 0;
    let t = state;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

export function seedFromHash(hash: string): number {
  const head = hash.slice(0, 8);
  const parsed = parseInt(head, 16);
  return Number.isNaN(parsed) ? 0x9e3779b9 : parsed;
}

function gridLayout(graph: GraphFile, width: number, height: number): Record<string, Point> {
  const positions: Record<string, Point> = {};
  const count = graph.nodes.length;
  const columns = Math.max(1, Math.ceil(Math.sqrt(count)));
  const cellW = width / (columns + 1);
  const cellH = height / (Math.ceil(count / columns) + 1);
  graph.nodes.forEach((node, i) => {
    positions[node.id] = {
      x: cellW * (1 + (i % columns)),
      y: cellH * (1 + Math.floor(i / columns)),
    };
  });
  return positions;
}

export function computeLayout(
  graph: GraphFile,
  hash: string,
  width = 900,
  height = 620,
): LayoutResult {
  const n = graph.nodes.length;
  if (n === 0) {
    return { positions: {}, degraded: false };
  }
  if (n > DEGRADED_NODE_LIMIT) {
    return { positions: gridLayout(graph, width, height), degraded: true };
  }

  const rand = seededRandom(seedFromHash(hash));
  const index = new Map<string, number>();
  graph.nodes.forEach((node, i) => index.set(node.id, i));
  const xs = new Float64Array(n);
  const ys = new Float64Array(n);
  for (let i = 0; i < n; i++) {
    xs[i] = width * (0.15 + 0.7 * rand());
    ys[i] = height * (0.15 + 0.7 * rand());
  }
  const edges = graph.edges
    .map((e) => [index.get(e.src), index.get(e.dst)] as [number, number])
    .filter(([a, b]) => a !== undefined && b !== undefined);

  const iterations = Math.max(20, Math.min(150, Math.floor(60000 / Math.max(1, n))));
  const area = width * height;
  const k = Math.sqrt(area / n) * 0.7; // ideal pairwise distance
  let temperature = width / 8;
  const cool = Math.pow(0.02, 1 / iterations);

  const dx = new Float64Array(n);
  const dy = new Float64Array(n);
  for (let iter = 0; iter < iterations; iter++) {
    dx.fill(0);
    dy.fill(0);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let vx = xs[i] - xs[j];
        let vy = ys[i] - ys[j];
        let dist = Math.hypot(vx, vy);
        if (dist < 0.01) {
          // deterministic nudge for coincident nodes
          vx = 0.01 * (1 + (i % 7));
          vy = 0.01 * (1 + (j % 5));
          dist = Math.hypot(vx, vy);
        }
        const repulse = (k * k) / dist;
        dx[i] += (vx / dist) * repulse;
        dy[i] += (vy / dist) * repulse;
        dx[j] -= (vx / dist) * repulse;
        dy[j] -= (vy / dist) * repulse;
      }
    }
    for (const [a, b] of edges) {
      const vx = xs[a] - xs[b];
      const vy = ys[a] - ys[b];
      const dist = Math.max(0.01, Math.hypot(vx, vy));
      const attract = (dist * dist) / k;
      dx[a] -= (vx / dist) * attract;
      dy[a] -= (vy / dist) * attract;
      dx[b] += (vx / dist) * attract;
      dy[b] += (vy / dist) * attract;
    }
    for (let i = 0; i < n; i++) {
      const disp = Math.max(0.01, Math.hypot(dx[i], dy[i]));
      const step = Math.min(disp, temperature);
      xs[i] += (dx[i] / disp) * step;
      ys[i] += (dy[i] / disp) * step;
      xs[i] = Math.min(width - 30, Math.max(30, xs[i]));
      ys[i] = Math.min(height - 30, Math.max(30, ys[i]));
    }
    temperature *= cool;
  }

  const positions: Record<string, Point> = {};
  graph.nodes.forEach((node, i) => {
    positions[node.id] = { x: xs[i], y: ys[i] };
  });
  return { positions, degraded: false };
}
