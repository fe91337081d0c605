/**
 * Geometry helpers: fitting server-supplied coordinates to the viewport and
 * producing a fallback layout when the server reports no positions at all.
 * This is the only piece of quiver-adjacent math that lives in the client,
 * and it never feeds back into anything the server computes.
 */

import { Point, TriangulationJson } from "./types.js";

/** Scale a point cloud into a width x height box, preserving aspect ratio.
 *  Flips the y axis: server coordinates grow upward, SVG grows downward. */
export function fitToBox(
  points: Point[],
  width: number,
  height: number,
  margin = 40,
): Point[] {
  if (points.length === 0) {
    return [];
  }
  let minX = Infinity;
  let maxX = -Infinity;
  let minY = Infinity;
  let maxY = -Infinity;
  for (const [x, y] of points) {
    minX = Math.min(minX, x);
    maxX = Math.max(maxX, x);
    minY = Math.min(minY, y);
    maxY = Math.max(maxY, y);
  }
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min((width - 2 * margin) / spanX, (height - 2 * margin) / spanY);
  const offX = (width - scale * spanX) / 2;
  const offY = (height - scale * spanY) / 2;
  return points.map(([x, y]) => [
    offX + scale * (x - minX),
    height - (offY + scale * (y - minY)),
  ]);
}

// Deterministic PRNG so the fallback layout is stable across refreshes;
// the contract promises a refresh reproduces the identical view.
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/**
 * Spring layout for quivers loaded without coordinates.  Arrows act as
 * springs, every vertex pair repels, a weak pull keeps components centered.
 * Fixed iteration count and a fixed seed keep the result reproducible.
 */
export function forceLayout(
  n: number,
  arrows: [number, number, number][],
  width: number,
  height: number,
): Point[] {
  if (n === 0) {
    return [];
  }
  if (n === 1) {
    return [[width / 2, height / 2]];
  }
  const rand = mulberry32(0x1ce41fe + n);
  const pos: Point[] = [];
  for (let i = 0; i < n; i++) {
    pos.push([width * (0.25 + 0.5 * rand()), height * (0.25 + 0.5 * rand())]);
  }
  const ideal = Math.min(width, height) / Math.sqrt(n + 1);
  for (let iter = 0; iter < 200; iter++) {
    const disp: Point[] = pos.map(() => [0, 0]);
    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        let dx = pos[i][0] - pos[j][0];
        let dy = pos[i][1] - pos[j][1];
        let d2 = dx * dx + dy * dy;
        if (d2 < 0.01) {
          dx = 0.1;
          dy = 0.1;
          d2 = 0.02;
        }
        const rep = (ideal * ideal) / d2;
        disp[i][0] += dx * rep;
        disp[i][1] += dy * rep;
        disp[j][0] -= dx * rep;
        disp[j][1] -= dy * rep;
      }
    }
    for (const [u, v] of arrows) {
      const dx = pos[u][0] - pos[v][0];
      const dy = pos[u][1] - pos[v][1];
      const d = Math.sqrt(dx * dx + dy * dy) || 0.1;
      const att = (d * d) / ideal / d;
      disp[u][0] -= dx * att;
      disp[u][1] -= dy * att;
      disp[v][0] += dx * att;
      disp[v][1] += dy * att;
    }
    const temp = (ideal / 4) * (1 - iter / 200);
    for (let i = 0; i < n; i++) {
      const d = Math.sqrt(disp[i][0] ** 2 + disp[i][1] ** 2) || 1;
      const step = Math.min(d, temp);
      pos[i][0] += (disp[i][0] / d) * step;
      pos[i][1] += (disp[i][1] / d) * step;
    }
  }
  return fitToBox(pos, width, height).map(([x, y]) => [x, height - y]);
}

/** Positions of the marked points 1..m around a circle, point 1 at the top. */
export function polygonPoints(
  m: number,
  cx: number,
  cy: number,
  r: number,
): Map<number, Point> {
  const out = new Map<number, Point>();
  for (let k = 1; k <= m; k++) {
    const angle = -Math.PI / 2 + (2 * Math.PI * (k - 1)) / m;
    out.set(k, [cx + r * Math.cos(angle), cy + r * Math.sin(angle)]);
  }
  return out;
}

function edgeName(a: number, b: number): string {
  return a < b ? a + "-" + b : b + "-" + a;
}

/** Edges shared by two triangles; exactly the flippable diagonals. */
export function internalEdges(tri: TriangulationJson): [number, number][] {
  const counts = new Map<string, [number, number]>();
  const seen = new Map<string, number>();
  for (const [a, b, c] of tri.triangles) {
    for (const [u, v] of [
      [a, b],
      [b, c],
      [a, c],
    ] as [number, number][]) {
      const name = edgeName(u, v);
      seen.set(name, (seen.get(name) ?? 0) + 1);
      counts.set(name, u < v ? [u, v] : [v, u]);
    }
  }
  const out: [number, number][] = [];
  for (const [name, edge] of counts) {
    if (seen.get(name) === 2) {
      out.push(edge);
    }
  }
  out.sort((p, q) => p[0] - q[0] || p[1] - q[1]);
  return out;
}

/** All edges of the triangulation with a diagonal flag, for drawing. */
export function triangulationEdges(
  tri: TriangulationJson,
): { edge: [number, number]; diagonal: boolean }[] {
  const internal = new Set(internalEdges(tri).map(([a, b]) => edgeName(a, b)));
  const out = new Map<string, { edge: [number, number]; diagonal: boolean }>();
  for (const [a, b, c] of tri.triangles) {
    for (const [u, v] of [
      [a, b],
      [b, c],
      [a, c],
    ] as [number, number][]) {
      const name = edgeName(u, v);
      if (!out.has(name)) {
        out.set(name, {
          edge: u < v ? [u, v] : [v, u],
          diagonal: internal.has(name),
        });
      }
    }
  }
  return [...out.values()].sort(
    (p, q) => p.edge[0] - q.edge[0] || p.edge[1] - q.edge[1],
  );
}
