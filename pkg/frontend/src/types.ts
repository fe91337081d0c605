/**
 * Data shapes exchanged with the session server.
 *
 * The server is the single source of truth: every response below is consumed
 * as-is and the UI renders a pure projection of it.  Nothing in the client
 * recomputes mutation results, ranks, or sink/source sets.
 */

export type Point = [number, number];

/** A vertex as reported by the server; labels are display strings. */
export interface VertexJson {
  id: number;
  label: string | number;
  frozen: boolean;
}

/** Quiver snapshot: vertices plus [src, dst, multiplicity] arrows. */
export interface QuiverJson {
  vertices: VertexJson[];
  arrows: [number, number, number][];
}

/** Disk triangulation: marked points 1..m and oriented triangles. */
export interface TriangulationJson {
  m: number;
  orientations: number[];
  triangles: [number, number, number][];
}

export interface EmptyState {
  kind: null;
  loaded: false;
}

export interface LoadedState {
  kind: "hive" | "glued" | "quiver";
  loaded: true;
  l: number | null;
  triangulation: TriangulationJson | null;
  quiver: QuiverJson;
  /** One entry per vertex id; null means the server has no layout for it. */
  positions: (Point | null)[];
  b_rank: number;
  full_rank: boolean;
  sinks: number[];
  sources: number[];
}

export type ServerState = EmptyState | LoadedState;

/**
 * Step confirmation attached to flip/twist responses.  `sequence` lists the
 * vertex labels mutated in order; tuple labels arrive as plain arrays.
 */
export interface AppliedStep {
  op: "flip" | "twist";
  diagonal?: number[];
  triangle?: number;
  edge?: number[];
  sequence: SequenceLabel[];
}

export type SequenceLabel = number[] | string | number;

export interface PostResponse {
  ok: true;
  state: ServerState;
  applied?: AppliedStep;
}

export interface HistoryStep {
  op: string;
  vertex?: number;
  diagonal?: number[];
  triangle?: number;
  edge?: number[];
  sequence?: SequenceLabel[];
}

export type LoadRequest =
  | { kind: "hive"; l: number; drop_edges?: number[] }
  | { kind: "glue"; m: number; triangles: number[][]; l: number }
  | { kind: "quiver"; quiver: unknown };

/**
 * Render a sequence label the way /state renders vertex labels, so replay
 * steps can be matched back to vertices.  Tuples become "(a,b,c)".
 */
export function labelKey(label: SequenceLabel | VertexJson["label"]): string {
  if (Array.isArray(label)) {
    return "(" + label.join(",") + ")";
  }
  return String(label);
}

function fail(where: string, detail: string): never {
  throw new Error("bad server payload at " + where + ": " + detail);
}

function checkNumberArray(value: unknown, where: string): number[] {
  if (!Array.isArray(value) || value.some((x) => typeof x !== "number")) {
    fail(where, "expected an array of numbers");
  }
  return value as number[];
}

/**
 * Validate a /state payload structurally.  The explorer refuses to render
 * anything it does not fully understand; a loud error beats a quiet lie.
 */
export function parseState(raw: unknown): ServerState {
  if (typeof raw !== "object" || raw === null) {
    fail("state", "not an object");
  }
  const obj = raw as Record<string, unknown>;
  if (obj.loaded === false) {
    return { kind: null, loaded: false };
  }
  if (obj.loaded !== true) {
    fail("state.loaded", String(obj.loaded));
  }
  if (obj.kind !== "hive" && obj.kind !== "glued" && obj.kind !== "quiver") {
    fail("state.kind", String(obj.kind));
  }
  const quiver = obj.quiver as QuiverJson | undefined;
  if (!quiver || !Array.isArray(quiver.vertices) || !Array.isArray(quiver.arrows)) {
    fail("state.quiver", "missing vertices or arrows");
  }
  for (const v of quiver.vertices) {
    if (typeof v.id !== "number" || typeof v.frozen !== "boolean") {
      fail("state.quiver.vertices", JSON.stringify(v));
    }
  }
  for (const a of quiver.arrows) {
    checkNumberArray(a, "state.quiver.arrows");
    if (a.length !== 3) {
      fail("state.quiver.arrows", "arrow is not [src, dst, mult]");
    }
  }
  const positions = obj.positions;
  if (!Array.isArray(positions) || positions.length !== quiver.vertices.length) {
    fail("state.positions", "length mismatch with vertices");
  }
  for (const p of positions) {
    if (p !== null && (!Array.isArray(p) || p.length !== 2)) {
      fail("state.positions", JSON.stringify(p));
    }
  }
  if (typeof obj.b_rank !== "number" || typeof obj.full_rank !== "boolean") {
    fail("state.b_rank/full_rank", "missing");
  }
  const tri = obj.triangulation as TriangulationJson | null;
  if (tri !== null) {
    if (typeof tri.m !== "number" || !Array.isArray(tri.triangles)) {
      fail("state.triangulation", "missing m or triangles");
    }
  }
  return {
    kind: obj.kind,
    loaded: true,
    l: (obj.l as number | null) ?? null,
    triangulation: tri,
    quiver,
    positions: positions as (Point | null)[],
    b_rank: obj.b_rank,
    full_rank: obj.full_rank,
    sinks: checkNumberArray(obj.sinks, "state.sinks"),
    sources: checkNumberArray(obj.sources, "state.sources"),
  };
}
