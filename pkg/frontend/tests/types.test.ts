import { describe, expect, it } from "vitest";

import { labelKey, parseState } from "../src/types.js";

const loadedPayload = {
  kind: "glued",
  loaded: true,
  l: 2,
  triangulation: { m: 4, orientations: [1, 1], triangles: [[1, 2, 4], [2, 3, 4]] },
  quiver: {
    vertices: [
      { id: 0, label: "(1,1,2,1)", frozen: false },
      { id: 1, label: "(1,1,2,2)", frozen: true },
    ],
    arrows: [[0, 1, 1]],
  },
  positions: [[0.3, 0.0], null],
  b_rank: 1,
  full_rank: true,
  sinks: [1],
  sources: [0],
};

describe("labelKey", () => {
  it("formats tuple labels the way the server does", () => {
    expect(labelKey([2, 1, 4, 2])).toBe("(2,1,4,2)");
  });

  it("passes string and integer labels through", () => {
    expect(labelKey("(1,1,2)")).toBe("(1,1,2)");
    expect(labelKey(7)).toBe("7");
  });

  it("matches sequence entries to vertex labels", () => {
    const vertexLabel = "(1,1,2,1)";
    expect(labelKey([1, 1, 2, 1])).toBe(labelKey(vertexLabel));
  });
});

describe("parseState", () => {
  it("accepts the unloaded snapshot", () => {
    const state = parseState({ kind: null, loaded: false });
    expect(state.loaded).toBe(false);
    expect(state.kind).toBeNull();
  });

  it("accepts a loaded snapshot and keeps every field", () => {
    const state = parseState(loadedPayload);
    if (!state.loaded) {
      throw new Error("expected a loaded state");
    }
    expect(state.kind).toBe("glued");
    expect(state.quiver.vertices).toHaveLength(2);
    expect(state.positions[1]).toBeNull();
    expect(state.b_rank).toBe(1);
    expect(state.full_rank).toBe(true);
    expect(state.sinks).toEqual([1]);
  });

  it("accepts an empty quiver session", () => {
    const state = parseState({
      kind: "quiver",
      loaded: true,
      l: null,
      triangulation: null,
      quiver: { vertices: [], arrows: [] },
      positions: [],
      b_rank: 0,
      full_rank: true,
      sinks: [],
      sources: [],
    });
    if (!state.loaded) {
      throw new Error("expected a loaded state");
    }
    expect(state.quiver.vertices).toHaveLength(0);
    expect(state.b_rank).toBe(0);
  });

  it("rejects snapshots with a surprise kind", () => {
    expect(() => parseState({ ...loadedPayload, kind: "torus" })).toThrow(/kind/);
  });

  it("rejects a positions list that disagrees with the vertex count", () => {
    expect(() => parseState({ ...loadedPayload, positions: [[0, 0]] })).toThrow(
      /positions/,
    );
  });

  it("rejects missing rank fields", () => {
    const { b_rank, ...rest } = loadedPayload;
    expect(() => parseState(rest)).toThrow(/b_rank/);
  });

  it("rejects non-objects", () => {
    expect(() => parseState("nope")).toThrow(/state/);
    expect(() => parseState(null)).toThrow(/state/);
  });
});
