/**
 * End-to-end checks against a real session server spawned from the Python
 * package.  These script the same gestures the page wires to clicks and pin
 * the two load-bearing guarantees: a click-mutate-twice round trip leaves
 * the server state byte-identical, and a flip animation replays exactly the
 * mutation sequence the server reported.
 */

import { ChildProcess, spawn } from "node:child_process";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { SessionClient } from "../src/api.js";
import { View, createController } from "../src/controller.js";
import { LoadedState, ServerState, labelKey } from "../src/types.js";

const repoRoot = fileURLToPath(new URL("../..", import.meta.url));

let proc: ChildProcess;
let base: string;

function startServer(): Promise<{ proc: ChildProcess; base: string }> {
  return new Promise((resolve, reject) => {
    const child = spawn(
      "python3",
      ["-m", "icehive.cli", "serve", "--host", "127.0.0.1", "--port", "0"],
      { cwd: repoRoot, stdio: ["ignore", "ignore", "pipe"] },
    );
    let buffer = "";
    const onData = (chunk: Buffer) => {
      buffer += chunk.toString();
      const match = buffer.match(/serving on (http:\/\/[0-9.]+:[0-9]+)/);
      if (match) {
        child.stderr!.off("data", onData);
        resolve({ proc: child, base: match[1] });
      }
    };
    child.stderr!.on("data", onData);
    child.on("error", reject);
    child.on("exit", (code) => {
      reject(new Error("server exited before it was ready: " + code));
    });
    setTimeout(() => reject(new Error("server start timed out: " + buffer)), 15000);
  });
}

async function rawStateText(): Promise<string> {
  const resp = await fetch(base + "/state");
  return resp.text();
}

class RecordingView implements View {
  rendered: string[] = [];
  flashes: number[] = [];
  errors: string[] = [];

  render(state: ServerState) {
    this.rendered.push(JSON.stringify(state));
  }

  setStatus(text: string, isError: boolean) {
    if (isError) {
      this.errors.push(text);
    }
  }

  setBusy() {}

  flashVertex(id: number) {
    this.flashes.push(id);
  }

  clearFlash() {}
}

function freshController() {
  const view = new RecordingView();
  const client = new SessionClient(base);
  const controller = createController(client, view, { sleep: async () => {} });
  return { view, client, controller };
}

function loaded(state: ServerState | null): LoadedState {
  if (!state || !state.loaded) {
    throw new Error("expected a loaded session");
  }
  return state;
}

beforeAll(async () => {
  const started = await startServer();
  proc = started.proc;
  base = started.base;
});

afterAll(() => {
  proc?.kill();
});

describe("scripted mutate round trip", () => {
  it("click-mutate-twice returns byte-identical server state", async () => {
    const { view, controller } = freshController();
    await controller.load({ kind: "hive", l: 3 });
    expect(view.errors).toEqual([]);

    const baseline = await rawStateText();
    const mutable = loaded(controller.current()).quiver.vertices.filter(
      (v) => !v.frozen,
    );
    expect(mutable.length).toBeGreaterThan(0);
    const target = mutable[0].id;

    expect(await controller.clickVertex(target)).toBe(true);
    const midway = await rawStateText();
    expect(midway).not.toBe(baseline);
    expect(await controller.clickVertex(target)).toBe(true);
    const after = await rawStateText();

    expect(after).toBe(baseline);
  });

  it("does the same on a glued surface", async () => {
    const { controller } = freshController();
    await controller.load({
      kind: "glue",
      m: 4,
      triangles: [
        [1, 2, 4],
        [2, 3, 4],
      ],
      l: 3,
    });
    const baseline = await rawStateText();
    const glued = loaded(controller.current());
    // the seam of the glued square stays mutable while the boundary freezes
    expect(glued.quiver.vertices.some((v) => !v.frozen)).toBe(true);
    expect(glued.quiver.vertices.some((v) => v.frozen)).toBe(true);
    const target = glued.quiver.vertices.find((v) => !v.frozen)!.id;
    await controller.clickVertex(target);
    await controller.clickVertex(target);
    expect(await rawStateText()).toBe(baseline);
  });
});

describe("flip replay fidelity", () => {
  it("animates exactly the mutation sequence the server reported", async () => {
    const { view, controller } = freshController();
    await controller.load({
      kind: "glue",
      m: 4,
      triangles: [
        [1, 2, 4],
        [2, 3, 4],
      ],
      l: 3,
    });
    const before = loaded(controller.current());
    view.flashes.length = 0;

    expect(await controller.clickDiagonal([2, 4])).toBe(true);

    const historyResp = await fetch(base + "/history");
    const history = (await historyResp.json()) as {
      steps: { op: string; sequence?: (number[] | string)[] }[];
    };
    const lastStep = history.steps[history.steps.length - 1];
    expect(lastStep.op).toBe("flip");
    const reported = lastStep.sequence!;
    expect(reported.length).toBeGreaterThan(0);

    expect(controller.replayedSequence()).toEqual(reported);

    const idsFromReport = reported.map(
      (label) =>
        before.quiver.vertices.find((v) => labelKey(v.label) === labelKey(label))!.id,
    );
    expect(view.flashes).toEqual(idsFromReport);
  });

  it("twist replays match the server report too", async () => {
    const { view, controller } = freshController();
    await controller.load({
      kind: "glue",
      m: 4,
      triangles: [
        [1, 2, 4],
        [2, 3, 4],
      ],
      l: 2,
    });
    const before = loaded(controller.current());
    view.flashes.length = 0;

    expect(await controller.applyTwist(0, [2, 4])).toBe(true);

    const history = (await (await fetch(base + "/history")).json()) as {
      steps: { op: string; sequence?: (number[] | string)[] }[];
    };
    const reported = history.steps[history.steps.length - 1].sequence!;
    expect(controller.replayedSequence()).toEqual(reported);
    const ids = reported.map(
      (label) =>
        before.quiver.vertices.find((v) => labelKey(v.label) === labelKey(label))!.id,
    );
    expect(view.flashes).toEqual(ids);
  });
});

describe("view is a pure projection of /state", () => {
  it("refresh reproduces the identical view", async () => {
    const { view, controller } = freshController();
    await controller.load({ kind: "hive", l: 4 });
    const target = loaded(controller.current()).quiver.vertices.find(
      (v) => !v.frozen,
    )!.id;
    await controller.clickVertex(target);

    const drawn = view.rendered[view.rendered.length - 1];
    const stateTextA = await rawStateText();
    await controller.refresh();
    const redrawn = view.rendered[view.rendered.length - 1];
    const stateTextB = await rawStateText();

    expect(redrawn).toBe(drawn);
    expect(stateTextB).toBe(stateTextA);
  });

  it("undo walks back to the exact post-load snapshot", async () => {
    const { controller } = freshController();
    await controller.load({
      kind: "glue",
      m: 4,
      triangles: [
        [1, 2, 4],
        [2, 3, 4],
      ],
      l: 3,
    });
    const baseline = await rawStateText();
    const target = loaded(controller.current()).quiver.vertices.find(
      (v) => !v.frozen,
    )!.id;

    await controller.clickVertex(target);
    await controller.clickDiagonal([2, 4]);
    expect(await rawStateText()).not.toBe(baseline);

    expect(await controller.clickUndo()).toBe(true);
    expect(await controller.clickUndo()).toBe(true);
    expect(await rawStateText()).toBe(baseline);
  });

  it("rejected steps leave the server state untouched", async () => {
    const { view, controller } = freshController();
    await controller.load({ kind: "hive", l: 3 });
    const baseline = await rawStateText();

    expect(await controller.clickVertex(999)).toBe(false);
    expect(view.errors.some((e) => e.includes("UnknownVertex"))).toBe(true);
    expect(await rawStateText()).toBe(baseline);
  });
});

describe("spec showcase paths", () => {
  it("a depth-5 hive renders 18 vertices, every one placed by the server", async () => {
    const { controller } = freshController();
    await controller.load({ kind: "hive", l: 5 });
    const state = loaded(controller.current());
    expect(state.quiver.vertices).toHaveLength(18);
    expect(state.positions.every((p) => p !== null)).toBe(true);
  });

  it("an empty quiver loads as an empty canvas with rank 0", async () => {
    const { view, controller } = freshController();
    await controller.load({
      kind: "quiver",
      quiver: { vertices: [], arrows: [] },
    });
    expect(view.errors).toEqual([]);
    const state = loaded(controller.current());
    expect(state.quiver.vertices).toHaveLength(0);
    expect(state.positions).toHaveLength(0);
    expect(state.b_rank).toBe(0);
    expect(state.full_rank).toBe(true);
  });

  it("flipping the stale diagonal cycles a pentagon through 5 triangulations", async () => {
    const { controller } = freshController();
    await controller.load({
      kind: "glue",
      m: 5,
      triangles: [
        [1, 2, 3],
        [1, 3, 4],
        [1, 4, 5],
      ],
      l: 2,
    });
    // a triangulation is a set of triangles; the server may list them in a
    // different order after a flip, so compare canonically
    const canon = (tri: { triangles: number[][] }) =>
      JSON.stringify(
        tri.triangles
          .map((t) => [...t].sort((a, b) => a - b))
          .sort((p, q) => p[0] - q[0] || p[1] - q[1] || p[2] - q[2]),
      );
    const start = loaded(controller.current());
    const startTri = canon(start.triangulation!);
    const startRank = start.b_rank;
    expect(start.full_rank).toBe(true);

    // with two diagonals present, always flip the one the previous flip
    // did not create; the five triangulations of the pentagon cycle
    let lastCreated: string | null = null;
    const seen = new Set<string>([startTri]);
    for (let step = 0; step < 5; step++) {
      const state = loaded(controller.current());
      const tri = state.triangulation!;
      const counts = new Map<string, number>();
      for (const [a, b, c] of tri.triangles) {
        for (const key of [
          Math.min(a, b) + "," + Math.max(a, b),
          Math.min(b, c) + "," + Math.max(b, c),
          Math.min(a, c) + "," + Math.max(a, c),
        ]) {
          counts.set(key, (counts.get(key) ?? 0) + 1);
        }
      }
      const diagonals = [...counts.entries()]
        .filter(([, n]) => n === 2)
        .map(([key]) => key);
      expect(diagonals).toHaveLength(2);
      const pick = diagonals.find((d) => d !== lastCreated) ?? diagonals[0];
      const edge = pick.split(",").map(Number) as [number, number];
      expect(await controller.clickDiagonal(edge)).toBe(true);

      const next = loaded(controller.current());
      expect(next.b_rank).toBe(startRank);
      const nextTri = canon(next.triangulation!);
      const nextCounts = new Map<string, number>();
      for (const [a, b, c] of next.triangulation!.triangles) {
        for (const key of [
          Math.min(a, b) + "," + Math.max(a, b),
          Math.min(b, c) + "," + Math.max(b, c),
          Math.min(a, c) + "," + Math.max(a, c),
        ]) {
          nextCounts.set(key, (nextCounts.get(key) ?? 0) + 1);
        }
      }
      // the diagonal created by this flip is the one not present before
      lastCreated = [...nextCounts.entries()]
        .filter(([, n]) => n === 2)
        .map(([key]) => key)
        .find((d) => !diagonals.includes(d)) ?? null;
      if (step < 4) {
        expect(seen.has(nextTri)).toBe(false);
      }
      seen.add(nextTri);
    }
    expect(seen.size).toBe(5);
    expect(canon(loaded(controller.current()).triangulation!)).toBe(startTri);
  });

  it("the rank badge stays constant along a random mutation path", async () => {
    const { controller } = freshController();
    await controller.load({ kind: "hive", l: 4 });
    const start = loaded(controller.current());
    const mutable = start.quiver.vertices.filter((v) => !v.frozen).map((v) => v.id);
    expect(start.full_rank).toBe(true);
    for (let i = 0; i < 8; i++) {
      const pick = mutable[(i * 7 + 3) % mutable.length];
      expect(await controller.clickVertex(pick)).toBe(true);
      const state = loaded(controller.current());
      expect(state.b_rank).toBe(start.b_rank);
      expect(state.full_rank).toBe(true);
    }
  });
});
