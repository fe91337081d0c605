/**
 * Session controller: turns user gestures into API calls and replays the
 * server's answers into the view.  Each gesture issues exactly one request,
 * nothing is rendered until the server confirms, and the view is redrawn
 * only from snapshots the server returned.
 */

import { ApiError, SessionApi } from "./api.js";
import {
  AppliedStep,
  LoadRequest,
  SequenceLabel,
  ServerState,
  labelKey,
} from "./types.js";

export interface View {
  render(state: ServerState): void;
  setStatus(text: string, isError: boolean): void;
  setBusy(busy: boolean): void;
  /** Highlight one vertex while a replayed mutation sequence passes it. */
  flashVertex(id: number): void;
  clearFlash(): void;
}

export interface ControllerOptions {
  /** Pause between replayed mutation steps; tests inject a no-op. */
  sleep?: (ms: number) => Promise<void>;
  stepDelayMs?: number;
}

const defaultSleep = (ms: number) =>
  new Promise<void>((resolve) => setTimeout(resolve, ms));

export function createController(
  client: SessionApi,
  view: View,
  options: ControllerOptions = {},
) {
  const sleep = options.sleep ?? defaultSleep;
  const stepDelayMs = options.stepDelayMs ?? 250;

  let state: ServerState | null = null;
  let busy = false;
  let lastReplay: SequenceLabel[] = [];

  function show(next: ServerState) {
    state = next;
    view.render(next);
  }

  function describeError(err: unknown): string {
    if (err instanceof ApiError) {
      return err.message;
    }
    return err instanceof Error ? err.message : String(err);
  }

  /** Map a replay label to a vertex id in the state currently on screen. */
  function vertexIdFor(label: SequenceLabel): number | null {
    if (state === null || !state.loaded) {
      return null;
    }
    const key = labelKey(label);
    for (const v of state.quiver.vertices) {
      if (labelKey(v.label) === key) {
        return v.id;
      }
    }
    return null;
  }

  async function replay(applied: AppliedStep): Promise<void> {
    lastReplay = applied.sequence.slice();
    for (const label of applied.sequence) {
      const id = vertexIdFor(label);
      if (id !== null) {
        view.flashVertex(id);
      }
      await sleep(stepDelayMs);
    }
    view.clearFlash();
  }

  async function guarded(
    action: () => Promise<string>,
  ): Promise<boolean> {
    if (busy) {
      return false;
    }
    busy = true;
    view.setBusy(true);
    try {
      const summary = await action();
      view.setStatus(summary, false);
      return true;
    } catch (err) {
      view.setStatus(describeError(err), true);
      return false;
    } finally {
      busy = false;
      view.setBusy(false);
    }
  }

  return {
    current(): ServerState | null {
      return state;
    },

    isBusy(): boolean {
      return busy;
    },

    /** Sequence replayed by the most recent flip or twist, verbatim. */
    replayedSequence(): SequenceLabel[] {
      return lastReplay.slice();
    },

    async refresh(): Promise<boolean> {
      return guarded(async () => {
        show(await client.state());
        return "state refreshed";
      });
    },

    async load(request: LoadRequest): Promise<boolean> {
      return guarded(async () => {
        const resp = await client.load(request);
        show(resp.state);
        return "loaded " + request.kind;
      });
    },

    async clickVertex(vertex: number): Promise<boolean> {
      return guarded(async () => {
        const resp = await client.mutate(vertex);
        show(resp.state);
        return "mutated vertex " + vertex;
      });
    },

    async clickDiagonal(diagonal: [number, number]): Promise<boolean> {
      return guarded(async () => {
        const resp = await client.flip(diagonal);
        if (resp.applied) {
          await replay(resp.applied);
        }
        show(resp.state);
        const steps = resp.applied ? resp.applied.sequence.length : 0;
        return (
          "flipped (" + diagonal.join(",") + "), replayed " + steps + " mutations"
        );
      });
    },

    async applyTwist(triangle: number, edge: [number, number]): Promise<boolean> {
      return guarded(async () => {
        const resp = await client.twist(triangle, edge);
        if (resp.applied) {
          await replay(resp.applied);
        }
        show(resp.state);
        const steps = resp.applied ? resp.applied.sequence.length : 0;
        return (
          "twisted triangle " +
          triangle +
          " at (" +
          edge.join(",") +
          "), replayed " +
          steps +
          " mutations"
        );
      });
    },

    async clickUndo(): Promise<boolean> {
      return guarded(async () => {
        const resp = await client.undo();
        show(resp.state);
        return "undone";
      });
    },
  };
}

export type Controller = ReturnType<typeof createController>;
