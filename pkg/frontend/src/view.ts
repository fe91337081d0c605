/**
 * SVG view: draws the quiver and the triangulation pane, wires clicks back
 * to the controller, and keeps the status bar current.  All drawing starts
 * from a server snapshot; the only computation here is placing things.
 */

import { fitToBox, forceLayout, polygonPoints, triangulationEdges } from "./layout.js";
import { Point, ServerState, labelKey } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface GestureHandlers {
  onVertex(id: number): void;
  onDiagonal(edge: [number, number]): void;
}

// ----- element helpers ----------------------------------------------------

function svgElem<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

function clearChildren(el: Element) {
  while (el.firstChild) {
    el.removeChild(el.firstChild);
  }
}

// ----- view ----------------------------------------------------------------

export class SvgView {
  private readonly quiverSvg: SVGSVGElement;
  private readonly triSvg: SVGSVGElement;
  private readonly statusText: HTMLElement;
  private readonly rankBadge: HTMLElement;
  private readonly triangleSelect: HTMLSelectElement;
  private readonly edgeSelect: HTMLSelectElement;
  private handlers: GestureHandlers | null = null;
  private vertexNodes = new Map<number, SVGElement>();
  private flashed: SVGElement | null = null;

  constructor(root: Document) {
    this.quiverSvg = root.getElementById("quiver-pane") as unknown as SVGSVGElement;
    this.triSvg = root.getElementById("tri-pane") as unknown as SVGSVGElement;
    this.statusText = root.getElementById("status-text") as HTMLElement;
    this.rankBadge = root.getElementById("rank-badge") as HTMLElement;
    this.triangleSelect = root.getElementById("twist-triangle") as HTMLSelectElement;
    this.edgeSelect = root.getElementById("twist-edge") as HTMLSelectElement;
  }

  connect(handlers: GestureHandlers) {
    this.handlers = handlers;
  }

  // ----- status bar ---------------------------------------------------------

  setStatus(text: string, isError: boolean) {
    this.statusText.textContent = text;
    this.statusText.className = isError ? "status error" : "status";
  }

  setBusy(busy: boolean) {
    document.body.classList.toggle("busy", busy);
  }

  private renderBadge(state: ServerState) {
    if (!state.loaded) {
      this.rankBadge.textContent = "no session";
      this.rankBadge.className = "badge idle";
      return;
    }
    this.rankBadge.textContent =
      "B-rank " + state.b_rank + (state.full_rank ? " · full rank" : " · deficient");
    this.rankBadge.className = state.full_rank ? "badge full" : "badge deficient";
  }

  // ----- replay highlight -----------------------------------------------------

  flashVertex(id: number) {
    this.clearFlash();
    const node = this.vertexNodes.get(id);
    if (node) {
      node.classList.add("flash");
      this.flashed = node;
    }
  }

  clearFlash() {
    if (this.flashed) {
      this.flashed.classList.remove("flash");
      this.flashed = null;
    }
  }

  // ----- main render ----------------------------------------------------------

  render(state: ServerState) {
    this.vertexNodes.clear();
    this.flashed = null;
    clearChildren(this.quiverSvg);
    clearChildren(this.triSvg);
    this.renderBadge(state);
    if (!state.loaded) {
      this.renderPlaceholder();
      return;
    }
    this.renderQuiver(state);
    this.renderTriangulation(state);
    this.populateTwistPicker(state);
  }

  private renderPlaceholder() {
    const note = svgElem("text", {
      x: 320,
      y: 280,
      "text-anchor": "middle",
      class: "placeholder",
    });
    note.textContent = "load a hive, a glued surface, or a raw quiver";
    this.quiverSvg.appendChild(note);
  }

  private layoutPositions(state: ServerState & { loaded: true }): Point[] {
    const width = 640;
    const height = 560;
    const known = state.positions.filter((p): p is Point => p !== null);
    if (known.length === state.positions.length && known.length > 0) {
      return fitToBox(known, width, height);
    }
    return forceLayout(
      state.quiver.vertices.length,
      state.quiver.arrows,
      width,
      height,
    );
  }

  private renderQuiver(state: ServerState & { loaded: true }) {
    const placed = this.layoutPositions(state);
    const defs = svgElem("defs", {});
    const marker = svgElem("marker", {
      id: "arrowhead",
      viewBox: "0 0 10 10",
      refX: 9,
      refY: 5,
      markerWidth: 7,
      markerHeight: 7,
      orient: "auto-start-reverse",
    });
    marker.appendChild(svgElem("path", { d: "M 0 0 L 10 5 L 0 10 z", class: "arrow-head" }));
    defs.appendChild(marker);
    this.quiverSvg.appendChild(defs);

    const radius = 14;
    for (const [u, v, mult] of state.quiver.arrows) {
      const [x1, y1] = placed[u];
      const [x2, y2] = placed[v];
      const dx = x2 - x1;
      const dy = y2 - y1;
      const len = Math.sqrt(dx * dx + dy * dy) || 1;
      // trim the segment so the head stops at the target's boundary
      const sx = x1 + (dx / len) * radius;
      const sy = y1 + (dy / len) * radius;
      const ex = x2 - (dx / len) * (radius + 3);
      const ey = y2 - (dy / len) * (radius + 3);
      this.quiverSvg.appendChild(
        svgElem("line", {
          x1: sx,
          y1: sy,
          x2: ex,
          y2: ey,
          class: "arrow",
          "marker-end": "url(#arrowhead)",
        }),
      );
      if (mult !== 1) {
        const label = svgElem("text", {
          x: (x1 + x2) / 2 - (dy / len) * 10,
          y: (y1 + y2) / 2 + (dx / len) * 10,
          "text-anchor": "middle",
          class: "mult-label",
        });
        label.textContent = String(mult);
        this.quiverSvg.appendChild(label);
      }
    }

    const sinks = new Set(state.sinks);
    const sources = new Set(state.sources);
    for (const vertex of state.quiver.vertices) {
      const [x, y] = placed[vertex.id];
      const group = svgElem("g", { class: "vertex" });
      const classes = ["node"];
      if (sinks.has(vertex.id)) {
        classes.push("sink");
      }
      if (sources.has(vertex.id)) {
        classes.push("source");
      }
      let shape: SVGElement;
      if (vertex.frozen) {
        classes.push("frozen");
        shape = svgElem("rect", {
          x: x - 12,
          y: y - 12,
          width: 24,
          height: 24,
          class: classes.join(" "),
        });
      } else {
        classes.push("mutable");
        shape = svgElem("circle", {
          cx: x,
          cy: y,
          r: 14,
          class: classes.join(" "),
        });
        shape.addEventListener("click", () => {
          this.handlers?.onVertex(vertex.id);
        });
      }
      group.appendChild(shape);
      const text = svgElem("text", {
        x,
        y: y - 18,
        "text-anchor": "middle",
        class: "vertex-label",
      });
      text.textContent = labelKey(vertex.label);
      group.appendChild(text);
      this.quiverSvg.appendChild(group);
      this.vertexNodes.set(vertex.id, shape);
    }
  }

  private renderTriangulation(state: ServerState & { loaded: true }) {
    const tri = state.triangulation;
    if (!tri) {
      return;
    }
    const points = polygonPoints(tri.m, 140, 120, 100);
    for (const { edge, diagonal } of triangulationEdges(tri)) {
      const [a, b] = edge;
      const [x1, y1] = points.get(a)!;
      const [x2, y2] = points.get(b)!;
      const line = svgElem("line", {
        x1,
        y1,
        x2,
        y2,
        class: diagonal ? "tri-edge diagonal" : "tri-edge",
      });
      if (diagonal) {
        line.addEventListener("click", () => {
          this.handlers?.onDiagonal(edge);
        });
      }
      this.triSvg.appendChild(line);
    }
    for (const [k, [x, y]] of points) {
      this.triSvg.appendChild(svgElem("circle", { cx: x, cy: y, r: 4, class: "tri-point" }));
      const label = svgElem("text", {
        x: x * 1.12 - 140 * 0.12,
        y: y * 1.12 - 120 * 0.12 + 4,
        "text-anchor": "middle",
        class: "tri-label",
      });
      label.textContent = String(k);
      this.triSvg.appendChild(label);
    }
  }

  // ----- twist picker -----------------------------------------------------------

  private populateTwistPicker(state: ServerState & { loaded: true }) {
    const tri = state.triangulation;
    clearChildren(this.triangleSelect);
    clearChildren(this.edgeSelect);
    if (!tri) {
      this.triangleSelect.disabled = true;
      this.edgeSelect.disabled = true;
      return;
    }
    this.triangleSelect.disabled = false;
    this.edgeSelect.disabled = false;
    tri.triangles.forEach((triangle, index) => {
      const option = document.createElement("option");
      option.value = String(index);
      option.textContent = index + ": (" + triangle.join(",") + ")";
      this.triangleSelect.appendChild(option);
    });
    const refreshEdges = () => {
      clearChildren(this.edgeSelect);
      const triangle = tri.triangles[Number(this.triangleSelect.value)];
      if (!triangle) {
        return;
      }
      const [a, b, c] = triangle;
      for (const [u, v] of [
        [a, b],
        [b, c],
        [a, c],
      ]) {
        const option = document.createElement("option");
        option.value = u + "," + v;
        option.textContent = "(" + u + "," + v + ")";
        this.edgeSelect.appendChild(option);
      }
    };
    this.triangleSelect.onchange = refreshEdges;
    refreshEdges();
  }

  /** Currently picked twist target, or null when no triangulation is loaded. */
  twistSelection(): { triangle: number; edge: [number, number] } | null {
    if (this.triangleSelect.disabled || this.edgeSelect.value === "") {
      return null;
    }
    const parts = this.edgeSelect.value.split(",").map(Number);
    return {
      triangle: Number(this.triangleSelect.value),
      edge: [parts[0], parts[1]],
    };
  }
}
