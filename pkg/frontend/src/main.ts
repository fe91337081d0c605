/**
 * Entry point: builds the client, view, and controller, then wires the
 * static controls.  The page talks to a running session server; start one
 * with `icehive serve` and point the base URL field at it.
 */

import { SessionClient } from "./api.js";
import { createController } from "./controller.js";
import { SvgView } from "./view.js";

function fanTriangles(m: number): number[][] {
  const out: number[][] = [];
  for (let k = 2; k < m; k++) {
    out.push([1, k, k + 1]);
  }
  return out;
}

addEventListener("load", () => {
  const baseInput = document.getElementById("base-url") as HTMLInputElement;
  const view = new SvgView(document);

  let client = new SessionClient(baseInput.value);
  let controller = createController(client, view);

  const rebuild = () => {
    client = new SessionClient(baseInput.value);
    controller = createController(client, view);
    controller.refresh();
  };
  baseInput.addEventListener("change", rebuild);

  view.connect({
    onVertex: (id) => {
      controller.clickVertex(id);
    },
    onDiagonal: (edge) => {
      controller.clickDiagonal(edge);
    },
  });

  const numberValue = (id: string) =>
    Number((document.getElementById(id) as HTMLInputElement).value);

  document.getElementById("load-hive")?.addEventListener("click", () => {
    controller.load({ kind: "hive", l: numberValue("hive-l") });
  });

  document.getElementById("load-glue")?.addEventListener("click", () => {
    const m = numberValue("glue-m");
    controller.load({
      kind: "glue",
      m,
      triangles: fanTriangles(m),
      l: numberValue("glue-l"),
    });
  });

  document.getElementById("load-quiver")?.addEventListener("click", () => {
    const text = (document.getElementById("quiver-json") as HTMLTextAreaElement).value;
    try {
      controller.load({ kind: "quiver", quiver: JSON.parse(text) });
    } catch (err) {
      view.setStatus("quiver JSON does not parse: " + err, true);
    }
  });

  document.getElementById("twist-apply")?.addEventListener("click", () => {
    const picked = view.twistSelection();
    if (picked === null) {
      view.setStatus("no triangulation loaded, nothing to twist", true);
      return;
    }
    controller.applyTwist(picked.triangle, picked.edge);
  });

  document.getElementById("undo")?.addEventListener("click", () => {
    controller.clickUndo();
  });

  document.getElementById("refresh")?.addEventListener("click", () => {
    controller.refresh();
  });

  controller.refresh();
});
