/**
 * SVG board rendering.  Pure render of a BoardModel: every call rebuilds
 * the scene from scratch (interactive trees stay small).
 */
import { BoardModel, EdgeView, colourOf } from "./model.js";

export interface BoardHandlers {
  onEdgeClick(edge: EdgeView): void;
}

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, String(v));
  return node;
}

export function renderBoard(
  svg: SVGSVGElement,
  model: BoardModel,
  handlers: BoardHandlers,
  selectedEdge: number | null,
): void {
  svg.innerHTML = "";
  const pos = model.positions;
  for (const edge of model.edges) {
    const a = pos[edge.u];
    const b = pos[edge.v];
    const line = el("line", {
      x1: a.x,
      y1: a.y,
      x2: b.x,
      y2: b.y,
      "stroke-width": edge.id === selectedEdge ? 7 : edge.colour ? 5 : 3,
      stroke: edge.colour ? colourOf(edge.colour) : "#b9bec7",
      "stroke-dasharray": model.unmatchedEdgeSet.has(edge.id) ? "6,4" : "",
      "data-edge": edge.id,
      cursor: edge.selectable ? "pointer" : "default",
      opacity: edge.dead ? 0.35 : 1,
    });
    if (model.lastAlice && model.lastAlice.edge === edge.id) {
      line.classList.add("alice-reply");
    }
    if (edge.selectable) {
      line.addEventListener("click", () => handlers.onEdgeClick(edge));
    }
    svg.appendChild(line);
    if (edge.colour) {
      const label = el("text", {
        x: (a.x + b.x) / 2,
        y: (a.y + b.y) / 2 - 4,
        "text-anchor": "middle",
        "font-size": 12,
        fill: "#222",
      });
      label.textContent = String(edge.colour);
      svg.appendChild(label);
    }
  }
  for (let v = 0; v < pos.length; v++) {
    if (!pos[v]) continue;
    const isBase = model.baseNodeSet.has(v);
    svg.appendChild(
      el("circle", {
        cx: pos[v].x,
        cy: pos[v].y,
        r: isBase ? 9 : 5,
        fill: isBase ? "#ffd166" : "#3a3f47",
        stroke: isBase ? "#b4830a" : "none",
        "stroke-width": isBase ? 3 : 0,
        "data-vertex": v,
      }),
    );
    const tag = el("text", {
      x: pos[v].x,
      y: pos[v].y - 10,
      "text-anchor": "middle",
      "font-size": 10,
      fill: "#666",
    });
    tag.textContent = String(v);
    svg.appendChild(tag);
  }
}

export function renderChips(container: HTMLElement, model: BoardModel): void {
  container.innerHTML = "";
  for (const chip of model.chips) {
    const div = document.createElement("div");
    div.className = "chip";
    const badge = (ok: boolean, name: string) =>
      `<span class="flag ${ok ? "ok" : "bad"}">${name}:${ok ? "ok" : "VIOLATED"}</span>`;
    div.innerHTML =
      `<b>component ${chip.label}</b> x=${chip.x} ` +
      badge(chip.sOk, "S") +
      badge(chip.mOk, "M") +
      ` gamma=${chip.gamma} unmatched=${chip.unmatched} colours=${chip.colours}` +
      (chip.relevant ? " relevant" : "") +
      (chip.baseNodes.length ? ` base=${chip.baseNodes.join(",")}` : "");
    container.appendChild(div);
  }
}

export function renderMoveLog(container: HTMLElement, model: BoardModel): void {
  container.innerHTML = "";
  for (const mv of model.moveLog) {
    const row = document.createElement("div");
    const what = mv.action.skip
      ? "skips"
      : `colours edge ${mv.action.edge} with ${mv.action.colour}`;
    row.textContent = `#${mv.move_no} ${mv.player} ${what}${
      mv.case_tag ? ` [${mv.case_tag}]` : ""
    }`;
    container.appendChild(row);
  }
}

export function renderPalette(
  container: HTMLElement,
  k: number,
  feasible: number[],
  onPick: (colour: number) => void,
): void {
  container.innerHTML = "";
  for (let c = 1; c <= k; c++) {
    const btn = document.createElement("button");
    btn.className = "swatch";
    btn.style.background = colourOf(c);
    btn.textContent = String(c);
    btn.disabled = !feasible.includes(c);
    btn.addEventListener("click", () => onPick(c));
    container.appendChild(btn);
  }
}
