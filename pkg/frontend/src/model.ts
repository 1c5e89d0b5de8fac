/**
 * BoardModel: the pure view-state derived from one server snapshot.
 * No game rules live here; feasibility previews come straight from the
 * snapshot, and the S/M chips mirror the server's component annotations
 * bit for bit.
 */
import { radialLayout, Point } from "./layout.js";
import { ComponentAnnotation, MoveEntry, Snapshot } from "./protocol.js";

export interface EdgeView {
  id: number;
  u: number;
  v: number;
  colour: number;
  feasible: number[];
  dead: boolean;
  selectable: boolean;
}

export interface ComponentChip {
  label: number;
  x: number;
  starLike: boolean;
  sOk: boolean;
  mOk: boolean;
  gamma: number;
  unmatched: number;
  colours: number;
  relevant: boolean;
  baseNodes: number[];
  unmatchedEdges: number[];
  vertices: number[];
}

export interface AliceReply {
  edge: number | null;
  colour: number | null;
  caseTag: string | null;
}

export interface BoardModel {
  outcome: string;
  toMove: string;
  moveNo: number;
  k: number;
  delta: number;
  bobMaySkip: boolean;
  positions: Point[];
  edges: EdgeView[];
  chips: ComponentChip[];
  baseNodeSet: Set<number>;
  unmatchedEdgeSet: Set<number>;
  moveLog: MoveEntry[];
  lastAlice: AliceReply | null;
  humanTurn: boolean;
}

function chipFromAnnotation(c: ComponentAnnotation): ComponentChip {
  return {
    label: c.label,
    x: c.x,
    starLike: c.star_like,
    sOk: c.S_ok,
    mOk: c.M_ok,
    gamma: c.gamma,
    unmatched: c.unmatched,
    colours: c.colours,
    relevant: c.relevant,
    baseNodes: [...c.base_nodes],
    unmatchedEdges: [...c.unmatched_edges],
    vertices: [...c.vertices],
  };
}

export function buildBoardModel(
  snap: Snapshot,
  width = 640,
  height = 640,
): BoardModel {
  const edgePairs = snap.edges.map((e) => [e.u, e.v] as [number, number]);
  const positions = radialLayout(snap.n, edgePairs, width, height);
  const dead = new Set(snap.dead_edges);
  const humanTurn = snap.outcome === "ongoing" && snap.to_move === "bob";
  const edges: EdgeView[] = snap.edges.map((e) => ({
    id: e.id,
    u: e.u,
    v: e.v,
    colour: e.colour,
    feasible: snap.feasible[String(e.id)] ?? [],
    dead: dead.has(e.id),
    selectable: humanTurn && e.colour === 0,
  }));
  const chips = snap.components.map(chipFromAnnotation);
  const baseNodeSet = new Set<number>();
  const unmatchedEdgeSet = new Set<number>();
  for (const chip of chips) {
    for (const b of chip.baseNodes) baseNodeSet.add(b);
    for (const e of chip.unmatchedEdges) unmatchedEdgeSet.add(e);
  }
  let lastAlice: AliceReply | null = null;
  for (let i = snap.moves.length - 1; i >= 0; i--) {
    const mv = snap.moves[i];
    if (mv.player === "alice") {
      lastAlice = {
        edge: mv.action.edge ?? null,
        colour: mv.action.colour ?? null,
        caseTag: mv.case_tag ?? null,
      };
      break;
    }
  }
  return {
    outcome: snap.outcome,
    toMove: snap.to_move,
    moveNo: snap.move_no,
    k: snap.config.k,
    delta: snap.delta,
    bobMaySkip: snap.config.bob_may_skip,
    positions,
    edges,
    chips,
    baseNodeSet,
    unmatchedEdgeSet,
    moveLog: snap.moves,
    lastAlice,
    humanTurn,
  };
}

/** Numeric-labelled swatches: hue alone never carries the meaning. */
export const PALETTE = [
  "#4269d0",
  "#efb118",
  "#ff725c",
  "#6cc5b0",
  "#a463f2",
  "#97bbf5",
  "#9c6b4e",
];

export function colourOf(c: number): string {
  return PALETTE[(c - 1) % PALETTE.length];
}
