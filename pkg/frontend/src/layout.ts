/**
 * Radial tree layout: the centre of the tree sits mid-canvas and every
 * subtree receives an angular wedge proportional to its leaf count.
 * Deterministic for a given edge list, recomputed per snapshot.
 */

export interface Point {
  x: number;
  y: number;
}

interface Adj {
  [v: number]: number[];
}

function buildAdjacency(n: number, edges: Array<[number, number]>): Adj {
  const adj: Adj = {};
  for (let v = 0; v < n; v++) adj[v] = [];
  for (const [u, v] of edges) {
    adj[u].push(v);
    adj[v].push(u);
  }
  return adj;
}

/** Tree centre via leaf peeling (smaller id on ties). */
export function treeCentre(n: number, edges: Array<[number, number]>): number {
  if (n === 0) return 0;
  if (edges.length === 0) return 0;
  const adj = buildAdjacency(n, edges);
  const degree = new Array<number>(n).fill(0);
  const present = new Array<boolean>(n).fill(false);
  for (const [u, v] of edges) {
    degree[u]++;
    degree[v]++;
    present[u] = present[v] = true;
  }
  let remaining = present.filter(Boolean).length;
  let layer: number[] = [];
  for (let v = 0; v < n; v++) if (present[v] && degree[v] <= 1) layer.push(v);
  const dead = new Array<boolean>(n).fill(false);
  while (remaining > 2) {
    const nxt: number[] = [];
    for (const v of layer) {
      if (dead[v]) continue;
      dead[v] = true;
      remaining--;
      for (const w of adj[v]) {
        if (dead[w]) continue;
        degree[w]--;
        if (degree[w] === 1) nxt.push(w);
      }
    }
    layer = nxt;
  }
  const centres = [];
  for (let v = 0; v < n; v++) if (present[v] && !dead[v]) centres.push(v);
  return centres.length ? Math.min(...centres) : 0;
}

export function radialLayout(
  n: number,
  edges: Array<[number, number]>,
  width: number,
  height: number,
): Point[] {
  const points: Point[] = new Array(n);
  const cx = width / 2;
  const cy = height / 2;
  if (n === 0) return points;
  const adj = buildAdjacency(n, edges);
  const root = treeCentre(n, edges);

  // subtree leaf weights, iterative post-order from the root
  const parent = new Array<number>(n).fill(-2);
  const order: number[] = [];
  const stack = [root];
  parent[root] = -1;
  while (stack.length) {
    const v = stack.pop()!;
    order.push(v);
    for (const w of adj[v]) {
      if (parent[w] === -2) {
        parent[w] = v;
        stack.push(w);
      }
    }
  }
  const weight = new Array<number>(n).fill(0);
  for (let i = order.length - 1; i >= 0; i--) {
    const v = order[i];
    let kids = 0;
    for (const w of adj[v]) {
      if (parent[w] === v) {
        weight[v] += weight[w];
        kids++;
      }
    }
    if (kids === 0) weight[v] = 1;
  }

  // depth for ring radius
  let maxDepth = 1;
  const depth = new Array<number>(n).fill(0);
  for (const v of order) {
    if (parent[v] >= 0) {
      depth[v] = depth[parent[v]] + 1;
      if (depth[v] > maxDepth) maxDepth = depth[v];
    }
  }
  const ring = (Math.min(width, height) / 2 - 28) / maxDepth;

  // assign wedges in vertex-id order for determinism
  const place = (v: number, lo: number, hi: number) => {
    const angle = (lo + hi) / 2;
    const r = depth[v] * ring;
    points[v] = { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) };
    const kids = adj[v].filter((w) => parent[w] === v).sort((a, b) => a - b);
    let at = lo;
    const total = kids.reduce((acc, w) => acc + weight[w], 0) || 1;
    for (const w of kids) {
      const span = ((hi - lo) * weight[w]) / total;
      place(w, at, at + span);
      at += span;
    }
  };
  place(root, 0, 2 * Math.PI);

  // isolated vertices (not reached) go on an outer arc
  let spare = 0;
  for (let v = 0; v < n; v++) {
    if (!points[v]) {
      const angle = (spare++ * Math.PI) / 8;
      const r = Math.min(width, height) / 2 - 10;
      points[v] = { x: cx + r * Math.cos(angle), y: cy + r * Math.sin(angle) };
    }
  }
  return points;
}
