/**
 * Wire types and a small client for the game service JSON protocol.
 *
 * The transport is injectable so tests can replay recorded sessions
 * without a network.  Parsing performs light structural validation and
 * otherwise trusts the server.
 */

export interface EdgeState {
  id: number;
  u: number;
  v: number;
  colour: number; // 0 = uncoloured
}

export interface ComponentAnnotation {
  label: number;
  x: number;
  star_like: boolean;
  S_ok: boolean;
  M_ok: boolean;
  gamma: number;
  unmatched: number;
  colours: number;
  relevant: boolean;
  base_nodes: number[];
  size: number;
  vertices: number[];
  matched: number[];
  unmatched_edges: number[];
  leaves: [number, number][];
}

export interface MoveAction {
  edge?: number;
  colour?: number;
  skip?: boolean;
}

export interface MoveEntry {
  move_no: number;
  player: "alice" | "bob";
  action: MoveAction;
  case_tag?: string;
  audit?: Record<string, unknown>;
  report?: Record<string, unknown>;
}

export interface Snapshot {
  id: string;
  move_no: number;
  to_move: "alice" | "bob";
  outcome: string;
  n: number;
  m: number;
  delta: number;
  config: { k: number; first_player: string; bob_may_skip: boolean };
  edges: EdgeState[];
  components: ComponentAnnotation[];
  feasible: Record<string, number[]>;
  dead_edges: number[];
  moves: MoveEntry[];
}

export interface MoveResponse {
  bob: MoveEntry;
  alice: MoveEntry | null;
  outcome: string;
  snapshot: Snapshot;
}

export interface MoveRequest {
  move_no: number;
  edge_id?: number;
  colour?: number;
  skip?: boolean;
}

export interface CreateRequest {
  tree: string;
  k?: number;
  first_player?: string;
  bob_may_skip?: boolean;
}

export interface TransportResult {
  status: number;
  body: unknown;
}

export interface Transport {
  get(path: string): Promise<TransportResult>;
  post(path: string, body: unknown): Promise<TransportResult>;
}

export class HttpTransport implements Transport {
  constructor(private base: string = "") {}

  async get(path: string): Promise<TransportResult> {
    const resp = await fetch(this.base + path);
    return { status: resp.status, body: await resp.json() };
  }

  async post(path: string, body: unknown): Promise<TransportResult> {
    const resp = await fetch(this.base + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    return { status: resp.status, body: await resp.json() };
  }
}

export class ProtocolError extends Error {
  constructor(
    message: string,
    public status: number,
    public detail: unknown = null,
  ) {
    super(message);
  }
}

export function parseSnapshot(obj: unknown): Snapshot {
  if (!obj || typeof obj !== "object") {
    throw new ProtocolError("snapshot is not an object", 0, obj);
  }
  const snap = obj as Snapshot;
  if (typeof snap.id !== "string" || !Array.isArray(snap.edges)) {
    throw new ProtocolError("snapshot missing id/edges", 0, obj);
  }
  for (const e of snap.edges) {
    if (
      typeof e.id !== "number" ||
      typeof e.u !== "number" ||
      typeof e.v !== "number" ||
      typeof e.colour !== "number"
    ) {
      throw new ProtocolError("bad edge record", 0, e);
    }
  }
  if (!Array.isArray(snap.components) || !Array.isArray(snap.moves)) {
    throw new ProtocolError("snapshot missing components/moves", 0, obj);
  }
  return snap;
}

export class GameClient {
  constructor(private transport: Transport) {}

  async createGame(body: CreateRequest): Promise<Snapshot> {
    const res = await this.transport.post("/api/games", body);
    if (res.status !== 200) {
      throw new ProtocolError(`create failed (${res.status})`, res.status, res.body);
    }
    return parseSnapshot(res.body);
  }

  async fetchGame(id: string): Promise<Snapshot> {
    const res = await this.transport.get(`/api/games/${id}`);
    if (res.status !== 200) {
      throw new ProtocolError(`fetch failed (${res.status})`, res.status, res.body);
    }
    return parseSnapshot(res.body);
  }

  async submitMove(id: string, body: MoveRequest): Promise<MoveResponse> {
    const res = await this.transport.post(`/api/games/${id}/moves`, body);
    if (res.status !== 200) {
      throw new ProtocolError(`move rejected (${res.status})`, res.status, res.body);
    }
    const out = res.body as MoveResponse;
    parseSnapshot(out.snapshot);
    return out;
  }

  async hint(id: string): Promise<{ winner_under_optimal_play: string }> {
    const res = await this.transport.get(`/api/games/${id}/hint`);
    if (res.status !== 200) {
      throw new ProtocolError(`hint unavailable (${res.status})`, res.status, res.body);
    }
    return res.body as { winner_under_optimal_play: string };
  }
}
