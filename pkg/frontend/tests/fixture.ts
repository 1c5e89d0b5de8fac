import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import {
  MoveRequest,
  MoveResponse,
  Snapshot,
  Transport,
  TransportResult,
} from "../src/protocol.js";

export interface RecordedTurn {
  request: MoveRequest;
  response: MoveResponse;
}

export interface RecordedSession {
  create_request: { tree: string; k?: number; first_player?: string };
  create_response: Snapshot;
  turns: RecordedTurn[];
  final_snapshot: Snapshot;
}

export function loadSession(): RecordedSession {
  const here = dirname(fileURLToPath(import.meta.url));
  const raw = readFileSync(join(here, "..", "fixtures", "session.json"), "utf8");
  return JSON.parse(raw) as RecordedSession;
}

/** Serves the recorded session in order; any divergence is an error. */
export class MockTransport implements Transport {
  private turn = 0;
  private latest: Snapshot;

  constructor(private session: RecordedSession) {
    this.latest = session.create_response;
  }

  async get(path: string): Promise<TransportResult> {
    if (path.endsWith("/hint")) {
      return { status: 409, body: { detail: "oracle cap" } };
    }
    return { status: 200, body: this.latest };
  }

  async post(path: string, body: unknown): Promise<TransportResult> {
    if (path === "/api/games") {
      this.latest = this.session.create_response;
      return { status: 200, body: this.session.create_response };
    }
    const expected = this.session.turns[this.turn];
    if (!expected) {
      return { status: 409, body: { detail: "no more recorded turns" } };
    }
    const got = JSON.stringify(body);
    const want = JSON.stringify(expected.request);
    if (got !== want) {
      return {
        status: 409,
        body: { detail: `request diverged from recording: ${got} != ${want}` },
      };
    }
    this.turn += 1;
    this.latest = expected.response.snapshot;
    return { status: 200, body: expected.response };
  }
}
