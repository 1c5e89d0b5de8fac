import { describe, expect, it } from "vitest";

import { buildBoardModel } from "../src/model.js";
import { GameClient } from "../src/protocol.js";
import { loadSession, MockTransport } from "./fixture.js";

const session = loadSession();

describe("recorded session replay", () => {
  it("reproduces the final board and wins for Alice", async () => {
    const client = new GameClient(new MockTransport(session));
    let snap = await client.createGame(session.create_request);
    for (const turn of session.turns) {
      const resp = await client.submitMove(snap.id, turn.request);
      snap = resp.snapshot;
    }
    expect(snap.outcome).toBe("alice_wins");

    const replayed = buildBoardModel(snap);
    const golden = buildBoardModel(session.final_snapshot);
    expect(replayed).toEqual(golden);
  });

  it("ends with a move log identical to the server trace", async () => {
    const client = new GameClient(new MockTransport(session));
    let snap = await client.createGame(session.create_request);
    for (const turn of session.turns) {
      snap = (await client.submitMove(snap.id, turn.request)).snapshot;
    }
    expect(snap.moves).toEqual(session.final_snapshot.moves);
    // alternating players, Bob skips recorded as first-class moves
    const players = snap.moves.map((m) => m.player);
    for (let i = 1; i < players.length; i++) {
      expect(players[i]).not.toBe(players[i - 1]);
    }
  });

  it("every Alice reply carries a strategy case tag", async () => {
    for (const turn of session.turns) {
      if (turn.response.alice && !turn.response.alice.action.skip) {
        expect(turn.response.alice.case_tag).toBeTruthy();
      }
    }
  });
});
