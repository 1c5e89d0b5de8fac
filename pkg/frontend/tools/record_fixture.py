"""Record a deterministic full game session against the real service.

Produces fixtures/session.json: the create response plus every move
request/response pair, ending in an Alice win.  The UI test-suite replays
this against a mock transport.
"""
import json
import random
import sys
from pathlib import Path

from fastapi.testclient import TestClient

from treegame.forest import Forest
from treegame.service import create_app


def main(seed: int = 20260810) -> None:
    rng = random.Random(seed)
    tree = Forest(
        10,
        [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6), (2, 7), (7, 8), (8, 9)],
    )
    assert tree.delta == 4
    client = TestClient(create_app())
    create_body = {"tree": tree.to_text(), "k": 5, "first_player": "alice"}
    created = client.post("/api/games", json=create_body)
    snap = created.json()
    create_response = snap
    turns = []
    while snap["outcome"] == "ongoing":
        uncoloured = [e["id"] for e in snap["edges"] if not e["colour"]]
        eid = rng.choice(uncoloured)
        feas = snap["feasible"][str(eid)]
        if feas and rng.random() > 0.2:
            request = {"move_no": snap["move_no"], "edge_id": eid, "colour": rng.choice(feas)}
        else:
            request = {"move_no": snap["move_no"], "skip": True}
        resp = client.post(f"/api/games/{snap['id']}/moves", json=request)
        body = resp.json()
        turns.append({"request": request, "response": body})
        snap = body["snapshot"]
    out = {
        "create_request": create_body,
        "create_response": create_response,
        "turns": turns,
        "final_snapshot": snap,
    }
    path = Path(__file__).resolve().parent.parent / "fixtures" / "session.json"
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(out, indent=1))
    print(f"wrote {path}: {len(turns)} turns, outcome={snap['outcome']}")


if __name__ == "__main__":
    sys.exit(main())
