import random

import pytest
from fastapi.testclient import TestClient

from treegame.engine import replay
from treegame.forest import parse_forest, star_forest
from treegame.service import create_app

from .conftest import random_tree

K14 = star_forest(4).to_text()


@pytest.fixture
def client():
    return TestClient(create_app())


def test_create_game_alice_moves_immediately(client):
    r = client.post("/api/games", json={"tree": K14, "k": 5})
    assert r.status_code == 200
    snap = r.json()
    coloured = [e for e in snap["edges"] if e["colour"]]
    assert len(coloured) == 1
    assert snap["to_move"] == "bob"
    assert snap["move_no"] == 1


def test_create_game_bob_first(client):
    r = client.post("/api/games", json={"tree": K14, "first_player": "bob"})
    snap = r.json()
    assert snap["move_no"] == 0
    assert all(e["colour"] == 0 for e in snap["edges"])


def test_unknown_game_404(client):
    assert client.get("/api/games/nope").status_code == 404


def test_malformed_tree_422(client):
    r = client.post("/api/games", json={"tree": "3\n0 1\n1 2\n2 0\n"})
    assert r.status_code == 422


def test_wrong_delta_rejected(client):
    r = client.post("/api/games", json={"tree": "3\n0 1\n1 2\n"})
    assert r.status_code == 422


def test_improper_move_409_with_feasible_list(client):
    snap = client.post("/api/games", json={"tree": K14, "k": 5}).json()
    coloured = [e for e in snap["edges"] if e["colour"]][0]
    target = [e for e in snap["edges"] if not e["colour"]][0]
    r = client.post(
        f"/api/games/{snap['id']}/moves",
        json={
            "move_no": snap["move_no"],
            "edge_id": target["id"],
            "colour": coloured["colour"],
        },
    )
    assert r.status_code == 409
    body = r.json()["detail"]
    assert coloured["colour"] not in body["feasible"]
    assert body["feasible"]


def test_stale_move_no_409(client):
    snap = client.post("/api/games", json={"tree": K14, "k": 5}).json()
    target = [e for e in snap["edges"] if not e["colour"]][0]
    feas = snap["feasible"][str(target["id"])]
    r = client.post(
        f"/api/games/{snap['id']}/moves",
        json={"move_no": snap["move_no"] + 5, "edge_id": target["id"], "colour": feas[0]},
    )
    assert r.status_code == 409


def test_skip_flow(client):
    snap = client.post("/api/games", json={"tree": K14, "k": 5}).json()
    r = client.post(
        f"/api/games/{snap['id']}/moves", json={"move_no": snap["move_no"], "skip": True}
    )
    assert r.status_code == 200
    body = r.json()
    assert body["bob"]["action"] == {"skip": True}
    assert body["alice"]["action"].get("edge") is not None
    # move log grew by two entries
    assert len(body["snapshot"]["moves"]) == len(snap["moves"]) + 2


def test_full_game_and_replay_equivalence(client):
    rng = random.Random(12)
    tree = random_tree(18, rng, delta_cap=4)
    assert tree.delta == 4
    snap = client.post("/api/games", json={"tree": tree.to_text(), "k": 5}).json()
    gid = snap["id"]
    while snap["outcome"] == "ongoing":
        feas = snap["feasible"]
        uncoloured = [e["id"] for e in snap["edges"] if not e["colour"]]
        assert uncoloured
        eid = rng.choice(uncoloured)
        colours = feas[str(eid)]
        if not colours:
            r = client.post(
                f"/api/games/{gid}/moves", json={"move_no": snap["move_no"], "skip": True}
            )
        else:
            r = client.post(
                f"/api/games/{gid}/moves",
                json={
                    "move_no": snap["move_no"],
                    "edge_id": eid,
                    "colour": rng.choice(colours),
                },
            )
        assert r.status_code == 200, r.json()
        snap = r.json()["snapshot"]
    assert snap["outcome"] == "alice_wins"
    # server trace replays identically through the in-process engine
    forest = parse_forest(tree.to_text())
    tr = replay(forest, snap["config"], snap["moves"], report_mode="affected")
    assert tr.outcome == "alice_wins"
    for srv, local in zip(snap["moves"], tr.moves):
        assert srv["action"] == local.to_dict()["action"]
        if "report" in srv and local.report is not None:
            assert srv["report"] == local.report


def test_snapshot_is_pure_function_of_history(client):
    snap = client.post("/api/games", json={"tree": K14, "k": 5}).json()
    again = client.get(f"/api/games/{snap['id']}").json()
    assert snap == again


def test_hint_endpoint(client):
    snap = client.post("/api/games", json={"tree": K14, "k": 5}).json()
    r = client.get(f"/api/games/{snap['id']}/hint")
    assert r.status_code == 200
    assert r.json()["winner_under_optimal_play"] == "alice"


def test_hint_cap(client):
    rng = random.Random(9)
    big = random_tree(40, rng, delta_cap=4)
    snap = client.post("/api/games", json={"tree": big.to_text()}).json()
    r = client.get(f"/api/games/{snap['id']}/hint")
    assert r.status_code == 409
