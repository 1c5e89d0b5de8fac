"""JSON/HTTP game service: a human plays Bob against the strategy engine.

Sessions live in process memory.  Every move submission carries the client's
``move_no`` for optimistic concurrency: a stale number is rejected with 409
and the client re-fetches the snapshot.  Snapshots are pure functions of the
move history, and every Alice reply runs through the same state machinery
as in-process games.
"""
from __future__ import annotations

import secrets
import threading
import time
from dataclasses import dataclass, field

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel

from .components import build_report
from .engine import MoveRecord
from .errors import GameError, ImproperColour, StrategyStuck
from .forest import Forest, parse_forest
from .oracle import CapExceeded, SolveConfig, solve_position
from .state import GameState
from .strategy import StrategyDecision, choose_move

SNAPSHOT_FEASIBLE_LIMIT = 512
COMPONENT_VERTEX_LIMIT = 5000
ORACLE_CAP = 9


class CreateGame(BaseModel):
    tree: str
    k: int | None = None
    first_player: str = "alice"
    bob_may_skip: bool = True


class SubmitMove(BaseModel):
    move_no: int
    edge_id: int | None = None
    colour: int | None = None
    skip: bool = False


@dataclass
class Session:
    id: str
    state: GameState
    forest: Forest
    moves: list[MoveRecord] = field(default_factory=list)
    outcome: str = "ongoing"
    created: float = field(default_factory=time.time)
    updated: float = field(default_factory=time.time)
    lock: threading.Lock = field(default_factory=threading.Lock)


def _refresh_outcome(session: Session) -> None:
    if session.state.finished():
        session.outcome = "alice_wins"
    elif session.state.dead_edges:
        session.outcome = "bob_wins"


def _alice_step(session: Session) -> MoveRecord | None:
    state = session.state
    _refresh_outcome(session)
    if session.outcome != "ongoing" or state.to_move != "alice":
        return None
    try:
        decision: StrategyDecision = choose_move(state)
    except StrategyStuck as exc:
        session.outcome = "aborted"
        record = MoveRecord(state.move_no, "alice", {"stuck": str(exc)})
        session.moves.append(record)
        return record
    outcome = state.apply_colouring(decision.edge_id, decision.colour)
    record = MoveRecord(
        state.move_no,
        "alice",
        {"edge": decision.edge_id, "colour": decision.colour},
        case_tag=decision.case_tag,
        audit=decision.audit,
        report=build_report(outcome.new_views, state.delta).to_dict(),
    )
    session.moves.append(record)
    state.move_no += 1
    state.to_move = "bob"
    _refresh_outcome(session)
    return record


def snapshot(session: Session) -> dict:
    state = session.state
    forest = session.forest
    edges = [
        {"id": eid, "u": u, "v": v, "colour": state.colour_of[eid]}
        for eid, (u, v) in enumerate(forest.edges)
    ]
    components = []
    if forest.n <= COMPONENT_VERTEX_LIMIT:
        groups: dict[int, list[int]] = {}
        for v in range(forest.n):
            groups.setdefault(state.df.find(v), []).append(v)
        for view in sorted(state.active_views(), key=lambda w: w.label):
            entry = view.to_dict()
            entry["vertices"] = groups.get(view.label, [])
            entry["matched"] = list(view.matched)
            entry["unmatched_edges"] = list(view.unmatched)
            entry["leaves"] = [list(t) for t in view.leaves]
            components.append(entry)
    feasible = {}
    if forest.m <= SNAPSHOT_FEASIBLE_LIMIT:
        feasible = {
            str(eid): state.feasible(eid)
            for eid in range(forest.m)
            if not state.colour_of[eid]
        }
    return {
        "id": session.id,
        "move_no": state.move_no,
        "to_move": state.to_move,
        "outcome": session.outcome,
        "n": forest.n,
        "m": forest.m,
        "delta": forest.delta,
        "config": state.config.to_dict(),
        "edges": edges,
        "components": components,
        "feasible": feasible,
        "dead_edges": sorted(set(state.dead_edges)),
        "moves": [m.to_dict() for m in session.moves],
    }


def create_app() -> FastAPI:
    app = FastAPI(title="tree edge-colouring game service")
    sessions: dict[str, Session] = {}
    app.state.sessions = sessions

    def get_session(game_id: str) -> Session:
        session = sessions.get(game_id)
        if session is None:
            raise HTTPException(404, f"unknown game {game_id}")
        return session

    @app.post("/api/games")
    def create_game(body: CreateGame):
        try:
            forest = parse_forest(body.tree)
        except (GameError, ValueError) as exc:
            raise HTTPException(422, f"bad tree: {exc}")
        if body.first_player not in ("alice", "bob"):
            raise HTTPException(422, "first_player must be 'alice' or 'bob'")
        try:
            state = GameState(forest, body.k, body.first_player, body.bob_may_skip)
        except ValueError as exc:
            raise HTTPException(422, str(exc))
        if forest.m and not (4 <= forest.delta <= 5):
            raise HTTPException(
                422,
                f"the engine plays maximum degree 4 or 5 (got {forest.delta})",
            )
        session = Session(id=secrets.token_hex(8), state=state, forest=forest)
        sessions[session.id] = session
        with session.lock:
            _alice_step(session)
            session.updated = time.time()
            return snapshot(session)

    @app.get("/api/games/{game_id}")
    def get_game(game_id: str):
        session = get_session(game_id)
        with session.lock:
            return snapshot(session)

    @app.post("/api/games/{game_id}/moves")
    def submit_move(game_id: str, body: SubmitMove):
        session = get_session(game_id)
        with session.lock:
            state = session.state
            if session.outcome != "ongoing":
                raise HTTPException(409, f"game over: {session.outcome}")
            if body.move_no != state.move_no:
                raise HTTPException(
                    409,
                    f"stale move_no {body.move_no}; the game is at {state.move_no}",
                )
            if state.to_move != "bob":
                raise HTTPException(409, "not your turn")
            if body.skip:
                if not state.config.bob_may_skip:
                    raise HTTPException(409, "skipping is disabled in this game")
                bob_record = MoveRecord(
                    state.move_no,
                    "bob",
                    {"skip": True},
                    report=build_report([], state.delta).to_dict(),
                )
            else:
                if body.edge_id is None or body.colour is None:
                    raise HTTPException(422, "edge_id and colour are required")
                try:
                    outcome = state.apply_colouring(body.edge_id, body.colour)
                except ImproperColour as exc:
                    feas = (
                        state.feasible(body.edge_id)
                        if 0 <= body.edge_id < session.forest.m
                        and not state.colour_of[body.edge_id]
                        else []
                    )
                    raise HTTPException(
                        409,
                        detail={"error": str(exc), "feasible": feas},
                    )
                except GameError as exc:
                    raise HTTPException(409, str(exc))
                bob_record = MoveRecord(
                    state.move_no,
                    "bob",
                    {"edge": body.edge_id, "colour": body.colour},
                    report=build_report(outcome.new_views, state.delta).to_dict(),
                )
            session.moves.append(bob_record)
            state.move_no += 1
            state.to_move = "alice"
            alice_record = _alice_step(session)
            session.updated = time.time()
            return {
                "bob": bob_record.to_dict(),
                "alice": alice_record.to_dict() if alice_record else None,
                "outcome": session.outcome,
                "snapshot": snapshot(session),
            }

    @app.get("/api/games/{game_id}/hint")
    def hint(game_id: str):
        session = get_session(game_id)
        with session.lock:
            state = session.state
            uncoloured = state.uncoloured_count
            if uncoloured > ORACLE_CAP:
                raise HTTPException(
                    409, f"{uncoloured} uncoloured edges exceed the oracle cap {ORACLE_CAP}"
                )
            try:
                value = solve_position(
                    session.forest,
                    SolveConfig(state.k, bob_may_skip=state.config.bob_may_skip, cap=ORACLE_CAP),
                    list(state.colour_of),
                    state.to_move,
                )
            except CapExceeded as exc:
                raise HTTPException(409, str(exc))
            return {
                "winner_under_optimal_play": value,
                "to_move": state.to_move,
                "uncoloured": uncoloured,
            }

    return app


app = create_app()
