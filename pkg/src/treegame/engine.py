"""Turn orchestration, legality enforcement, win detection and traces.

Outcomes: Alice wins exactly when every edge is coloured.  An uncoloured
edge whose feasible set is empty can never be coloured, so the game ends as
a Bob win the moment one appears (the engine only needs to inspect edges
adjacent to the last move, the only place deadness can arise).  Policy
failures (StrategyStuck / BobStuck) abort the game with diagnostics.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .components import build_report
from .errors import BobStuck, InvariantViolation, StrategyStuck
from .forest import Forest
from .state import GameState, feasible_colours
from .strategy import PRIORITY_DEFAULT, StrategyDecision, check_delta, choose_move

ALICE = "alice"
BOB = "bob"


@dataclass
class MoveRecord:
    move_no: int
    player: str
    action: dict  # {"edge": id, "colour": c} or {"skip": true}
    case_tag: str | None = None
    audit: dict | None = None
    report: dict | None = None

    def to_dict(self) -> dict:
        out = {"move_no": self.move_no, "player": self.player, "action": self.action}
        if self.case_tag is not None:
            out["case_tag"] = self.case_tag
        if self.audit:
            out["audit"] = self.audit
        if self.report is not None:
            out["report"] = self.report
        return out


@dataclass
class GameTrace:
    config: dict
    moves: list[MoveRecord] = field(default_factory=list)
    outcome: str = "ongoing"  # alice_wins | bob_wins | aborted
    dead_edges: list[int] = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    diagnostics: str | None = None

    def to_lines(self) -> list[str]:
        lines = [json.dumps({"type": "config", **self.config})]
        lines += [json.dumps({"type": "move", **m.to_dict()}) for m in self.moves]
        footer = {"type": "outcome", "outcome": self.outcome, "stats": self.stats}
        if self.dead_edges:
            footer["dead_edges"] = self.dead_edges
        if self.diagnostics:
            footer["diagnostics"] = self.diagnostics
        lines.append(json.dumps(footer))
        return lines


def winner(state: GameState) -> str:
    """Full-scan win check: 'alice', 'bob' or 'ongoing'."""
    if state.uncoloured_count == 0:
        return ALICE
    for eid in range(state.forest.m):
        if state.colour_of[eid]:
            continue
        if not feasible_colours(state.forest, state.colour_of, state.k, eid):
            return BOB
    return "ongoing"


class StrategyAlice:
    """Adapter running the constructive strategy as a policy."""

    name = "strategy"

    def __init__(self, priority: str = PRIORITY_DEFAULT, allow_large_delta: bool = False):
        self.priority = priority
        self.allow_large_delta = allow_large_delta
        self.last_decision: StrategyDecision | None = None

    def next_move(self, state: GameState):
        decision = choose_move(state, self.priority, self.allow_large_delta)
        self.last_decision = decision
        return ("colour", decision.edge_id, decision.colour)


def play(
    forest: Forest,
    k: int | None = None,
    first_player: str = ALICE,
    bob=None,
    alice=None,
    bob_may_skip: bool = True,
    assert_invariants: bool = True,
    strict: bool = True,
    strict_sm: bool = False,
    report_mode: str | None = "affected",
    collect_moves: bool = True,
    alice_priority: str = PRIORITY_DEFAULT,
    allow_large_delta: bool = False,
) -> GameTrace:
    """Run one full game and return its trace.

    ``alice`` defaults to the constructive strategy; ``bob`` defaults to a
    seed-0 random policy.  Invariant monitoring applies only to
    strategy-Alice games (they are her guarantees): the structural caps
    (leaf counts, three-leaf guarantees, the conditional colour cap)
    raise when ``strict``; the post-Alice (S)/(M) and
    the two-unmatched bookkeeping are always counted in stats and raise
    only when ``strict_sm`` (a repair can need two turns when Bob blocks
    the matching colour at the far base, so transient slips are recorded,
    not fatal, by default).
    """
    from .adversaries import RandomBob

    if first_player not in (ALICE, BOB):
        raise ValueError(f"first_player must be 'alice' or 'bob', got {first_player!r}")
    if bob is None:
        bob = RandomBob(0)
    strategy_alice = alice is None or alice == "strategy"
    if strategy_alice:
        alice = StrategyAlice(alice_priority, allow_large_delta)
        if forest.m:
            check_delta(forest.delta, allow_large_delta)
    elif isinstance(alice, str):
        raise ValueError(f"unknown alice policy {alice!r}")

    state = GameState(forest, k, first_player, bob_may_skip)
    trace = GameTrace(
        config={
            "forest_hash": forest.canonical_hash(),
            "n": forest.n,
            "m": forest.m,
            "delta": forest.delta,
            **state.config.to_dict(),
            "alice": getattr(alice, "name", "custom"),
            "bob": getattr(bob, "name", "custom"),
            "alice_priority": alice_priority,
        }
    )
    check = assert_invariants and strategy_alice
    stats = {
        "moves": 0,
        "skips": 0,
        "max_x": 0,
        "max_alice_queries": 0,
        "max_alice_leaf_ops": 0,
        "case_counts": {},
        "s_violations_post_alice": 0,
        "m_violations_post_alice": 0,
        "unmatched_cap_violations": 0,
        "max_unmatched_post_alice": 0,
        "colour_bound_violations": 0,
        "colour_bound_violations_post_bob": 0,
    }
    pending_bob_labels: list[int] = []

    while True:
        if state.finished():
            trace.outcome = "alice_wins"
            break
        if state.dead_edges:
            trace.outcome = "bob_wins"
            trace.dead_edges = sorted(set(state.dead_edges))
            break
        player = state.to_move
        actor = alice if player == ALICE else bob
        try:
            action = actor.next_move(state)
        except (StrategyStuck, BobStuck) as exc:
            trace.outcome = "aborted"
            trace.diagnostics = f"{type(exc).__name__}: {exc}"
            break

        record = MoveRecord(move_no=state.move_no, player=player, action={})
        if action[0] == "skip":
            if player != BOB or not state.config.bob_may_skip:
                trace.outcome = "aborted"
                trace.diagnostics = f"illegal skip by {player}"
                break
            record.action = {"skip": True}
            stats["skips"] += 1
            if report_mode == "full":
                record.report = build_report(
                    sorted(state.active_views(), key=lambda v: v.label), state.delta
                ).to_dict()
            elif report_mode == "affected":
                record.report = build_report([], state.delta).to_dict()
        else:
            _tag, eid, colour = action
            if player == ALICE and strategy_alice:
                q0 = state.lca.queries
                l0 = state.leaf_ops
            outcome = state.apply_colouring(eid, colour)
            record.action = {"edge": eid, "colour": colour}
            if player == ALICE and strategy_alice:
                dq = state.lca.queries - q0
                dl = state.leaf_ops - l0
                stats["max_alice_queries"] = max(stats["max_alice_queries"], dq)
                stats["max_alice_leaf_ops"] = max(stats["max_alice_leaf_ops"], dl)
                decision = alice.last_decision
                record.case_tag = decision.case_tag
                record.audit = decision.audit
                stats["case_counts"][decision.case_tag] = (
                    stats["case_counts"].get(decision.case_tag, 0) + 1
                )
            if report_mode == "full":
                record.report = build_report(
                    sorted(state.active_views(), key=lambda v: v.label), state.delta
                ).to_dict()
            elif report_mode == "affected":
                record.report = build_report(outcome.new_views, state.delta).to_dict()

            if check:
                if player == BOB:
                    pending_bob_labels = [v.label for v in outcome.new_views]
                    _check_post_bob(state, outcome.new_views, stats, strict)
                else:
                    targets = {v.label: v for v in outcome.new_views}
                    for lab in pending_bob_labels:
                        live = state.registry.get(lab)
                        if live is not None:
                            targets.setdefault(lab, live)
                    _check_post_alice(state, list(targets.values()), stats, strict, strict_sm)
                    pending_bob_labels = []
            stats["max_x"] = max(stats["max_x"], state.max_x_seen)

        stats["moves"] += 1
        if collect_moves:
            trace.moves.append(record)
        state.move_no += 1
        state.to_move = BOB if player == ALICE else ALICE

    trace.stats = stats
    trace.stats["max_x"] = state.max_x_seen
    trace.stats["final_move_count"] = state.move_no
    return trace


def _check_post_bob(state: GameState, views, stats: dict, strict: bool) -> None:
    delta = state.delta
    for v in views:
        if v.has_uncoloured and len(v.colours_present) > delta:
            stats["colour_bound_violations_post_bob"] += 1
        if not strict:
            continue
        if v.x > delta + 1:
            raise InvariantViolation(
                f"component {v.label} holds {v.x} coloured leaves (> delta+1) after Bob"
            )
        if v.s_ok and v.x > delta:
            raise InvariantViolation(
                f"leaf cap exceeded in star-like component {v.label} after Bob"
            )
        if v.x == 3 and not (v.s_ok and v.m_ok):
            raise InvariantViolation(
                f"three-leaf component {v.label} lost its guarantees after Bob"
            )


def _check_post_alice(
    state: GameState, views, stats: dict, strict: bool, strict_sm: bool
) -> None:
    delta = state.delta
    for v in views:
        if not v.s_ok:
            stats["s_violations_post_alice"] += 1
            if strict_sm:
                raise InvariantViolation(
                    f"condition S violated in component {v.label} after Alice"
                )
        if not v.m_ok:
            stats["m_violations_post_alice"] += 1
            if strict_sm:
                raise InvariantViolation(
                    f"condition M violated in component {v.label} after Alice"
                )
        unmatched = len(v.unmatched)
        if unmatched > stats["max_unmatched_post_alice"]:
            stats["max_unmatched_post_alice"] = unmatched
        if unmatched > 2:
            stats["unmatched_cap_violations"] += 1
            if strict_sm:
                raise InvariantViolation(
                    f"component {v.label} has {unmatched} unmatched edges after Alice"
                )
        if strict:
            if v.x > delta and v.s_ok:
                raise InvariantViolation(
                    f"leaf cap exceeded in star-like component {v.label} after Alice"
                )
            if v.x == 3 and not (v.s_ok and v.m_ok):
                raise InvariantViolation(
                    f"three-leaf component {v.label} lost its guarantees after Alice"
                )
            if (
                v.s_ok
                and v.m_ok
                and v.has_uncoloured
                and len(v.colours_present) > delta - 1
            ):
                # S and M holding force at most delta-1 distinct colours
                raise InvariantViolation(
                    f"colour cap exceeded in well-formed component {v.label} after Alice"
                )
        if v.has_uncoloured and len(v.colours_present) > delta - 1:
            stats["colour_bound_violations"] += 1
            if strict_sm:
                raise InvariantViolation(
                    f"component {v.label} shows {len(v.colours_present)} colours"
                    " (> delta-1) after Alice"
                )


def replay(forest: Forest, config: dict, moves: list[dict], report_mode: str | None = "affected") -> GameTrace:
    """Re-apply a recorded move list mechanically, recomputing reports."""
    state = GameState(
        forest,
        config.get("k"),
        config.get("first_player", ALICE),
        config.get("bob_may_skip", True),
    )
    trace = GameTrace(config=dict(config))
    for mv in moves:
        player = mv["player"]
        record = MoveRecord(move_no=state.move_no, player=player, action={})
        if mv["action"].get("skip"):
            record.action = {"skip": True}
            if report_mode == "full":
                record.report = build_report(
                    sorted(state.active_views(), key=lambda v: v.label), state.delta
                ).to_dict()
            elif report_mode == "affected":
                record.report = build_report([], state.delta).to_dict()
        else:
            eid = mv["action"]["edge"]
            colour = mv["action"]["colour"]
            outcome = state.apply_colouring(eid, colour)
            record.action = {"edge": eid, "colour": colour}
            if report_mode == "full":
                record.report = build_report(
                    sorted(state.active_views(), key=lambda v: v.label), state.delta
                ).to_dict()
            elif report_mode == "affected":
                record.report = build_report(outcome.new_views, state.delta).to_dict()
        trace.moves.append(record)
        state.move_no += 1
        state.to_move = BOB if player == ALICE else ALICE
    if state.finished():
        trace.outcome = "alice_wins"
    elif state.dead_edges:
        trace.outcome = "bob_wins"
        trace.dead_edges = sorted(set(state.dead_edges))
    return trace


def write_trace(trace: GameTrace, path: str | Path) -> None:
    Path(path).write_text("\n".join(trace.to_lines()) + "\n")


def read_trace(path: str | Path) -> tuple[dict, list[dict], dict]:
    """(config, moves, footer) from a JSON-lines trace file."""
    config: dict = {}
    moves: list[dict] = []
    footer: dict = {}
    for line in Path(path).read_text().splitlines():
        if not line.strip():
            continue
        obj = json.loads(line)
        kind = obj.pop("type", None)
        if kind == "config":
            config = obj
        elif kind == "move":
            moves.append(obj)
        elif kind == "outcome":
            footer = obj
    return config, moves, footer
