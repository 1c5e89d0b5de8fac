"""Exhaustive verification: the constructive strategy against every Bob line.

For a small forest this walks the full game tree with Alice playing the
strategy and Bob branching over every legal action (including Skip),
memoizing on (colouring, mover).  Memoization is sound because the
strategy's choices depend on the colouring alone (canonical component
keys), never on component-label history.

Per unique post-Alice position the walker accounts for the structural
invariants; a single counterexample anywhere in the tree is reported with
a replayable move path.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .adversaries import exhaustive_bob
from .components import build_view, snapshot_components
from .errors import StrategyStuck
from .forest import Forest
from .lca import LcaIndex, build as build_lca
from .state import GameConfig
from .strategy import PRIORITY_DEFAULT, choose_move

_BUCKET_ORDER = ("s", "m", "star_u", "star", "x2", "x1", "x0")


class BruteState:
    """Strategy provider recomputing everything from a bare colouring."""

    def __init__(
        self,
        forest: Forest,
        lca: LcaIndex,
        k: int,
        colour_of: list[int],
        bob_may_skip: bool = True,
    ):
        self.forest = forest
        self.lca = lca
        self.k = k
        self.delta = forest.delta
        self.colour_of = colour_of
        self.uncoloured_count = colour_of.count(0)
        self.config = GameConfig(k, bob_may_skip=bob_may_skip)
        self._views = None

    def views(self):
        if self._views is None:
            forest = self.forest
            out = []
            for members, leaves in snapshot_components(forest, self.colour_of):
                if len(members) < 2:
                    continue
                if leaves:
                    min_edge = -1
                else:
                    min_edge = min(e for v in members for e in forest.adj[v])
                out.append(
                    build_view(
                        members[0],
                        leaves,
                        len(members),
                        self.colour_of,
                        forest,
                        self.lca,
                        x0_min_edge=min_edge,
                    )
                )
            self._views = out
        return self._views

    def peek(self, kind: str):
        best = None
        for view in self.views():
            bucket = _bucket(view)
            if kind == "star_u":
                if bucket != "star" or not view.unmatched:
                    continue
            elif bucket != kind:
                continue
            if best is None or view.key < best.key:
                best = view
        return best


def _bucket(view) -> str:
    if not view.s_ok:
        return "s"
    if not view.m_ok:
        return "m"
    if view.x >= 3:
        return "star"
    return f"x{view.x}"


@dataclass
class BranchStats:
    """Aggregates over every reachable position of one exhaustive run."""

    unique_states: int = 0
    alice_states: int = 0
    bob_actions: int = 0
    alice_wins: bool = True
    stuck: int = 0
    s_violations: int = 0
    m_violations: int = 0
    unmatched_cap_violations: int = 0
    colour_bound_violations: int = 0
    leaf_cap_violations: int = 0
    three_leaf_violations: int = 0
    max_unmatched_post_alice: int = 0
    losing_path: list | None = None
    violation_examples: dict = field(default_factory=dict)

    def clean(self) -> bool:
        return (
            self.alice_wins
            and self.stuck == 0
            and self.s_violations == 0
            and self.m_violations == 0
            and self.unmatched_cap_violations == 0
        )


def verify_forest(
    forest: Forest,
    k: int | None = None,
    first_players: tuple[str, ...] = ("alice", "bob"),
    bob_may_skip: bool = True,
    budget: int = 8,
    priority: str = PRIORITY_DEFAULT,
) -> BranchStats:
    """Play the strategy against every Bob line from the empty board."""
    if k is None:
        k = forest.delta + 1
    lca = build_lca(forest)
    stats = BranchStats()
    memo: dict[tuple, bool] = {}
    m = forest.m
    start = tuple([0] * m)

    def brute(col: tuple) -> BruteState:
        return BruteState(forest, lca, k, list(col), bob_may_skip)

    def dead_edge(col: tuple) -> bool:
        for eid in range(m):
            if col[eid]:
                continue
            u, v = forest.edges[eid]
            used = set()
            for e2 in forest.adj[u]:
                if col[e2]:
                    used.add(col[e2])
            for e2 in forest.adj[v]:
                if col[e2]:
                    used.add(col[e2])
            if len(used) >= k:
                return True
        return False

    def account_post_alice(col: tuple) -> None:
        for view in brute(col).views():
            if not view.s_ok:
                stats.s_violations += 1
                stats.violation_examples.setdefault("s", col)
            if not view.m_ok:
                stats.m_violations += 1
                stats.violation_examples.setdefault("m", col)
            unm = len(view.unmatched)
            if unm > stats.max_unmatched_post_alice:
                stats.max_unmatched_post_alice = unm
            if unm > 2:
                stats.unmatched_cap_violations += 1
                stats.violation_examples.setdefault("unmatched_cap", col)
            if view.has_uncoloured and len(view.colours_present) > forest.delta - 1:
                stats.colour_bound_violations += 1
                stats.violation_examples.setdefault("colours", col)

    def walk(col: tuple, alice_to_move: bool) -> bool:
        if 0 not in col:
            return True
        key = (col, alice_to_move)
        got = memo.get(key)
        if got is not None:
            return got
        stats.unique_states += 1
        # structural caps audited at every reachable position
        for view in brute(col).views():
            if view.s_ok and view.x > forest.delta:
                stats.leaf_cap_violations += 1
                stats.violation_examples.setdefault("leaf_cap", col)
            if view.x == 3 and not (view.s_ok and view.m_ok):
                stats.three_leaf_violations += 1
                stats.violation_examples.setdefault("three_leaf", col)
        if dead_edge(col):
            memo[key] = False
            return False
        if alice_to_move:
            stats.alice_states += 1
            st = brute(col)
            try:
                decision = choose_move(st, priority)
            except StrategyStuck:
                stats.stuck += 1
                memo[key] = False
                return False
            child = list(col)
            child[decision.edge_id] = decision.colour
            child_t = tuple(child)
            account_post_alice(child_t)
            result = walk(child_t, False)
        else:
            result = True
            st = brute(col)
            for action in exhaustive_bob(st, budget):
                stats.bob_actions += 1
                if action[0] == "skip":
                    ok = walk(col, True)
                else:
                    _t, eid, colour = action
                    child = list(col)
                    child[eid] = colour
                    ok = walk(tuple(child), True)
                if not ok:
                    result = False
                    break
        memo[key] = result
        return result

    for fp in first_players:
        if not walk(start, fp == "alice"):
            stats.alice_wins = False
            stats.losing_path = _find_losing_path(
                forest, lca, k, memo, start, fp == "alice", bob_may_skip, budget, priority
            )
    return stats


def _find_losing_path(
    forest, lca, k, memo, start, alice_first, bob_may_skip, budget, priority
):
    """Rebuild one losing line from the memo table (diagnostics only)."""
    path = []
    col = start
    alice_to_move = alice_first
    for _ in range(4 * forest.m + 4):
        if 0 not in col:
            break
        st = BruteState(forest, lca, k, list(col), bob_may_skip)
        if alice_to_move:
            try:
                d = choose_move(st, priority)
            except StrategyStuck:
                path.append(("alice", "stuck"))
                break
            col = tuple(
                d.colour if i == d.edge_id else c for i, c in enumerate(col)
            )
            path.append(("alice", d.edge_id, d.colour, d.case_tag))
        else:
            advanced = False
            for action in exhaustive_bob(st, budget):
                if action[0] == "skip":
                    child = col
                else:
                    child = tuple(
                        action[2] if i == action[1] else c for i, c in enumerate(col)
                    )
                if memo.get((child, True)) is False:
                    path.append(("bob",) + action)
                    col = child
                    advanced = True
                    break
            if not advanced:
                break
        alice_to_move = not alice_to_move
    return path


def verify_trees(
    max_edges: int = 8,
    deltas: tuple[int, ...] = (4, 5),
    bob_may_skip: bool = True,
    first_players: tuple[str, ...] = ("alice", "bob"),
    k_offset: int = 1,
) -> dict:
    """Run verify_forest over every non-isomorphic tree with <= max_edges
    edges and maximum degree in ``deltas``.  Returns aggregate results."""
    from .oracle import enumerate_trees

    agg = {
        "trees": 0,
        "all_alice_wins": True,
        "stuck": 0,
        "unique_states": 0,
        "s_violations": 0,
        "m_violations": 0,
        "unmatched_cap_violations": 0,
        "colour_bound_violations": 0,
        "leaf_cap_violations": 0,
        "three_leaf_violations": 0,
        "max_unmatched_post_alice": 0,
        "failures": [],
    }
    for delta in deltas:
        for n in range(delta + 1, max_edges + 2):
            for tree in enumerate_trees(n, delta_filter=delta):
                if tree.m > max_edges:
                    continue
                stats = verify_forest(
                    tree,
                    k=tree.delta + k_offset,
                    first_players=first_players,
                    bob_may_skip=bob_may_skip,
                    budget=max_edges,
                )
                agg["trees"] += 1
                agg["unique_states"] += stats.unique_states
                agg["stuck"] += stats.stuck
                agg["s_violations"] += stats.s_violations
                agg["m_violations"] += stats.m_violations
                agg["unmatched_cap_violations"] += stats.unmatched_cap_violations
                agg["colour_bound_violations"] += stats.colour_bound_violations
                agg["leaf_cap_violations"] += stats.leaf_cap_violations
                agg["three_leaf_violations"] += stats.three_leaf_violations
                agg["max_unmatched_post_alice"] = max(
                    agg["max_unmatched_post_alice"], stats.max_unmatched_post_alice
                )
                if not stats.alice_wins:
                    agg["all_alice_wins"] = False
                    agg["failures"].append(
                        {"edges": tree.edges, "losing_path": stats.losing_path}
                    )
    return agg
