"""Ground truth at desk scale: exact minimax game values, the exact game
chromatic index, and non-isomorphic tree enumeration.

The solver explores every reachable proper partial colouring once, with
positions canonicalized under colour permutation (colour names are replaced
by first-use order along edge ids), which is sound because the game value
is invariant under renaming colours.  Alice never skips; Bob may, when the
configuration allows it.
"""
from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .errors import CapExceeded
from .forest import Forest

ALICE = "alice"
BOB = "bob"


@dataclass
class SolveConfig:
    k: int
    first_player: str = ALICE
    bob_may_skip: bool = True
    cap: int = 9


def solve(forest: Forest, cfg: SolveConfig) -> str:
    """Winner ('alice' or 'bob') under optimal play from the empty board."""
    return solve_position(forest, cfg, [0] * forest.m, cfg.first_player)


def solve_position(
    forest: Forest, cfg: SolveConfig, colour_of: list[int], to_move: str
) -> str:
    """Winner under optimal play from an arbitrary proper partial position."""
    if colour_of.count(0) > cfg.cap:
        raise CapExceeded(
            f"{colour_of.count(0)} uncoloured edges exceed the solver cap {cfg.cap}"
        )
    m = forest.m
    k = cfg.k
    edges = forest.edges
    adj = forest.adj

    def feasible(col: tuple, eid: int) -> list[int]:
        u, v = edges[eid]
        used = set()
        for e2 in adj[u]:
            if col[e2]:
                used.add(col[e2])
        for e2 in adj[v]:
            if col[e2]:
                used.add(col[e2])
        return [c for c in range(1, k + 1) if c not in used]

    def canon(col: tuple) -> tuple:
        mapping: dict[int, int] = {}
        nxt = 1
        out = []
        for c in col:
            if c == 0:
                out.append(0)
                continue
            got = mapping.get(c)
            if got is None:
                got = mapping[c] = nxt
                nxt += 1
            out.append(got)
        return tuple(out)

    memo: dict[tuple, bool] = {}

    def win(col: tuple, alice_to_move: bool) -> bool:
        if 0 not in col:
            return True
        key = (canon(col), alice_to_move)
        got = memo.get(key)
        if got is not None:
            return got
        moves: list[tuple] = []
        dead = False
        for eid in range(m):
            if col[eid]:
                continue
            feas = feasible(col, eid)
            if not feas:
                dead = True
                break
            for c in feas:
                child = col[:eid] + (c,) + col[eid + 1 :]
                moves.append(child)
        if dead:
            result = False
        elif alice_to_move:
            result = any(win(child, False) for child in moves)
        else:
            result = all(win(child, True) for child in moves)
            if result and cfg.bob_may_skip:
                result = win(col, True)
        memo[key] = result
        return result

    start = tuple(colour_of)
    return ALICE if win(start, to_move == ALICE) else BOB


def game_chromatic_index(
    forest: Forest, bob_may_skip: bool = True, cap: int = 9, k_max: int | None = None
) -> int:
    """Smallest k for which Alice wins regardless of who moves first."""
    if forest.m > cap:
        raise CapExceeded(f"{forest.m} edges exceed the solver cap {cap}")
    if forest.m == 0:
        return 0
    top = k_max if k_max is not None else 2 * forest.delta + 1
    for k in range(1, top + 1):
        ok = all(
            solve(forest, SolveConfig(k, fp, bob_may_skip, cap)) == ALICE
            for fp in (ALICE, BOB)
        )
        if ok:
            return k
    raise RuntimeError(f"no winning k up to {top}")  # pragma: no cover


def enumerate_trees(n: int, delta_filter: int | None = None, n_cap: int = 12):
    """All non-isomorphic trees on exactly n vertices, optionally filtered
    by exact maximum degree."""
    if n > n_cap:
        raise CapExceeded(f"n={n} exceeds the enumeration cap {n_cap}")
    if n < 1:
        return
    if n == 1:
        trees = [Forest(1, [])]
    elif n == 2:
        trees = [Forest(2, [(0, 1)])]
    else:
        trees = (
            Forest(n, sorted(tuple(sorted(e)) for e in g.edges()))
            for g in nx.nonisomorphic_trees(n)
        )
    for t in trees:
        if delta_filter is None or t.delta == delta_filter:
            yield t


def enumerate_trees_up_to(n_max: int, delta_filter: int | None = None, n_cap: int = 12):
    for n in range(1, n_max + 1):
        yield from enumerate_trees(n, delta_filter, n_cap)


def canonical_form(n: int, edges: list[tuple[int, int]]) -> tuple:
    """AHU canonical encoding of an unlabelled tree, rooted at its centre."""
    if n == 0:
        return ()
    if n == 1:
        return (0,)
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    # peel leaves to find the centre(s)
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] <= 1]
    removed = 0
    while n - removed > 2:
        nxt = []
        for v in layer:
            removed += 1
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    centres = layer

    def encode(root: int, parent: int) -> tuple:
        subs = sorted(encode(w, root) for w in adj[root] if w != parent)
        return tuple(subs)

    return min((encode(c, -1) for c in centres), default=())


def lower_bound_probe(
    max_edges: int = 9, deltas: tuple[int, ...] = (2, 3, 4), bob_may_skip: bool = True
) -> dict[int, list[dict]]:
    """Search small trees for positions where Bob wins with only delta
    colours.  Returns, per delta, the witnesses found (possibly empty)."""
    out: dict[int, list[dict]] = {d: [] for d in deltas}
    for d in deltas:
        for n in range(2, max_edges + 2):
            for tree in enumerate_trees(n, delta_filter=d):
                if tree.m > max_edges:
                    continue
                record = {}
                for fp in (ALICE, BOB):
                    record[fp] = solve(tree, SolveConfig(d, fp, bob_may_skip, max_edges))
                if BOB in record.values():
                    out[d].append(
                        {
                            "n": tree.n,
                            "m": tree.m,
                            "edges": tree.edges,
                            "winner_alice_first": record[ALICE],
                            "winner_bob_first": record[BOB],
                        }
                    )
    return out
