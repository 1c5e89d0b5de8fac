"""Bob policies: random, greedy spoiler, skip-heavy, and exhaustive enumeration.

Policies return ``("colour", edge_id, colour)`` or ``("skip",)``.  They never
emit an illegal move: while a game is live every uncoloured edge has a
feasible colour (dead edges end the game the moment they appear), so a
policy that cannot act reports BobStuck only in anomalous setups.
"""
from __future__ import annotations

import random

from .errors import BobStuck, BudgetExceeded
from .state import GameState, feasible_colours

Action = tuple


class RandomBob:
    """Uniform random legal move; optional skip probability."""

    name = "random"

    def __init__(self, seed: int = 0, skip_probability: float = 0.0):
        self.rng = random.Random(seed)
        self.skip_probability = skip_probability
        self._pool: list[int] | None = None

    def _pick_edge(self, state: GameState) -> int | None:
        if self._pool is None:
            self._pool = [e for e in range(state.forest.m) if not state.colour_of[e]]
        pool = self._pool
        colour_of = state.colour_of
        while pool:
            i = self.rng.randrange(len(pool))
            eid = pool[i]
            if colour_of[eid]:
                pool[i] = pool[-1]
                pool.pop()
                continue
            return eid
        return None

    def next_move(self, state: GameState) -> Action:
        may_skip = state.config.bob_may_skip
        if may_skip and self.skip_probability and self.rng.random() < self.skip_probability:
            return ("skip",)
        eid = self._pick_edge(state)
        if eid is None:
            return self._stuck(may_skip)
        feas = feasible_colours(state.forest, state.colour_of, state.k, eid)
        if not feas:
            return self._stuck(may_skip)
        return ("colour", eid, self.rng.choice(feas))

    @staticmethod
    def _stuck(may_skip: bool) -> Action:
        if may_skip:
            return ("skip",)
        raise BobStuck("no legal colouring available and skipping is disabled")


class SkipperBob(RandomBob):
    """Skip-heavy random policy."""

    name = "skipper"

    def __init__(self, seed: int = 0, skip_probability: float = 0.9):
        super().__init__(seed, skip_probability)


class SpoilerBob:
    """Greedy troublemaker.  Candidate (edge, colour) pairs are scored
    lexicographically by: creates a second base node; adds an unmatched edge
    to a relevant star; brings a colour new to its component.  Positions
    with few uncoloured edges are scored exhaustively, large ones over a
    seeded sample of edges."""

    name = "spoiler"

    def __init__(self, seed: int = 0, exact_cap: int = 16, pool_size: int = 6):
        self.rng = random.Random(seed)
        self.exact_cap = exact_cap
        self.pool_size = pool_size
        self._sampler = RandomBob(seed + 1)

    def next_move(self, state: GameState) -> Action:
        if state.uncoloured_count <= self.exact_cap:
            edges = [e for e in range(state.forest.m) if not state.colour_of[e]]
        else:
            edges = []
            seen: set[int] = set()
            while len(edges) < self.pool_size:
                eid = self._sampler._pick_edge(state)
                if eid is None:
                    break
                if eid in seen:
                    continue
                seen.add(eid)
                edges.append(eid)
        best: list[Action] = []
        best_score: tuple | None = None
        for eid in edges:
            feas = feasible_colours(state.forest, state.colour_of, state.k, eid)
            if not feas:
                continue
            view = state.view_of_edge(eid)
            s1 = self._creates_second_base(state, view, eid)
            base_colours: set[int] = set()
            relevant_star = False
            p, q = state.forest.edges[eid]
            if view is not None and view.star_like() and view.relevant:
                v = view.base
                if p != v and q != v:
                    relevant_star = True
                    base_colours = {
                        state.colour_of[e] for e, a in view.leaves if a == v
                    }
            palette = view.colours_present if view is not None else frozenset()
            for colour in feas:
                s2 = int(relevant_star and colour not in base_colours)
                s3 = int(colour not in palette)
                score = (s1, s2, s3)
                if best_score is None or score > best_score:
                    best_score = score
                    best = [("colour", eid, colour)]
                elif score == best_score:
                    best.append(("colour", eid, colour))
        if not best:
            if state.config.bob_may_skip:
                return ("skip",)
            raise BobStuck("spoiler found no legal move")
        return self.rng.choice(best)

    def _creates_second_base(self, state: GameState, view, eid: int) -> int:
        """1 when colouring eid leaves a component with two base nodes."""
        if view is None or not view.star_like():
            return 0
        v = view.base
        p, q = state.forest.edges[eid]
        if p == v or q == v:
            return 0
        wp = self._projection(state, view, p)
        if wp == p:
            wq = self._projection(state, view, q)
            if wq == q:
                return 0  # edge lies on the induced sub-tree: pure split
            return int(p != v)
        return int(wp != v)

    @staticmethod
    def _projection(state: GameState, view, p: int) -> int:
        """Closest induced-subtree vertex to p.

        All meet points median(p, base, a) lie on the p->base path, so the
        projection is the one nearest to p."""
        lca = state.lca
        v = view.base
        l_pv = lca.lca(p, v)
        depth = lca.depth
        best = v
        best_d = depth[p] + depth[v] - 2 * depth[l_pv]
        for _e, a in view.leaves:
            if a == v:
                continue
            l_pa = lca.lca(p, a)
            l_va = lca.lca(v, a)
            m = l_pv
            if depth[l_pa] > depth[m]:
                m = l_pa
            if depth[l_va] > depth[m]:
                m = l_va
            if lca.is_ancestor(m, p):
                d = depth[p] - depth[m]
            else:
                d = (depth[p] - depth[l_pv]) + (depth[m] - depth[l_pv])
            if d < best_d:
                best, best_d = m, d
        return best


def exhaustive_bob(state_like, budget: int = 8):
    """Every Bob action at this position: each uncoloured edge with each
    feasible colour, plus Skip when allowed.  The caller deduplicates the
    resulting positions through its memo table."""
    forest = state_like.forest
    colour_of = state_like.colour_of
    if state_like.uncoloured_count > budget:
        raise BudgetExceeded(
            f"{state_like.uncoloured_count} uncoloured edges exceed the cap {budget}"
        )
    for eid in range(forest.m):
        if colour_of[eid]:
            continue
        for colour in feasible_colours(forest, colour_of, state_like.k, eid):
            yield ("colour", eid, colour)
    if state_like.config.bob_may_skip:
        yield ("skip",)


def next_bob_move(policy, state: GameState) -> Action:
    """Ask a policy for Bob's action in the given state."""
    return policy.next_move(state)


def make_bob(kind: str, seed: int = 0, skip_probability: float | None = None):
    if kind == "random":
        return RandomBob(seed, skip_probability or 0.0)
    if kind == "spoiler":
        return SpoilerBob(seed)
    if kind == "skipper":
        return SkipperBob(seed, 0.9 if skip_probability is None else skip_probability)
    raise ValueError(f"unknown bob policy {kind!r}")
