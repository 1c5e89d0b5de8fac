"""Mutable game state: partial proper colouring plus component bookkeeping.

Colouring an edge splits its component in the edge-split sense: the edge is
removed from the uncoloured forest and recorded as a coloured-leaf copy in
both resulting components (by reference: edge id + attachment vertex).
Components with a single vertex are fully coloured and retired.

The registry keeps one ComponentView per active component, indexed by the
decremental-forest label.  Lazy min-heaps over canonical keys give O(log)
retrieval of the smallest actionable component per strategy bucket; heap
entries are invalidated simply by the registry no longer holding the same
view object.  Canonical keys depend only on the colouring (smallest
coloured-leaf edge id + its attachment), never on label history, so move
choices replay identically from any equal colouring.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from heapq import heappop, heappush

from .components import ComponentView, build_view
from .decremental import BaselineDecrementalForest
from .errors import (
    EdgeAlreadyColoured,
    ImproperColour,
    UnknownEdge,
)
from .forest import Forest
from .lca import LcaIndex, build as build_lca

BUCKETS = ("s", "m", "star_u", "star", "x2", "x1", "x0")


def feasible_colours(forest: Forest, colour_of: list[int], k: int, eid: int) -> list[int]:
    """Colours in 1..k absent from coloured edges at either endpoint."""
    u, v = forest.edges[eid]
    used = set()
    for e2 in forest.adj[u]:
        c = colour_of[e2]
        if c:
            used.add(c)
    for e2 in forest.adj[v]:
        c = colour_of[e2]
        if c:
            used.add(c)
    return [c for c in range(1, k + 1) if c not in used]


def colours_at(forest: Forest, colour_of: list[int], v: int) -> set[int]:
    out = set()
    for e2 in forest.adj[v]:
        c = colour_of[e2]
        if c:
            out.add(c)
    return out


def uncoloured_at(forest: Forest, colour_of: list[int], v: int) -> list[int]:
    return sorted(e for e in forest.adj[v] if not colour_of[e])


@dataclass(slots=True)
class SplitOutcome:
    """Result of one accepted colouring."""

    edge_id: int
    colour: int
    old_label: int
    new_views: list[ComponentView] = field(default_factory=list)
    retired_vertices: list[int] = field(default_factory=list)
    moved_leaves: int = 0
    new_dead_edges: list[int] = field(default_factory=list)


@dataclass
class GameConfig:
    k: int
    first_player: str = "alice"  # "alice" | "bob"
    bob_may_skip: bool = True

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "first_player": self.first_player,
            "bob_may_skip": self.bob_may_skip,
        }


class GameState:
    """One game's mutable state; exactly one actor mutates it at a time."""

    def __init__(
        self,
        forest: Forest,
        k: int | None = None,
        first_player: str = "alice",
        bob_may_skip: bool = True,
        lca: LcaIndex | None = None,
    ):
        self.forest = forest
        self.delta = forest.delta
        self.k = forest.delta + 1 if k is None else k
        if self.k < 1:
            raise ValueError("k must be at least 1")
        self.config = GameConfig(self.k, first_player, bob_may_skip)
        self.lca = lca if lca is not None else build_lca(forest)
        self.df = BaselineDecrementalForest(forest)
        self.colour_of = [0] * forest.m
        self.uncoloured_count = forest.m
        self.registry: dict[int, ComponentView] = {}
        self.heaps: dict[str, list] = {name: [] for name in BUCKETS}
        self.dead_edges: list[int] = []
        self.leaf_ops = 0
        self.max_x_seen = 0
        self.move_no = 0
        self.to_move = first_player
        self._push_seq = 0
        for cid, size in enumerate(forest.comp_sizes):
            if size >= 2:
                view = build_view(
                    cid, [], size, self.colour_of, forest, self.lca,
                    x0_min_edge=forest.comp_min_edge[cid],
                )
                self._register(view)

    # ------------------------------------------------------------------
    def _register(self, view: ComponentView) -> None:
        self.registry[view.label] = view
        self._push_seq += 1
        item = (view.key, self._push_seq, view)
        hs = self.heaps
        if not view.s_ok:
            heappush(hs["s"], item)
        elif not view.m_ok:
            heappush(hs["m"], item)
        elif view.x >= 3:
            heappush(hs["star"], item)
            if view.unmatched:
                heappush(hs["star_u"], item)
        elif view.x == 2:
            heappush(hs["x2"], item)
        elif view.x == 1:
            heappush(hs["x1"], item)
        else:
            heappush(hs["x0"], item)
        if view.x > self.max_x_seen:
            self.max_x_seen = view.x

    def peek(self, kind: str) -> ComponentView | None:
        """Smallest-key live view in the bucket, or None."""
        h = self.heaps[kind]
        reg = self.registry
        while h:
            view = h[0][2]
            if reg.get(view.label) is view:
                return view
            heappop(h)
        return None

    def view_of_edge(self, eid: int) -> ComponentView | None:
        """The active component containing an uncoloured edge."""
        u, _ = self.forest.edges[eid]
        return self.registry.get(self.df.find(u))

    # ------------------------------------------------------------------
    def validate_colouring(self, eid: int, colour: int) -> None:
        forest = self.forest
        if not (0 <= eid < forest.m):
            raise UnknownEdge(f"edge {eid} out of range")
        if self.colour_of[eid]:
            raise EdgeAlreadyColoured(f"edge {eid} already has colour {self.colour_of[eid]}")
        if not (1 <= colour <= self.k):
            raise ImproperColour(f"colour {colour} outside 1..{self.k}")
        u, v = forest.edges[eid]
        for w in (u, v):
            for e2 in forest.adj[w]:
                if self.colour_of[e2] == colour:
                    raise ImproperColour(
                        f"colour {colour} already used at vertex {w} (edge {e2})"
                    )

    def apply_colouring(self, eid: int, colour: int) -> SplitOutcome:
        """Validate and apply one colouring; rejected moves change nothing."""
        self.validate_colouring(eid, colour)
        forest = self.forest
        u, v = forest.edges[eid]
        old_label = self.df.find(u)
        old_view = self.registry.pop(old_label)
        rep = self.df.delete_edge_id(eid)
        self.colour_of[eid] = colour
        self.uncoloured_count -= 1

        lu, lv = rep.u_label, rep.v_label
        if rep.smaller_is_u:
            size_u = rep.smaller_size
        else:
            size_u = old_view.size - rep.smaller_size
        size_v = old_view.size - size_u

        leaves_u = [(eid, u)]
        leaves_v = [(eid, v)]
        find = self.df.find
        for entry in old_view.leaves:
            if find(entry[1]) == lu:
                leaves_u.append(entry)
            else:
                leaves_v.append(entry)
        self.leaf_ops += len(old_view.leaves) + 2

        outcome = SplitOutcome(
            edge_id=eid, colour=colour, old_label=old_label, moved_leaves=len(old_view.leaves)
        )
        for label, leaves, size, vertex in (
            (lu, leaves_u, size_u, u),
            (lv, leaves_v, size_v, v),
        ):
            if size >= 2:
                view = build_view(label, leaves, size, self.colour_of, forest, self.lca)
                self._register(view)
                outcome.new_views.append(view)
            else:
                outcome.retired_vertices.append(vertex)

        # an uncoloured edge can only die when a neighbouring edge is coloured
        colour_of = self.colour_of
        for w in (u, v):
            for e2 in forest.adj[w]:
                if colour_of[e2]:
                    continue
                if not feasible_colours(forest, colour_of, self.k, e2):
                    self.dead_edges.append(e2)
                    outcome.new_dead_edges.append(e2)
        return outcome

    # ------------------------------------------------------------------
    def feasible(self, eid: int) -> list[int]:
        return feasible_colours(self.forest, self.colour_of, self.k, eid)

    def finished(self) -> bool:
        return self.uncoloured_count == 0

    def active_views(self) -> list[ComponentView]:
        return list(self.registry.values())
