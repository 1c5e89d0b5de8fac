"""Alice's move chooser for maximum degree 4 or 5 with delta+1 colours.

Case tags:

* ``REPAIR_S``  -- a component acquired a second base node; colour the first
  edge on the path between the two base nodes, at the long-standing base's
  end.  The newly created base always has induced degree exactly 3, so the
  older base is the one of larger induced degree; at 3-3 either end works
  (both sides end up with exactly three coloured edges) and the smaller
  vertex id is used.
* ``REPAIR_M``  -- a relevant star exceeds its unmatched allowance; colour
  the first edge on the path from the base towards an unmatched edge.
* ``STAR_TOWARD_AB`` / ``STAR_ALL_INCIDENT`` -- progress inside a star-like
  component: walk towards an off-base coloured edge (unmatched preferred),
  or grow the star when every coloured edge sits on the base.
* ``X2_ADJ`` / ``X2_PATH`` / ``X1`` / ``X0`` -- the small-x openings.

Components are ordered by canonical keys, ties by smallest edge id.
Colours: repairs pick the feasible colour leaving the fewest unmatched
edges behind (a colour matching a surviving straggler turns it matched);
X2_PATH takes the smallest colour absent from the whole component;
everything else takes the smallest feasible index.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .components import ComponentView
from .errors import NoUncolouredEdge, StrategyStuck, UnsupportedDelta
from .state import feasible_colours, uncoloured_at

PRIORITY_DEFAULT = "repair-star-small"
PRIORITY_SMALL_FIRST = "repair-small-star"

CASE_TAGS = (
    "X0",
    "X1",
    "X2_PATH",
    "X2_ADJ",
    "STAR_ALL_INCIDENT",
    "STAR_TOWARD_AB",
    "REPAIR_S",
    "REPAIR_M",
)


@dataclass(slots=True)
class StrategyDecision:
    case_tag: str
    edge_id: int
    colour: int
    component_label: int
    audit: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "case_tag": self.case_tag,
            "edge_id": self.edge_id,
            "colour": self.colour,
            "component_label": self.component_label,
            "audit": self.audit,
        }


def check_delta(delta: int, allow_large_delta: bool = False) -> None:
    if delta <= 3:
        raise UnsupportedDelta(
            f"strategy requires maximum degree 4 or 5, got {delta}; use the oracle"
        )
    if delta >= 6 and not allow_large_delta:
        raise UnsupportedDelta(
            f"maximum degree {delta} is outside the guaranteed range; "
            "pass allow_large_delta for best-effort play"
        )


def choose_move(
    state,
    priority: str = PRIORITY_DEFAULT,
    allow_large_delta: bool = False,
) -> StrategyDecision:
    """Pick Alice's next (edge, colour).  ``state`` provides the component
    buckets via ``peek`` plus forest/lca/colour data."""
    check_delta(state.delta, allow_large_delta)
    if state.uncoloured_count == 0:
        raise NoUncolouredEdge("every edge is already coloured")

    view = state.peek("s")
    if view is not None:
        return _repair_s(state, view)
    view = state.peek("m")
    if view is not None:
        return _repair_m(state, view)

    if priority == PRIORITY_SMALL_FIRST:
        order = ("small", "star")
    else:
        order = ("star", "small")
    for stage in order:
        if stage == "star":
            view = state.peek("star_u")
            if view is None:
                view = state.peek("star")
            if view is not None:
                return _star_move(state, view)
        else:
            view = state.peek("x2")
            if view is not None:
                return _x2_move(state, view)
            view = state.peek("x1")
            if view is not None:
                return _x1_move(state, view)
            view = state.peek("x0")
            if view is not None:
                return _x0_move(state, view)
    raise StrategyStuck("uncoloured edges remain but no component is actionable")


def _min_feasible(state, eid: int, case_tag: str, label: int) -> int:
    feas = feasible_colours(state.forest, state.colour_of, state.k, eid)
    if not feas:
        raise StrategyStuck(
            f"{case_tag}: no feasible colour for edge {eid} in component {label}"
        )
    return feas[0]


def _branch_steps(state, leaves, base: int) -> dict[int, int]:
    """First vertex on the path from the base towards each off-base leaf."""
    steps: dict[int, int] = {}
    memo: dict[int, int] = {}
    for e, a in leaves:
        if a == base:
            continue
        got = memo.get(a)
        if got is None:
            got = memo[a] = state.lca.next_on_path(base, a)
        steps[e] = got
    return steps


def _repair_choice(state, leaves, base: int, steps: dict[int, int], cut_to: int, feas):
    """Score colours for a repair edge from ``base`` towards ``cut_to``.

    Cutting exports every leaf whose branch starts at ``cut_to``; the new
    edge joins the base palette, so a colour equal to a remaining unmatched
    edge turns those edges matched.  Returns (unmatched_left, avoid, colour)
    minimal, where ``avoid`` deprioritizes colours that would mirror the
    exported leaves (keeps the split-off star from going single-coloured).
    """
    colour_of = state.colour_of
    base_colours = {colour_of[e] for e, a in leaves if a == base}
    remaining: dict[int, int] = {}
    exported: set[int] = set()
    for e, a in leaves:
        if a == base:
            continue
        c = colour_of[e]
        if steps[e] == cut_to:
            exported.add(c)
        elif c not in base_colours:
            remaining[c] = remaining.get(c, 0) + 1
    total = sum(remaining.values())
    best = None
    for c in feas:
        key = (total - remaining.get(c, 0), c in exported, c)
        if best is None or key < best:
            best = key
    return best


def _repair_s(state, view: ComponentView) -> StrategyDecision:
    v = view.base_nodes[0]
    w = view.base_nodes[1]
    nxt = state.lca.next_on_path(v, w)
    eid = state.forest.edge_between(v, nxt)
    feas = feasible_colours(state.forest, state.colour_of, state.k, eid)
    if not feas:
        raise StrategyStuck(
            f"REPAIR_S: no feasible colour for edge {eid} in component {view.label}"
        )
    steps = _branch_steps(state, view.leaves, v)
    _left, _avoid, colour = _repair_choice(state, view.leaves, v, steps, nxt, feas)
    return StrategyDecision(
        "REPAIR_S",
        eid,
        colour,
        view.label,
        audit={"base": v, "second_base": w, "path_len": state.lca.dist(v, w)},
    )


def _repair_m(state, view: ComponentView) -> StrategyDecision:
    v = view.base
    steps = _branch_steps(state, view.leaves, v)
    best = None  # (unmatched_left, target, avoid, colour, eid, attachment)
    for ab in sorted(view.unmatched):
        nxt = steps[ab]
        eid = state.forest.edge_between(v, nxt)
        feas = feasible_colours(state.forest, state.colour_of, state.k, eid)
        if not feas:
            continue
        left, avoid, colour = _repair_choice(state, view.leaves, v, steps, nxt, feas)
        key = (left, ab, avoid, colour)
        if best is None or key < best[0]:
            best = (key, ab, colour, eid)
    if best is None:
        raise StrategyStuck(
            f"REPAIR_M: no feasible colour towards any unmatched edge "
            f"in component {view.label}"
        )
    _key, ab, colour, eid = best
    a = view.attachment(ab)
    return StrategyDecision(
        "REPAIR_M",
        eid,
        colour,
        view.label,
        audit={"base": v, "target_edge": ab, "path_len": state.lca.dist(v, a)},
    )


def _star_move(state, view: ComponentView) -> StrategyDecision:
    v = view.base
    if view.gamma == view.x:
        cands = uncoloured_at(state.forest, state.colour_of, v)
        eid = cands[0]
        colour = _min_feasible(state, eid, "STAR_ALL_INCIDENT", view.label)
        return StrategyDecision(
            "STAR_ALL_INCIDENT", eid, colour, view.label, audit={"base": v}
        )
    if view.unmatched:
        ab = min(view.unmatched)
    else:
        ab = min(e for e in view.matched if view.attachment(e) != v)
    a = view.attachment(ab)
    nxt = state.lca.next_on_path(v, a)
    eid = state.forest.edge_between(v, nxt)
    colour = _min_feasible(state, eid, "STAR_TOWARD_AB", view.label)
    return StrategyDecision(
        "STAR_TOWARD_AB",
        eid,
        colour,
        view.label,
        audit={"base": v, "target_edge": ab, "path_len": state.lca.dist(v, a)},
    )


def _x2_move(state, view: ComponentView) -> StrategyDecision:
    (e1, a1), (e2, a2) = view.leaves[0], view.leaves[1]
    if a1 == a2:
        eid = uncoloured_at(state.forest, state.colour_of, a1)[0]
        colour = _min_feasible(state, eid, "X2_ADJ", view.label)
        return StrategyDecision("X2_ADJ", eid, colour, view.label, audit={"base": a1})
    w1 = state.lca.next_on_path(a1, a2)
    c1 = state.forest.edge_between(a1, w1)
    w2 = state.lca.next_on_path(a2, a1)
    c2 = state.forest.edge_between(a2, w2)
    eid = min(c1, c2)
    colour = next(
        (c for c in range(1, state.k + 1) if c not in view.colours_present), None
    )
    if colour is None:
        raise StrategyStuck(
            f"X2_PATH: no colour outside component {view.label}'s palette"
        )
    return StrategyDecision(
        "X2_PATH",
        eid,
        colour,
        view.label,
        audit={"attachments": [a1, a2], "path_len": state.lca.dist(a1, a2)},
    )


def _x1_move(state, view: ComponentView) -> StrategyDecision:
    _e, a = view.leaves[0]
    eid = uncoloured_at(state.forest, state.colour_of, a)[0]
    colour = _min_feasible(state, eid, "X1", view.label)
    return StrategyDecision("X1", eid, colour, view.label, audit={"attachment": a})


def _x0_move(state, view: ComponentView) -> StrategyDecision:
    eid = view.key[0]
    colour = _min_feasible(state, eid, "X0", view.label)
    return StrategyDecision("X0", eid, colour, view.label)


__all__ = [
    "StrategyDecision",
    "choose_move",
    "check_delta",
    "feasible_colours",
    "CASE_TAGS",
    "PRIORITY_DEFAULT",
    "PRIORITY_SMALL_FIRST",
]
