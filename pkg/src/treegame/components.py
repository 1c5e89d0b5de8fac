"""Per-component induced-subtree analytics.

A component of the uncoloured forest carries a list of coloured-leaf copies
``(edge_id, attachment_vertex)``.  The induced sub-tree is those coloured
edges plus the uncoloured paths connecting their attachment vertices; its
degree-3+ vertices are the base nodes.  With at most delta+1 leaves per
component everything here costs O(1) LCA queries per evaluation.

A component with 0 or 2+ base nodes exposes the raw base list and skips the
gamma/matched classification, which is only defined for a unique base node.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoUniqueBaseNode
from .forest import Forest
from .lca import LcaIndex


@dataclass(slots=True)
class ComponentView:
    """Summary of one component of the uncoloured forest."""

    label: int
    key: tuple  # canonical ordering key, stable across label schemes
    leaves: list[tuple[int, int]]  # (edge id, attachment vertex)
    size: int  # vertices in the component
    x: int
    colours_present: frozenset[int]
    base_nodes: list[int]  # ordered by (induced degree desc, vertex id)
    base: int | None
    gamma: int
    matched: list[int]
    unmatched: list[int]
    relevant: bool
    s_ok: bool
    m_ok: bool
    has_uncoloured: bool

    def attachment(self, eid: int) -> int:
        for e, a in self.leaves:
            if e == eid:
                return a
        raise KeyError(eid)

    def star_like(self) -> bool:
        return self.x >= 3 and len(self.base_nodes) == 1

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "x": self.x,
            "star_like": self.star_like(),
            "S_ok": self.s_ok,
            "M_ok": self.m_ok,
            "gamma": self.gamma,
            "unmatched": len(self.unmatched),
            "colours": len(self.colours_present),
            "relevant": self.relevant,
            "base_nodes": list(self.base_nodes),
            "size": self.size,
        }


def base_nodes(
    attachments: list[int], lca: LcaIndex
) -> list[tuple[int, int]]:
    """Vertices of degree >= 3 in the induced sub-tree, with their degrees.

    ``attachments`` lists the coloured-leaf attachment vertices with
    multiplicity.  Result is sorted by (degree desc, vertex id).
    """
    if len(attachments) < 3:
        return []
    mult: dict[int, int] = {}
    for a in attachments:
        mult[a] = mult.get(a, 0) + 1
    tin = lca.tin
    uniq = sorted(mult, key=lambda v: tin[v])
    nodes = set(uniq)
    for i in range(len(uniq) - 1):
        nodes.add(lca.lca(uniq[i], uniq[i + 1]))
    order = sorted(nodes, key=lambda v: tin[v])
    vdeg = dict.fromkeys(order, 0)
    stack = [order[0]]
    for v in order[1:]:
        while not lca.is_ancestor(stack[-1], v):
            stack.pop()
        vdeg[stack[-1]] += 1
        vdeg[v] += 1
        stack.append(v)
    out = []
    for v in order:
        d = vdeg[v] + mult.get(v, 0)
        if d >= 3:
            out.append((d, v))
    out.sort(key=lambda dv: (-dv[0], dv[1]))
    return [(v, d) for d, v in out]


def classify(
    leaves: list[tuple[int, int]],
    base: int,
    colour_of: list[int],
    forest: Forest,
) -> tuple[int, list[int], list[int], frozenset[int], bool]:
    """(gamma, matched, unmatched, colours_present, relevant) for a unique base."""
    if base is None:
        raise NoUniqueBaseNode("classification needs exactly one base node")
    at_base = [e for e, a in leaves if a == base]
    base_colours = {colour_of[e] for e in at_base}
    matched = list(at_base)
    unmatched = []
    for e, a in leaves:
        if a == base:
            continue
        if colour_of[e] in base_colours:
            matched.append(e)
        else:
            unmatched.append(e)
    colours = frozenset(colour_of[e] for e, _ in leaves)
    relevant = forest.degree[base] == forest.delta
    return len(at_base), sorted(matched), sorted(unmatched), colours, relevant


def check_S(x: int, n_bases: int) -> bool:
    return x < 3 or n_bases == 1


def check_M(view: ComponentView) -> bool:
    """Condition on relevant single-base stars: unmatched <= max(3-gamma, 0)."""
    if not (view.relevant and view.star_like()):
        return True
    return len(view.unmatched) <= max(3 - view.gamma, 0)


def build_view(
    label: int,
    leaves: list[tuple[int, int]],
    size: int,
    colour_of: list[int],
    forest: Forest,
    lca: LcaIndex,
    x0_min_edge: int = -1,
) -> ComponentView:
    """Assemble the full per-component summary from its coloured-leaf list."""
    x = len(leaves)
    has_uncoloured = size >= 2
    if x == 0:
        return ComponentView(
            label=label,
            key=(x0_min_edge, -1),
            leaves=[],
            size=size,
            x=0,
            colours_present=frozenset(),
            base_nodes=[],
            base=None,
            gamma=0,
            matched=[],
            unmatched=[],
            relevant=False,
            s_ok=True,
            m_ok=True,
            has_uncoloured=has_uncoloured,
        )
    e_min, a_min = min(leaves)
    key = (e_min, a_min)
    colours = frozenset(colour_of[e] for e, _ in leaves)
    if x < 3:
        return ComponentView(
            label=label,
            key=key,
            leaves=leaves,
            size=size,
            x=x,
            colours_present=colours,
            base_nodes=[],
            base=None,
            gamma=0,
            matched=[],
            unmatched=[],
            relevant=False,
            s_ok=True,
            m_ok=True,
            has_uncoloured=has_uncoloured,
        )
    bases = base_nodes([a for _, a in leaves], lca)
    base_list = [v for v, _ in bases]
    s_ok = check_S(x, len(base_list))
    if len(base_list) == 1:
        base = base_list[0]
        gamma, matched, unmatched, colours, relevant = classify(
            leaves, base, colour_of, forest
        )
        view = ComponentView(
            label=label,
            key=key,
            leaves=leaves,
            size=size,
            x=x,
            colours_present=colours,
            base_nodes=base_list,
            base=base,
            gamma=gamma,
            matched=matched,
            unmatched=unmatched,
            relevant=relevant,
            s_ok=s_ok,
            m_ok=True,
            has_uncoloured=has_uncoloured,
        )
        view.m_ok = check_M(view)
        return view
    return ComponentView(
        label=label,
        key=key,
        leaves=leaves,
        size=size,
        x=x,
        colours_present=colours,
        base_nodes=base_list,
        base=None,
        gamma=0,
        matched=[],
        unmatched=[],
        relevant=False,
        s_ok=s_ok,
        m_ok=True,
        has_uncoloured=has_uncoloured,
    )


@dataclass
class InvariantReport:
    """Per-move structural report: affected (or all) component summaries
    plus global violation flags."""

    components: list[dict] = field(default_factory=list)
    s_violations: int = 0
    m_violations: int = 0
    unmatched_cap_violations: int = 0  # components with > 2 unmatched edges
    leaf_cap_violations: int = 0  # S_ok components with x > delta
    max_x: int = 0

    def to_dict(self) -> dict:
        return {
            "components": self.components,
            "s_violations": self.s_violations,
            "m_violations": self.m_violations,
            "unmatched_cap_violations": self.unmatched_cap_violations,
            "leaf_cap_violations": self.leaf_cap_violations,
            "max_x": self.max_x,
        }


def build_report(views: list[ComponentView], delta: int) -> InvariantReport:
    rep = InvariantReport()
    for v in views:
        rep.components.append(v.to_dict())
        if not v.s_ok:
            rep.s_violations += 1
        if not v.m_ok:
            rep.m_violations += 1
        if len(v.unmatched) > 2:
            rep.unmatched_cap_violations += 1
        if v.s_ok and v.x > delta:
            rep.leaf_cap_violations += 1
        rep.max_x = max(rep.max_x, v.x)
    return rep


def snapshot_components(
    forest: Forest, colour_of: list[int]
) -> list[tuple[list[int], list[tuple[int, int]]]]:
    """Brute-force recomputation of all components of the uncoloured forest.

    Returns (vertices, coloured-leaf list) per component, vertices ascending;
    component order follows each component's smallest vertex.
    """
    seen = [False] * forest.n
    out = []
    for s in range(forest.n):
        if seen[s]:
            continue
        seen[s] = True
        members = [s]
        stack = [s]
        leaves = []
        while stack:
            xv = stack.pop()
            for eid in forest.adj[xv]:
                if colour_of[eid]:
                    leaves.append((eid, xv))
                    continue
                y = forest.other_end(eid, xv)
                if not seen[y]:
                    seen[y] = True
                    members.append(y)
                    stack.append(y)
        members.sort()
        leaves.sort()
        out.append((members, leaves))
    return out
