"""Online edge deletion with component-name queries on a forest.

Two variants behind one interface:

* ``baseline`` -- the classic smaller-half scheme: every vertex stores its
  component name; deleting an edge traverses both sides in lockstep and
  renames the strictly smaller side, so a vertex is renamed at most
  log2(n) times.

* ``two_level`` -- chains of one-child vertices are compressed to single
  edges whose interior is tracked by a sorted list of cut positions; the
  compressed tree is greedily clustered bottom-up into super-nodes of at
  least ceil(log2(n)/2) compressed vertices (residual top fragments stay
  as their own macro vertices); the baseline scheme then runs at two
  granularities: across macro nodes, and locally inside a cluster.  A
  cluster piece that loses its last inter-cluster edge is closed off with
  a private label and never touches the macro level again; a split that
  leaves inter-cluster edges on both sides splits the macro vertex.

Counter semantics: ``relabels`` counts label-field writes at whatever
granularity they happen (per vertex for baseline and cluster-local work,
per macro node for macro work, one per fresh chain-segment or closed-piece
label); ``steps`` counts lockstep traversal iterations.  Chain-cut lookup
is O(log chain-length) via bisect; inserting a cut shifts a Python list,
which only hurts on pathologically long chains.
"""
from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass

from .errors import EdgeAlreadyDeleted
from .forest import Forest

_MACRO = 0
_FREE = 1


@dataclass(slots=True)
class SplitReport:
    """Outcome of one deletion.  ``smaller_size`` is exact for the baseline
    variant and None for two_level (which does not track vertex counts)."""

    u_label: int
    v_label: int
    new_label: int
    smaller_size: int | None = None
    smaller_is_u: bool | None = None


class BaselineDecrementalForest:
    """Smaller-half relabelling directly on the original forest."""

    variant = "baseline"

    def __init__(self, forest: Forest, track_per_vertex: bool = False):
        self.forest = forest
        self.label = list(forest.comp_of)
        self.alive = bytearray(b"\x01") * forest.m
        self.size = {c: s for c, s in enumerate(forest.comp_sizes)}
        self.next_label = forest.n_components
        self.relabels = 0
        self.steps = 0
        self.per_vertex = [0] * forest.n if track_per_vertex else None

    def find(self, v: int) -> int:
        return self.label[v]

    def delete_edge(self, u: int, v: int) -> SplitReport:
        return self.delete_edge_id(self.forest.edge_between(u, v))

    def delete_edge_id(self, eid: int) -> SplitReport:
        if not self.alive[eid]:
            raise EdgeAlreadyDeleted(f"edge {eid} already deleted")
        self.alive[eid] = 0
        forest = self.forest
        u, v = forest.edges[eid]
        old_label = self.label[u]
        old_size = self.size[old_label]
        adj = forest.adj
        edges = forest.edges
        alive = self.alive

        # lockstep BFS on both sides until one is exhausted
        seen_u = {u}
        order_u = [u]
        iu = 0
        seen_v = {v}
        order_v = [v]
        iv = 0
        steps = 0
        u_done = False
        while True:
            steps += 1
            if iu < len(order_u):
                x = order_u[iu]
                iu += 1
                for e2 in adj[x]:
                    if alive[e2]:
                        a, b = edges[e2]
                        w = b if a == x else a
                        if w not in seen_u:
                            seen_u.add(w)
                            order_u.append(w)
            else:
                u_done = True
                break
            if iv < len(order_v):
                x = order_v[iv]
                iv += 1
                for e2 in adj[x]:
                    if alive[e2]:
                        a, b = edges[e2]
                        w = b if a == x else a
                        if w not in seen_v:
                            seen_v.add(w)
                            order_v.append(w)
            else:
                break
        self.steps += steps
        size_u = len(order_u) if u_done else old_size - len(order_v)
        size_v = old_size - size_u

        if size_u != size_v:
            relabel_u = size_u < size_v
        else:
            relabel_u = u < v
        if relabel_u:
            side = order_u if u_done else self._complete(order_u, seen_u, iu)
        else:
            side = self._complete(order_v, seen_v, iv) if u_done else order_v

        fresh = self.next_label
        self.next_label += 1
        label = self.label
        for x in side:
            label[x] = fresh
        self.relabels += len(side)
        if self.per_vertex is not None:
            for x in side:
                self.per_vertex[x] += 1
        self.size[fresh] = len(side)
        self.size[old_label] = old_size - len(side)
        return SplitReport(
            u_label=label[u],
            v_label=label[v],
            new_label=fresh,
            smaller_size=min(size_u, size_v),
            smaller_is_u=relabel_u,
        )

    def _complete(self, order: list[int], seen: set[int], i: int) -> list[int]:
        adj = self.forest.adj
        edges = self.forest.edges
        alive = self.alive
        while i < len(order):
            x = order[i]
            i += 1
            self.steps += 1
            for e2 in adj[x]:
                if alive[e2]:
                    a, b = edges[e2]
                    w = b if a == x else a
                    if w not in seen:
                        seen.add(w)
                        order.append(w)
        return order

    delete_edge_bare = delete_edge_id


class _Chain:
    """Interior of one compressed edge: vertices between two kept endpoints.

    ``cuts`` holds deleted edge indices sorted ascending; segment s covers
    interior vertices between cuts[s-1] (exclusive) and cuts[s] (inclusive).
    Segments containing a kept endpoint resolve through that endpoint; the
    rest carry their own component label in ``seg_labels``.
    """

    __slots__ = ("verts", "edge_ids", "ce_id", "cuts", "seg_labels")

    def __init__(self, verts: list[int], edge_ids: list[int], ce_id: int):
        self.verts = verts
        self.edge_ids = edge_ids
        self.ce_id = ce_id
        self.cuts: list[int] = []
        self.seg_labels: list[int | None] = [None]


class TwoLevelDecrementalForest:
    """Chain-compressed, cluster-contracted two-level structure."""

    variant = "two_level"

    def __init__(self, forest: Forest, cluster_threshold: int | None = None):
        self.forest = forest
        n = forest.n
        self.alive0 = bytearray(b"\x01") * forest.m
        self.relabels = 0
        self.steps = 0
        self.next_label = forest.n_components
        if cluster_threshold is not None:
            t = max(1, cluster_threshold)
        elif n >= 2:
            t = max(1, math.ceil(0.5 * math.log2(n)))
        else:
            t = 1
        self.threshold = t

        parent = [-1] * n
        children_count = [0] * n
        for members in forest.comp_vertices:
            root = members[0]
            parent[root] = -2
            stack = [root]
            while stack:
                x = stack.pop()
                for eid in forest.adj[x]:
                    a, b = forest.edges[eid]
                    w = b if a == x else a
                    if parent[w] == -1:
                        parent[w] = x
                        children_count[x] += 1
                        stack.append(w)
        kept = [parent[v] == -2 or children_count[v] != 1 for v in range(n)]

        # chains and compressed edges (one per kept non-root vertex)
        m = forest.m
        self.echain = [-1] * m
        self.epos = [0] * m
        self.ecomp = [-1] * m
        self.chain_of = [-1] * n
        self.chain_pos = [0] * n
        self.chains: list[_Chain] = []
        ce_top: list[int] = []
        ce_bot: list[int] = []
        comp_children: dict[int, list[int]] = {}
        for v in range(n):
            if not kept[v] or parent[v] == -2:
                continue
            path = [v]
            p = parent[v]
            while not kept[p]:
                path.append(p)
                p = parent[p]
            path.append(p)
            path.reverse()
            ce_id = len(ce_top)
            ce_top.append(p)
            ce_bot.append(v)
            comp_children.setdefault(p, []).append(v)
            eids = [forest.edge_between(path[j], path[j + 1]) for j in range(len(path) - 1)]
            if len(path) > 2:
                h = len(self.chains)
                self.chains.append(_Chain(path, eids, ce_id))
                for j, eid in enumerate(eids):
                    self.echain[eid] = h
                    self.epos[eid] = j
                for j in range(1, len(path) - 1):
                    self.chain_of[path[j]] = h
                    self.chain_pos[path[j]] = j
            else:
                self.ecomp[eids[0]] = ce_id
        self.ce_top = ce_top
        self.ce_bot = ce_bot
        n_ce = len(ce_top)
        self.ce_alive = bytearray(b"\x01") * n_ce
        self.ce_intra = bytearray(n_ce)
        self.ce_ma = [-1] * n_ce
        self.ce_mb = [-1] * n_ce

        # greedy bottom-up clustering of the compressed tree
        self.cluster_of = [-1] * n
        clusters: list[list[int]] = []
        pending: dict[int, list[int]] = {}
        for members in forest.comp_vertices:
            root = members[0]
            pre: list[int] = []
            stack = [root]
            while stack:
                x = stack.pop()
                pre.append(x)
                stack.extend(comp_children.get(x, ()))
            for x in reversed(pre):
                acc = [x]
                for c in comp_children.get(x, ()):
                    got = pending.pop(c, None)
                    if got:
                        acc.extend(got)
                if len(acc) >= t:
                    cid = len(clusters)
                    clusters.append(acc)
                    for y in acc:
                        self.cluster_of[y] = cid
                else:
                    pending[x] = acc
            for y in pending.pop(root, []):
                cid = len(clusters)
                clusters.append([y])
                self.cluster_of[y] = cid
        self.clusters = clusters
        n_macro = len(clusters)

        # classify compressed edges; local adjacency and macro adjacency
        empty: tuple = ()
        self.ladj: list = [empty] * n
        self.vert_macro: list = [empty] * n
        self.macro_adj: list[set[int]] = [set() for _ in range(n_macro)]
        for ce in range(n_ce):
            a, b = ce_top[ce], ce_bot[ce]
            ca, cb = self.cluster_of[a], self.cluster_of[b]
            if ca == cb:
                self.ce_intra[ce] = 1
                for x in (a, b):
                    if not self.ladj[x]:
                        self.ladj[x] = []
                    self.ladj[x].append(ce)
            else:
                self.ce_ma[ce] = ca
                self.ce_mb[ce] = cb
                self.macro_adj[ca].add(ce)
                self.macro_adj[cb].add(ce)
                for x in (a, b):
                    if not self.vert_macro[x]:
                        self.vert_macro[x] = []
                    self.vert_macro[x].append(ce)

        # macro labels/sizes and one initial piece per cluster
        self.macro_label = [0] * n_macro
        self.local_label = [0] * n
        self.pieces: dict[int, list] = {}
        self.next_piece = 0
        self.macro_sizes: dict[int, int] = {}
        for cid, members in enumerate(clusters):
            comp_label = forest.comp_of[members[0]]
            self.macro_label[cid] = comp_label
            self.macro_sizes[comp_label] = self.macro_sizes.get(comp_label, 0) + 1
            pid = self.next_piece
            self.next_piece += 1
            mcount = 0
            for x in members:
                self.local_label[x] = pid
                vm = self.vert_macro[x]
                if vm:
                    mcount += len(vm)
            self.pieces[pid] = [_MACRO, cid, mcount, len(members)]

    # ------------------------------------------------------------------
    def find(self, v: int) -> int:
        h = self.chain_of[v]
        if h >= 0:
            chain = self.chains[h]
            cuts = chain.cuts
            if not cuts:
                return self._find_kept(chain.verts[0])
            s = bisect_left(cuts, self.chain_pos[v])
            if s == 0:
                return self._find_kept(chain.verts[0])
            if s == len(cuts):
                return self._find_kept(chain.verts[-1])
            return chain.seg_labels[s]
        return self._find_kept(v)

    def _find_kept(self, v: int) -> int:
        ll = self.local_label[v]
        if ll < 0:
            return ~ll  # closed singleton piece stores its label directly
        rec = self.pieces[ll]
        if rec[0] == _MACRO:
            return self.macro_label[rec[1]]
        return rec[1]

    def _fresh_label(self) -> int:
        lab = self.next_label
        self.next_label += 1
        return lab

    # ------------------------------------------------------------------
    def delete_edge(self, u: int, v: int) -> SplitReport:
        return self.delete_edge_id(self.forest.edge_between(u, v))

    def delete_edge_id(self, eid: int) -> SplitReport:
        self.delete_edge_bare(eid)
        u, v = self.forest.edges[eid]
        return SplitReport(u_label=self.find(u), v_label=self.find(v), new_label=-1)

    def delete_edge_bare(self, eid: int) -> None:
        """Delete without building a SplitReport (benchmark hot path)."""
        if not self.alive0[eid]:
            raise EdgeAlreadyDeleted(f"edge {eid} already deleted")
        self.alive0[eid] = 0
        h = self.echain[eid]
        if h >= 0:
            self._cut_chain(h, self.epos[eid])
        else:
            self._delete_compressed(self.ecomp[eid])

    def _cut_chain(self, h: int, j: int) -> None:
        chain = self.chains[h]
        cuts = chain.cuts
        if not cuts:
            self._delete_compressed(chain.ce_id)
            chain.cuts = [j]
            chain.seg_labels = [None, None]
            return
        pos = bisect_left(cuts, j)
        labels = chain.seg_labels
        old = labels[pos]
        if pos == 0:
            upper: int | None = None
            lower: int | None = self._fresh_label()
        elif pos == len(cuts):
            upper = self._fresh_label()
            lower = None
        else:
            upper = old
            lower = self._fresh_label()
        self.relabels += 1
        cuts.insert(pos, j)
        labels[pos : pos + 1] = [upper, lower]

    def _delete_compressed(self, ce: int) -> None:
        self.ce_alive[ce] = 0
        if self.ce_intra[ce]:
            self._intra_delete(ce)
        else:
            self._macro_delete(ce)

    # ------------------------------------------------------------------
    def _macro_delete(self, ce: int) -> None:
        ma, mb = self.ce_ma[ce], self.ce_mb[ce]
        self.macro_adj[ma].discard(ce)
        self.macro_adj[mb].discard(ce)
        for x in (self.ce_top[ce], self.ce_bot[ce]):
            self.pieces[self.local_label[x]][2] -= 1
        self._macro_split(ma, mb)

    def _macro_split(self, ma: int, mb: int) -> None:
        """Relabel the smaller macro side once ma and mb are disconnected."""
        old_label = self.macro_label[ma]
        old_size = self.macro_sizes[old_label]
        side_a, side_b, a_done = self._lockstep_macro(ma, mb)
        size_a = len(side_a) if a_done else old_size - len(side_b)
        size_b = old_size - size_a
        if size_a < size_b or (size_a == size_b and ma < mb):
            side = side_a if a_done else self._complete_macro(side_a)
        else:
            side = self._complete_macro(side_b) if a_done else side_b
        fresh = self._fresh_label()
        for node in side:
            self.macro_label[node] = fresh
        self.relabels += len(side)
        self.macro_sizes[fresh] = len(side)
        self.macro_sizes[old_label] = old_size - len(side)

    def _macro_other(self, ce: int, m: int) -> int:
        return self.ce_mb[ce] if self.ce_ma[ce] == m else self.ce_ma[ce]

    def _lockstep_macro(self, ma: int, mb: int):
        adj = self.macro_adj
        sa, oa, ia = {ma}, [ma], 0
        sb, ob, ib = {mb}, [mb], 0
        while True:
            self.steps += 1
            if ia < len(oa):
                x = oa[ia]
                ia += 1
                for ce in adj[x]:
                    w = self._macro_other(ce, x)
                    if w not in sa:
                        sa.add(w)
                        oa.append(w)
            else:
                return oa, ob, True
            if ib < len(ob):
                x = ob[ib]
                ib += 1
                for ce in adj[x]:
                    w = self._macro_other(ce, x)
                    if w not in sb:
                        sb.add(w)
                        ob.append(w)
            else:
                return oa, ob, False

    def _complete_macro(self, order: list[int]) -> list[int]:
        adj = self.macro_adj
        seen = set(order)
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            self.steps += 1
            for ce in adj[x]:
                w = self._macro_other(ce, x)
                if w not in seen:
                    seen.add(w)
                    order.append(w)
        return order

    # ------------------------------------------------------------------
    def _intra_delete(self, ce: int) -> None:
        top = self.ce_top
        bot = self.ce_bot
        a, b = top[ce], bot[ce]
        cid = self.cluster_of[a]
        pid = self.local_label[a]
        rec = self.pieces[pid]
        old_size = rec[3]
        ladj = self.ladj
        alive = self.ce_alive
        local = self.local_label

        # fast path: an endpoint with no other live local edge is its own side
        side: list[int] | None = None
        self.steps += 1
        for ce2 in ladj[a]:
            if alive[ce2]:
                break
        else:
            side = ([a] if a < b else [b]) if old_size == 2 else [a]
        if side is None:
            for ce2 in ladj[b]:
                if alive[ce2]:
                    break
            else:
                side = [b]
        if side is None:
            sa, oa, ia = {a}, [a], 0
            sb, ob, ib = {b}, [b], 0
            a_done = False
            steps = 0
            while True:
                steps += 1
                if ia < len(oa):
                    x = oa[ia]
                    ia += 1
                    for ce2 in ladj[x]:
                        if alive[ce2]:
                            w = bot[ce2] if top[ce2] == x else top[ce2]
                            if w not in sa:
                                sa.add(w)
                                oa.append(w)
                else:
                    a_done = True
                    break
                if ib < len(ob):
                    x = ob[ib]
                    ib += 1
                    for ce2 in ladj[x]:
                        if alive[ce2]:
                            w = bot[ce2] if top[ce2] == x else top[ce2]
                            if w not in sb:
                                sb.add(w)
                                ob.append(w)
                else:
                    break
            self.steps += steps
            size_a = len(oa) if a_done else old_size - len(ob)
            size_b = old_size - size_a
            if size_a < size_b or (size_a == size_b and a < b):
                side = oa if a_done else self._complete_local(oa, sa)
            else:
                side = self._complete_local(ob, sb) if a_done else ob

        if len(side) == 1:
            x = side[0]
            vm = self.vert_macro[x]
            dead_end = True
            if vm:
                for mce in vm:
                    if alive[mce]:
                        dead_end = False
                        break
            if dead_end:
                # closed singleton: direct label, no piece record needed
                local[x] = ~self._fresh_label()
                self.relabels += 1
                rec[3] = old_size - 1
                return

        new_pid = self.next_piece
        self.next_piece += 1
        side_macro: list[int] = []
        for x in side:
            local[x] = new_pid
            vm = self.vert_macro[x]
            if vm:
                for mce in vm:
                    if alive[mce]:
                        side_macro.append(mce)
        self.relabels += len(side)
        m_side = len(side_macro)
        m_keep = rec[2] - m_side
        rec[2] = m_keep
        rec[3] = old_size - len(side)

        if rec[0] == _FREE or m_side == 0:
            self.pieces[new_pid] = [_FREE, self._fresh_label(), 0, len(side)]
            self.relabels += 1
            return
        mid = rec[1]
        if m_keep == 0:
            # closed piece kept the old pid; the macro node follows the side
            self.pieces[new_pid] = [_MACRO, mid, m_side, len(side)]
            rec[0] = _FREE
            rec[1] = self._fresh_label()
            self.relabels += 1
            return
        # both pieces still face the macro world: split the macro vertex
        m2 = len(self.macro_adj)
        self.macro_adj.append(set())
        self.macro_label.append(self.macro_label[mid])
        self.macro_sizes[self.macro_label[mid]] += 1
        for mce in side_macro:
            if self.cluster_of[self.ce_top[mce]] == cid:
                self.ce_ma[mce] = m2
            else:
                self.ce_mb[mce] = m2
            self.macro_adj[mid].discard(mce)
            self.macro_adj[m2].add(mce)
        self.pieces[new_pid] = [_MACRO, m2, m_side, len(side)]
        self._macro_split(mid, m2)

    def _complete_local(self, order: list[int], seen: set[int]) -> list[int]:
        ladj = self.ladj
        alive = self.ce_alive
        top = self.ce_top
        bot = self.ce_bot
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            self.steps += 1
            for ce2 in ladj[x]:
                if alive[ce2]:
                    w = bot[ce2] if top[ce2] == x else top[ce2]
                    if w not in seen:
                        seen.add(w)
                        order.append(w)
        return order

    @property
    def macro_node_count(self) -> int:
        return len(self.macro_adj)


def init_decremental(forest: Forest, variant: str = "baseline", **kwargs):
    if variant == "baseline":
        return BaselineDecrementalForest(forest, **kwargs)
    if variant in ("two_level", "two-level"):
        return TwoLevelDecrementalForest(forest, **kwargs)
    raise ValueError(f"unknown variant {variant!r}")
