"""Constant-time LCA, depth and next-vertex-on-path queries on a static forest.

Preprocessing builds an Euler tour per original component (rooted at the
smallest vertex id) and answers range-minimum queries over tour depths with
the block decomposition scheme: one sparse table over per-block minima plus
shared in-block tables keyed by the block's +1/-1 step pattern.  Sentinel
entries between component tours keep the step pattern +/-1 everywhere, so
in-block tables stay exact; queries never cross a component boundary.

``next_on_path(v, w)`` avoids a general level-ancestor structure: when the
answer is a child of v it is found by binary search over v's children in
Euler order, which is O(log deg(v)) -- constant for the bounded-degree
forests this engine plays on.
"""
from __future__ import annotations

from array import array

import numpy as np

from .errors import DifferentComponents
from .forest import Forest


class LcaIndex:
    """Immutable query structure over one Forest; safe for concurrent reads.

    ``queries`` counts lca/next_on_path primitive calls so tests can assert
    per-move budgets.
    """

    __slots__ = (
        "forest",
        "parent",
        "depth",
        "tin",
        "tout",
        "first_occ",
        "euler",
        "D",
        "b",
        "block_type",
        "st",
        "type_tables",
        "child_start",
        "child_flat",
        "queries",
    )

    def __init__(self, forest: Forest):
        self.forest = forest
        n = forest.n
        self.parent = [-1] * n
        self.depth = [0] * n
        self.tin = [0] * n
        self.tout = [0] * n
        self.queries = 0

        euler: list[int] = []
        edepth: list[int] = []
        first_occ = [0] * n
        child_lists: list[list[int]] = [[] for _ in range(n)]
        clock = 0

        for members in forest.comp_vertices:
            root = members[0]
            if euler:
                # sentinel keeping steps +/-1 between component tours
                euler.append(-1)
                edepth.append(edepth[-1] + 1)
            # iterative Euler-tour DFS
            stack: list[tuple[int, int]] = [(root, 0)]
            self.parent[root] = -1
            self.depth[root] = 0
            while stack:
                v, idx = stack[-1]
                if idx == 0:
                    self.tin[v] = clock
                    clock += 1
                    first_occ[v] = len(euler)
                    euler.append(v)
                    edepth.append(self.depth[v])
                adj = forest.adj[v]
                advanced = False
                while idx < len(adj):
                    eid = adj[idx]
                    idx += 1
                    w = forest.other_end(eid, v)
                    if w == self.parent[v]:
                        continue
                    stack[-1] = (v, idx)
                    self.parent[w] = v
                    self.depth[w] = self.depth[v] + 1
                    child_lists[v].append(w)
                    stack.append((w, 0))
                    advanced = True
                    break
                if not advanced:
                    stack.pop()
                    self.tout[v] = clock
                    if stack:
                        p = stack[-1][0]
                        euler.append(p)
                        edepth.append(self.depth[p])

        # children in Euler (tin) order, CSR layout
        self.child_start = array("i", [0] * (n + 1))
        flat: list[int] = []
        for v in range(n):
            self.child_start[v] = len(flat)
            flat.extend(child_lists[v])
        self.child_start[n] = len(flat)
        self.child_flat = array("i", flat)

        L = len(euler)
        if L == 0:
            self.euler = array("i")
            self.D = array("i")
            self.b = 1
            self.block_type = array("q")
            self.st = []
            self.type_tables = {}
            self.first_occ = array("i")
            return

        b = max(1, L.bit_length() // 2)
        pad = (-L) % b
        for _ in range(pad):
            euler.append(-1)
            edepth.append(edepth[-1] + 1)
        L = len(euler)
        nblocks = L // b

        self.euler = array("i", euler)
        self.first_occ = array("i", first_occ)
        self.b = b
        Dnp = np.asarray(edepth, dtype=np.int32)
        self.D = array("i")
        self.D.frombytes(Dnp.tobytes())

        # block step-pattern types
        if b > 1:
            steps = np.empty(L, dtype=np.int64)
            steps[: L - 1] = (Dnp[1:] < Dnp[:-1]).astype(np.int64)
            steps[L - 1] = 0
            steps = steps.reshape(nblocks, b)[:, : b - 1]
            powers = 1 << np.arange(b - 1, dtype=np.int64)
            types = steps @ powers
        else:
            types = np.zeros(nblocks, dtype=np.int64)
        self.block_type = array("q")
        self.block_type.frombytes(types.tobytes())

        self.type_tables = {}
        for t in set(types.tolist()):
            self.type_tables[t] = _in_block_table(t, b)

        # sparse table over per-block minima (positions into the tour)
        blocks = Dnp.reshape(nblocks, b)
        offs = blocks.argmin(axis=1).astype(np.int64)
        row = (np.arange(nblocks, dtype=np.int64) * b + offs).astype(np.int32)
        self.st = [_to_iarray(row)]
        k = 1
        while (1 << k) <= nblocks:
            half = 1 << (k - 1)
            prev = np.frombuffer(self.st[-1], dtype=np.int32)
            a_pos = prev[: nblocks - (1 << k) + 1]
            b_pos = prev[half : half + len(a_pos)]
            take_b = Dnp[b_pos] < Dnp[a_pos]
            nxt = np.where(take_b, b_pos, a_pos).astype(np.int32)
            self.st.append(_to_iarray(nxt))
            k += 1

    # ------------------------------------------------------------------
    def _rmq(self, l: int, r: int) -> int:
        """Position of a minimum-depth entry in euler[l..r] inclusive."""
        b = self.b
        D = self.D
        bl, br = l // b, r // b
        if bl == br:
            tbl = self.type_tables[self.block_type[bl]]
            return bl * b + tbl[(l - bl * b) * b + (r - bl * b)]
        tbl_l = self.type_tables[self.block_type[bl]]
        p1 = bl * b + tbl_l[(l - bl * b) * b + (b - 1)]
        tbl_r = self.type_tables[self.block_type[br]]
        p2 = br * b + tbl_r[r - br * b]
        best = p1 if D[p1] <= D[p2] else p2
        lo, hi = bl + 1, br - 1
        if lo <= hi:
            k = (hi - lo + 1).bit_length() - 1
            row = self.st[k]
            pa = row[lo]
            pb = row[hi - (1 << k) + 1]
            pm = pa if D[pa] <= D[pb] else pb
            if D[pm] < D[best]:
                best = pm
        return best

    def lca(self, u: int, v: int) -> int:
        self.queries += 1
        if self.forest.comp_of[u] != self.forest.comp_of[v]:
            raise DifferentComponents(f"{u} and {v} lie in different components")
        if u == v:
            return u
        l, r = self.first_occ[u], self.first_occ[v]
        if l > r:
            l, r = r, l
        return self.euler[self._rmq(l, r)]

    def next_on_path(self, v: int, w: int) -> int:
        """The neighbour of v on the unique v->w path (v != w)."""
        self.queries += 1
        if self.forest.comp_of[v] != self.forest.comp_of[w]:
            raise DifferentComponents(f"{v} and {w} lie in different components")
        if v == w:
            raise ValueError("next_on_path needs distinct endpoints")
        if not self.is_ancestor(v, w):
            return self.parent[v]
        # binary search over v's children (Euler order) for the one above w
        lo, hi = self.child_start[v], self.child_start[v + 1]
        tw = self.tin[w]
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.tin[self.child_flat[mid]] <= tw:
                lo = mid
            else:
                hi = mid
        return self.child_flat[lo]

    def is_ancestor(self, a: int, b: int) -> bool:
        return self.tin[a] <= self.tin[b] < self.tout[a]

    def dist(self, u: int, v: int) -> int:
        return self.depth[u] + self.depth[v] - 2 * self.depth[self.lca(u, v)]

    def median(self, a: int, b: int, c: int) -> int:
        """The unique vertex lying on all three pairwise paths."""
        x, y, z = self.lca(a, b), self.lca(a, c), self.lca(b, c)
        best = x
        if self.depth[y] > self.depth[best]:
            best = y
        if self.depth[z] > self.depth[best]:
            best = z
        return best

    def reset_counter(self) -> None:
        self.queries = 0


def build(forest: Forest) -> LcaIndex:
    return LcaIndex(forest)


def _to_iarray(np_row: np.ndarray) -> array:
    out = array("i")
    out.frombytes(np_row.astype(np.int32).tobytes())
    return out


def _in_block_table(type_mask: int, b: int) -> array:
    """Flattened b*b argmin-offset table for one +1/-1 step pattern."""
    walk = [0] * b
    for i in range(b - 1):
        step = -1 if (type_mask >> i) & 1 else 1
        walk[i + 1] = walk[i] + step
    tbl = array("i", [0] * (b * b))
    for i in range(b):
        best = i
        for j in range(i, b):
            if walk[j] < walk[best]:
                best = j
            tbl[i * b + j] = best
    return tbl
