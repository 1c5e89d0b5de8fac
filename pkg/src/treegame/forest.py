"""Immutable forests with dense, stable edge ids.

The tree file format is: first line is the vertex count n, then one line
"u v" per edge with 0-indexed endpoints.  Fewer than n-1 edges is fine
(a forest); cycles, bad indices and repeated edges are rejected.
"""
from __future__ import annotations

import hashlib
from pathlib import Path

from .errors import BadVertexIndex, CycleDetected, DuplicateEdge, UnknownEdge


class Forest:
    """Validated forest: vertex count, edge list, adjacency and degrees.

    Edge ids are the positions in the input edge list and never change.
    ``comp_of[v]`` numbers the original connected components 0..C-1 in
    order of their smallest vertex.
    """

    __slots__ = (
        "n",
        "edges",
        "adj",
        "degree",
        "delta",
        "comp_of",
        "n_components",
        "comp_vertices",
        "comp_sizes",
        "comp_min_edge",
    )

    def __init__(self, n: int, edges: list[tuple[int, int]]):
        if n < 0:
            raise BadVertexIndex(f"negative vertex count {n}")
        self.n = n
        self.edges = [(int(u), int(v)) for u, v in edges]
        self.adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        # Union-find over vertices to reject cycles while building adjacency.
        uf = list(range(n))

        def find(x: int) -> int:
            while uf[x] != x:
                uf[x] = uf[uf[x]]
                x = uf[x]
            return x

        for eid, (u, v) in enumerate(self.edges):
            if not (0 <= u < n and 0 <= v < n):
                raise BadVertexIndex(f"edge {eid} endpoint out of range: ({u}, {v})")
            if u == v:
                raise CycleDetected(f"edge {eid} is a self-loop at {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise DuplicateEdge(f"edge ({u}, {v}) repeated")
            seen.add(key)
            ru, rv = find(u), find(v)
            if ru == rv:
                raise CycleDetected(f"edge {eid} ({u}, {v}) closes a cycle")
            uf[ru] = rv
            self.adj[u].append(eid)
            self.adj[v].append(eid)

        self.degree = [len(a) for a in self.adj]
        self.delta = max(self.degree, default=0)

        self.comp_of = [-1] * n
        self.comp_vertices: list[list[int]] = []
        for v in range(n):
            if self.comp_of[v] != -1:
                continue
            cid = len(self.comp_vertices)
            stack = [v]
            self.comp_of[v] = cid
            members = [v]
            while stack:
                x = stack.pop()
                for eid in self.adj[x]:
                    a, b = self.edges[eid]
                    y = b if a == x else a
                    if self.comp_of[y] == -1:
                        self.comp_of[y] = cid
                        members.append(y)
                        stack.append(y)
            self.comp_vertices.append(members)
        self.n_components = len(self.comp_vertices)
        self.comp_sizes = [len(ms) for ms in self.comp_vertices]
        self.comp_min_edge = [-1] * self.n_components
        for eid, (u, _v) in enumerate(self.edges):
            c = self.comp_of[u]
            if self.comp_min_edge[c] == -1:
                self.comp_min_edge[c] = eid

    # ------------------------------------------------------------------
    @property
    def m(self) -> int:
        return len(self.edges)

    def other_end(self, eid: int, v: int) -> int:
        u, w = self.edges[eid]
        if v == u:
            return w
        if v == w:
            return u
        raise UnknownEdge(f"vertex {v} not on edge {eid}")

    def edge_between(self, u: int, v: int) -> int:
        """Edge id joining u and v, scanning the shorter adjacency list."""
        a, b = (u, v) if len(self.adj[u]) <= len(self.adj[v]) else (v, u)
        for eid in self.adj[a]:
            if self.other_end(eid, a) == b:
                return eid
        raise UnknownEdge(f"no edge between {u} and {v}")

    def canonical_hash(self) -> str:
        blob = f"{self.n};" + ";".join(f"{u},{v}" for u, v in self.edges)
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def to_text(self) -> str:
        return "\n".join([str(self.n)] + [f"{u} {v}" for u, v in self.edges]) + "\n"

    def __repr__(self) -> str:
        return f"Forest(n={self.n}, m={self.m}, delta={self.delta})"


def parse_forest(text: str) -> Forest:
    """Parse the tree file format into a validated Forest."""
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty tree file")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise ValueError(f"first line must be the vertex count: {lines[0]!r}") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' edge line, got {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Forest(n, edges)


def load_forest(path: str | Path) -> Forest:
    return parse_forest(Path(path).read_text())


def path_forest(n: int) -> Forest:
    """Path on n vertices: 0-1-2-...-(n-1)."""
    return Forest(n, [(i, i + 1) for i in range(n - 1)])


def star_forest(leaves: int) -> Forest:
    """Star with centre 0 and the given number of leaves."""
    return Forest(leaves + 1, [(0, i + 1) for i in range(leaves)])
