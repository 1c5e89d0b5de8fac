"""Shared fixtures and independent reference oracles used across the suite.

The oracles here deliberately use the dumbest correct algorithms (fresh BFS,
parent walks, full recursion) so they stay independent of the structures
they check.
"""
from __future__ import annotations

import random
from collections import deque

import pytest

from treegame.forest import Forest


# ---------------------------------------------------------------------------
# random tree generators
# ---------------------------------------------------------------------------

def random_tree(n: int, rng: random.Random, delta_cap: int | None = None) -> Forest:
    """Random attachment tree on n vertices, optionally degree-capped."""
    edges = []
    degree = [0] * n
    eligible = [0]
    for v in range(1, n):
        i = rng.randrange(len(eligible))
        p = eligible[i]
        edges.append((p, v))
        degree[p] += 1
        degree[v] += 1
        if delta_cap is not None and degree[p] >= delta_cap:
            eligible[i] = eligible[-1]
            eligible.pop()
        eligible.append(v)
    return Forest(n, edges)


def random_forest(n: int, rng: random.Random, extra_components: int = 0) -> Forest:
    """Random forest: a random tree with some edges knocked out."""
    tree = random_tree(n, rng)
    if extra_components <= 0 or n < 2:
        return tree
    drop = set(rng.sample(range(n - 1), min(extra_components, n - 1)))
    return Forest(n, [e for i, e in enumerate(tree.edges) if i not in drop])


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC0FFEE)


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------

def bfs_components(n: int, edges: list[tuple[int, int]], alive) -> list[int]:
    """Component id per vertex via fresh BFS over ``alive`` edges."""
    adj = [[] for _ in range(n)]
    for eid, (u, v) in enumerate(edges):
        if alive(eid):
            adj[u].append(v)
            adj[v].append(u)
    comp = [-1] * n
    cid = 0
    for s in range(n):
        if comp[s] != -1:
            continue
        comp[s] = cid
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if comp[y] == -1:
                    comp[y] = cid
                    q.append(y)
        cid += 1
    return comp


def same_partition(a: list[int], b: list[int]) -> bool:
    """True when two labelings induce the same partition (up to renaming)."""
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}
    for x, y in zip(a, b):
        if fwd.setdefault(x, y) != y or bwd.setdefault(y, x) != x:
            return False
    return True


def bfs_path(forest: Forest, u: int, v: int) -> list[int] | None:
    """Vertex path from u to v over the full forest, or None."""
    if u == v:
        return [u]
    prev = {u: u}
    q = deque([u])
    while q:
        x = q.popleft()
        for eid in forest.adj[x]:
            y = forest.other_end(eid, x)
            if y not in prev:
                prev[y] = x
                if y == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(prev[path[-1]])
                    path.reverse()
                    return path
                q.append(y)
    return None


def naive_lca(forest: Forest, roots_depth_parent, u: int, v: int) -> int:
    """Walk-up LCA using precomputed parent/depth dictionaries."""
    depth, parent = roots_depth_parent
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
    while depth[b] > depth[a]:
        b = parent[b]
    while a != b:
        a = parent[a]
        b = parent[b]
    return a


def root_forest(forest: Forest) -> tuple[list[int], list[int]]:
    """(depth, parent) arrays rooted at each component's smallest vertex."""
    depth = [-1] * forest.n
    parent = [-1] * forest.n
    for members in forest.comp_vertices:
        root = members[0]
        depth[root] = 0
        q = deque([root])
        while q:
            x = q.popleft()
            for eid in forest.adj[x]:
                y = forest.other_end(eid, x)
                if depth[y] == -1:
                    depth[y] = depth[x] + 1
                    parent[y] = x
                    q.append(y)
    return depth, parent
