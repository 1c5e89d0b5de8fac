import random

import pytest

from treegame.errors import DifferentComponents
from treegame.forest import Forest, path_forest, star_forest
from treegame.lca import build

from .conftest import bfs_path, naive_lca, random_forest, random_tree, root_forest


def test_identity():
    idx = build(random_tree(20, random.Random(1)))
    for v in range(20):
        assert idx.lca(v, v) == v


def test_path_rooted_at_zero():
    idx = build(path_forest(3))
    assert idx.lca(0, 2) == 0
    assert idx.depth[2] == 2
    assert idx.depth[0] == 0


def test_next_on_path_small():
    idx = build(path_forest(3))
    assert idx.next_on_path(0, 2) == 1
    assert idx.next_on_path(2, 0) == 1
    star = build(star_forest(3))
    assert star.next_on_path(1, 2) == 0


def test_different_components_raise():
    idx = build(Forest(4, [(0, 1), (2, 3)]))
    with pytest.raises(DifferentComponents):
        idx.lca(0, 3)
    with pytest.raises(DifferentComponents):
        idx.next_on_path(0, 2)


def test_depth_parent_invariant():
    rng = random.Random(7)
    for _ in range(20):
        f = random_tree(rng.randrange(2, 80), rng)
        idx = build(f)
        for v in range(f.n):
            p = idx.parent[v]
            if p == -1:
                assert idx.depth[v] == 0
            else:
                assert idx.depth[v] == idx.depth[p] + 1


def test_lca_matches_naive_walk_up():
    rng = random.Random(42)
    # all pairs on a batch of small trees
    for _ in range(50):
        f = random_tree(rng.randrange(2, 30), rng)
        idx = build(f)
        ref = root_forest(f)
        for u in range(f.n):
            for v in range(u, f.n):
                assert idx.lca(u, v) == naive_lca(f, ref, u, v)
    # sampled pairs on many larger trees
    for _ in range(1000):
        f = random_tree(rng.randrange(2, 61), rng)
        idx = build(f)
        ref = root_forest(f)
        for _ in range(40):
            u, v = rng.randrange(f.n), rng.randrange(f.n)
            assert idx.lca(u, v) == naive_lca(f, ref, u, v)


def test_lca_on_forests():
    rng = random.Random(3)
    for _ in range(50):
        f = random_forest(rng.randrange(4, 40), rng, extra_components=2)
        idx = build(f)
        ref = root_forest(f)
        for _ in range(30):
            u, v = rng.randrange(f.n), rng.randrange(f.n)
            if f.comp_of[u] != f.comp_of[v]:
                with pytest.raises(DifferentComponents):
                    idx.lca(u, v)
            else:
                assert idx.lca(u, v) == naive_lca(f, ref, u, v)


def test_next_on_path_matches_bfs():
    rng = random.Random(11)
    for _ in range(300):
        f = random_tree(rng.randrange(2, 61), rng)
        idx = build(f)
        for _ in range(20):
            u, v = rng.randrange(f.n), rng.randrange(f.n)
            if u == v:
                continue
            path = bfs_path(f, u, v)
            assert idx.next_on_path(u, v) == path[1]


def test_next_on_path_shrinks_distance():
    rng = random.Random(13)
    f = random_tree(50, rng)
    idx = build(f)
    for _ in range(100):
        u, v = rng.randrange(50), rng.randrange(50)
        if u == v:
            continue
        w = idx.next_on_path(u, v)
        assert idx.dist(w, v) == idx.dist(u, v) - 1


def test_median():
    f = path_forest(5)
    idx = build(f)
    assert idx.median(0, 4, 2) == 2
    star = build(star_forest(4))
    assert star.median(1, 2, 3) == 0


def test_query_counter():
    idx = build(path_forest(10))
    idx.reset_counter()
    idx.lca(0, 9)
    idx.next_on_path(3, 7)
    assert idx.queries == 2
