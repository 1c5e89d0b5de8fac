import random

import pytest

from treegame.errors import EdgeAlreadyColoured, ImproperColour, UnknownEdge
from treegame.forest import Forest, path_forest, star_forest
from treegame.state import GameState, feasible_colours

from .conftest import bfs_components, random_tree, same_partition


def test_colouring_splits_path():
    st = GameState(path_forest(3), k=2)
    out = st.apply_colouring(0, 1)
    # vertex 0 side is a singleton (retired); vertex 1-2 side is active
    assert out.retired_vertices == [0]
    assert len(out.new_views) == 1
    view = out.new_views[0]
    assert view.leaves == [(0, 1)]
    assert view.size == 2


def test_improper_colour_rejected_and_state_unchanged():
    st = GameState(star_forest(4), k=4)
    st.apply_colouring(0, 1)
    before = list(st.colour_of)
    with pytest.raises(ImproperColour):
        st.apply_colouring(1, 1)  # clashes at the centre
    assert st.colour_of == before
    assert st.uncoloured_count == 3


def test_validation_errors():
    st = GameState(path_forest(4), k=2)
    with pytest.raises(UnknownEdge):
        st.apply_colouring(99, 1)
    with pytest.raises(ImproperColour):
        st.apply_colouring(0, 3)  # out of range
    st.apply_colouring(0, 1)
    with pytest.raises(EdgeAlreadyColoured):
        st.apply_colouring(0, 2)


def test_feasible_colours():
    f = star_forest(4)
    st = GameState(f, k=5)
    assert st.feasible(0) == [1, 2, 3, 4, 5]
    st.apply_colouring(1, 1)
    st.apply_colouring(2, 2)
    st.apply_colouring(3, 3)
    assert st.feasible(0) == [4, 5]


def test_components_match_fresh_bfs_after_random_play():
    rng = random.Random(1234)
    for _ in range(20):
        f = random_tree(50, rng)
        st = GameState(f, k=f.delta + 1)
        order = list(range(f.m))
        rng.shuffle(order)
        for eid in order:
            feas = st.feasible(eid)
            if not feas:
                break
            st.apply_colouring(eid, rng.choice(feas))
            # compare the uncoloured-forest partition against fresh BFS
            ref = bfs_components(f.n, f.edges, lambda e: not st.colour_of[e])
            mine = [st.df.find(v) for v in range(f.n)]
            assert same_partition(mine, ref)


def test_leaf_multiplicity_accounting():
    # sum of leaf list lengths = sum over coloured edges of active sides
    rng = random.Random(77)
    for _ in range(20):
        f = random_tree(40, rng)
        st = GameState(f, k=f.delta + 1)
        order = list(range(f.m))
        rng.shuffle(order)
        for eid in order[: f.m // 2]:
            feas = st.feasible(eid)
            if not feas:
                break
            st.apply_colouring(eid, feas[0])
        total = sum(len(v.leaves) for v in st.active_views())
        expect = 0
        for eid in range(f.m):
            if not st.colour_of[eid]:
                continue
            for v in f.edges[eid]:
                lab = st.df.find(v)
                if lab in st.registry:
                    expect += 1
        assert total == expect


def test_leaf_lists_repartitioned_to_both_sides():
    # star: colour one edge; both sides list the coloured edge as a leaf,
    # but the leaf side is singleton-retired
    st = GameState(star_forest(4), k=5)
    out = st.apply_colouring(2, 1)
    assert out.retired_vertices == [3]
    assert out.new_views[0].leaves == [(2, 0)]


def test_dead_edge_detection():
    # P4 with outer edges coloured 1, 2 and k=2: middle edge dies
    st = GameState(path_forest(4), k=2)
    st.apply_colouring(0, 1)
    out = st.apply_colouring(2, 2)
    assert out.new_dead_edges == [1]
    assert st.dead_edges == [1]


def test_singleton_components_absent_from_registry():
    st = GameState(Forest(3, [(0, 1)]), k=2)
    assert len(st.registry) == 1  # the isolated vertex 2 never appears
    st.apply_colouring(0, 1)
    assert len(st.registry) == 0
