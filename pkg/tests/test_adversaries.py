import random

import pytest

from treegame.adversaries import RandomBob, SkipperBob, SpoilerBob, exhaustive_bob, make_bob
from treegame.errors import BudgetExceeded
from treegame.forest import Forest, path_forest, star_forest
from treegame.state import GameState

from .conftest import random_tree


def test_random_bob_deterministic_replay():
    f = path_forest(3)
    moves = []
    for _ in range(2):
        st = GameState(f, k=3)
        bob = RandomBob(seed=42)
        moves.append(bob.next_move(st))
    assert moves[0] == moves[1]
    assert moves[0][0] == "colour"


def test_random_bob_moves_are_legal():
    rng = random.Random(3)
    f = random_tree(40, rng, delta_cap=4)
    st = GameState(f)
    bob = RandomBob(seed=9)
    for _ in range(20):
        action = bob.next_move(st)
        assert action[0] == "colour"
        _t, eid, colour = action
        st.apply_colouring(eid, colour)  # raises if illegal


def test_skipper_always_skips_at_probability_one():
    f = star_forest(4)
    st = GameState(f, k=5)
    bob = SkipperBob(seed=1, skip_probability=1.0)
    for _ in range(5):
        assert bob.next_move(st) == ("skip",)


def test_skipper_cannot_skip_when_disallowed():
    f = star_forest(4)
    st = GameState(f, k=5, bob_may_skip=False)
    bob = SkipperBob(seed=1, skip_probability=1.0)
    action = bob.next_move(st)
    assert action[0] == "colour"


def test_spoiler_prefers_second_base_creation():
    # star-like component with base 0; an off-path pendant edge creates a
    # degree-3 induced vertex, which the spoiler must rank highest
    f = Forest(
        10,
        [(0, 1), (0, 2), (0, 3), (0, 4), (4, 5), (5, 6), (5, 7), (6, 8), (8, 9)],
    )
    st = GameState(f, k=5)
    st.apply_colouring(0, 1)
    st.apply_colouring(1, 2)
    st.apply_colouring(2, 3)
    st.apply_colouring(8, 4)  # leaf (6,8): base stays unique (0);
    # now a pendant at 5 (edge (5,7)) would create a second base at 5
    bob = SpoilerBob(seed=0)
    action = bob.next_move(st)
    assert action[0] == "colour"
    _t, eid, _colour = action
    view = st.view_of_edge(6)
    assert view is not None and view.base == 0
    assert bob._creates_second_base(st, view, 6) == 1  # edge (5,7) qualifies
    chosen_view = st.view_of_edge(eid)
    assert bob._creates_second_base(st, chosen_view, eid) == 1


def test_spoiler_second_base_flag_matches_brute_force():
    from treegame.components import snapshot_components, build_view

    rng = random.Random(11)
    checked = 0
    for _ in range(40):
        f = random_tree(14, rng, delta_cap=4)
        st = GameState(f, k=5)
        order = list(range(f.m))
        rng.shuffle(order)
        for eid in order[: rng.randrange(2, 6)]:
            feas = st.feasible(eid)
            if feas:
                st.apply_colouring(eid, rng.choice(feas))
        # random play may itself have built a two-base component; skip those
        if any(len(v.base_nodes) >= 2 for v in st.active_views()):
            continue
        bob = SpoilerBob(seed=1)
        for eid in range(f.m):
            if st.colour_of[eid]:
                continue
            view = st.view_of_edge(eid)
            if view is None or not view.star_like():
                continue
            got = bob._creates_second_base(st, view, eid)
            # apply on a copy of the colouring and inspect the base count
            col = list(st.colour_of)
            col[eid] = st.k  # colour value irrelevant for base structure
            two_base = 0
            for members, leaves in snapshot_components(f, col):
                if len(leaves) >= 3 and len(members) >= 1:
                    v = build_view(members[0], leaves, len(members), col, f, st.lca)
                    if len(v.base_nodes) >= 2:
                        two_base = 1
            assert got == two_base, (f.edges, st.colour_of, eid)
            checked += 1
    assert checked > 50


def test_exhaustive_bob_counts_single_edge():
    st = GameState(Forest(2, [(0, 1)]), k=2)
    actions = list(exhaustive_bob(st, budget=8))
    assert len(actions) == 3  # two colours + skip
    assert ("skip",) in actions


def test_exhaustive_bob_properness_at_shared_vertex():
    st = GameState(path_forest(3), k=4)
    st.apply_colouring(0, 1)
    actions = [a for a in exhaustive_bob(st, budget=8) if a[0] == "colour"]
    assert actions == [("colour", 1, c) for c in (2, 3, 4)]


def test_exhaustive_bob_budget():
    st = GameState(path_forest(12), k=3)
    with pytest.raises(BudgetExceeded):
        list(exhaustive_bob(st, budget=8))


def test_make_bob():
    assert make_bob("random", 1).name == "random"
    assert make_bob("spoiler", 1).name == "spoiler"
    assert make_bob("skipper", 1).name == "skipper"
    with pytest.raises(ValueError):
        make_bob("mcts")
