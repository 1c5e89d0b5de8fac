"""Engine and verification lab for the two-player edge-colouring game on trees.

Alice and Bob alternately properly colour edges of a forest with k colours;
Alice wins when every edge gets coloured.  This package implements Alice's
constructive winning strategy for maximum degree 4 and 5 with delta+1
colours (Bob may skip), the constant-work-per-move selection machinery
(Euler-tour LCA plus decremental tree connectivity), an exact small-tree
minimax oracle with tree enumeration, a CLI, and an HTTP service for
playing Bob interactively.
"""

from .adversaries import RandomBob, SkipperBob, SpoilerBob, exhaustive_bob, make_bob
from .components import ComponentView, InvariantReport, build_view
from .decremental import (
    BaselineDecrementalForest,
    TwoLevelDecrementalForest,
    init_decremental,
)
from .engine import GameTrace, MoveRecord, play, read_trace, replay, winner, write_trace
from .forest import Forest, load_forest, parse_forest, path_forest, star_forest
from .lca import LcaIndex, build as build_lca
from .oracle import (
    SolveConfig,
    enumerate_trees,
    enumerate_trees_up_to,
    game_chromatic_index,
    solve,
)
from .state import GameState, feasible_colours
from .strategy import StrategyDecision, choose_move
from .verify import verify_forest, verify_trees

__version__ = "0.1.0"

__all__ = [
    "BaselineDecrementalForest",
    "ComponentView",
    "Forest",
    "GameState",
    "GameTrace",
    "InvariantReport",
    "LcaIndex",
    "MoveRecord",
    "RandomBob",
    "SkipperBob",
    "SolveConfig",
    "SpoilerBob",
    "StrategyDecision",
    "TwoLevelDecrementalForest",
    "build_lca",
    "build_view",
    "choose_move",
    "enumerate_trees",
    "enumerate_trees_up_to",
    "exhaustive_bob",
    "feasible_colours",
    "game_chromatic_index",
    "init_decremental",
    "load_forest",
    "make_bob",
    "parse_forest",
    "path_forest",
    "play",
    "read_trace",
    "replay",
    "solve",
    "star_forest",
    "verify_forest",
    "verify_trees",
    "winner",
    "write_trace",
    "__version__",
]
