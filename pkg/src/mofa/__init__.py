"""Multiobjective firefly optimizer with a Pareto-front toolkit,
benchmark problems and a CLI harness."""

from .engine import (
    BoundsBox,
    Diagnostics,
    EngineState,
    Firefly,
    InitializationError,
    MofaConfig,
    RunResult,
    attractiveness,
    decay_alpha,
    effective_gamma,
    find_best_scalarized,
    initialize,
    move_towards,
    random_walk_best,
    run,
    scale_params,
    step,
)
from .pareto import (
    ParetoArchive,
    ReferenceFrontMetrics,
    crowding_distances,
    dominates,
    dominates_or_equal,
    front_error,
    generational_distance,
    non_dominated_filter,
    random_weights,
    select_by_crowding,
    weighted_scalarize,
)
from .problems import (
    PROBLEMS,
    ProblemDefinition,
    available_problems,
    disc_brake_constraints,
    disc_brake_evaluate,
    get_problem,
    lz_evaluate,
    sample_reference_front,
    sch_evaluate,
    welded_beam_constraints,
    welded_beam_evaluate,
    zdt1_evaluate,
    zdt2_evaluate,
    zdt3_evaluate,
)

__version__ = "0.1.0"

__all__ = [
    "BoundsBox",
    "Diagnostics",
    "EngineState",
    "Firefly",
    "InitializationError",
    "MofaConfig",
    "PROBLEMS",
    "ParetoArchive",
    "ProblemDefinition",
    "ReferenceFrontMetrics",
    "RunResult",
    "attractiveness",
    "available_problems",
    "crowding_distances",
    "decay_alpha",
    "disc_brake_constraints",
    "disc_brake_evaluate",
    "dominates",
    "dominates_or_equal",
    "effective_gamma",
    "find_best_scalarized",
    "front_error",
    "generational_distance",
    "get_problem",
    "initialize",
    "lz_evaluate",
    "move_towards",
    "non_dominated_filter",
    "random_walk_best",
    "random_weights",
    "run",
    "sample_reference_front",
    "scale_params",
    "sch_evaluate",
    "select_by_crowding",
    "step",
    "weighted_scalarize",
    "welded_beam_constraints",
    "welded_beam_evaluate",
    "zdt1_evaluate",
    "zdt2_evaluate",
    "zdt3_evaluate",
]
