"""Minimum-total-hazing solvers for restart equilibria of repeated games."""

from .games import (
    GoalMeta,
    HazingInstance,
    HazingSequence,
    InstanceTooLargeError,
    PayoffSequence,
    StabilityReport,
    SymmetricGame,
    UnstableSequenceError,
    as_fraction,
    canonicalize,
    check_stability_beta,
    check_stability_limit,
    discounted_utility,
    limit_compare,
    to_hazing_instance,
    to_payoff_sequence,
)
from .solvers import (
    INFEASIBLE,
    SOLVED,
    DpTables,
    FptasTables,
    SolveResult,
    dp_tables,
    min_hazing_dp,
    solve_brute,
    solve_dp,
    solve_fptas,
    solve_fptas_with_tables,
    solve_ilp,
)
from .reductions import UsspInstance, solve_ussp_brute, ussp_to_optrep
from .bench import (
    CSV_HEADER,
    BenchRecord,
    GenConfig,
    gen_game,
    gen_meta,
    run_bench,
    write_bench_csv,
)
from .gamefile import (
    GameFileError,
    game_from_obj,
    game_to_obj,
    load_games,
    load_sequence,
    load_single_game,
    save_games,
    save_sequence,
)
from .cli import cli_main

__version__ = "0.1.0"

__all__ = [
    "BenchRecord",
    "CSV_HEADER",
    "DpTables",
    "FptasTables",
    "GameFileError",
    "GenConfig",
    "GoalMeta",
    "HazingInstance",
    "HazingSequence",
    "INFEASIBLE",
    "InstanceTooLargeError",
    "PayoffSequence",
    "SOLVED",
    "SolveResult",
    "StabilityReport",
    "SymmetricGame",
    "UnstableSequenceError",
    "UsspInstance",
    "as_fraction",
    "canonicalize",
    "check_stability_beta",
    "check_stability_limit",
    "cli_main",
    "discounted_utility",
    "dp_tables",
    "game_from_obj",
    "game_to_obj",
    "gen_game",
    "gen_meta",
    "limit_compare",
    "load_games",
    "load_sequence",
    "load_single_game",
    "min_hazing_dp",
    "run_bench",
    "save_games",
    "save_sequence",
    "solve_brute",
    "solve_dp",
    "solve_fptas",
    "solve_fptas_with_tables",
    "solve_ilp",
    "solve_ussp_brute",
    "to_hazing_instance",
    "to_payoff_sequence",
    "ussp_to_optrep",
    "write_bench_csv",
]
