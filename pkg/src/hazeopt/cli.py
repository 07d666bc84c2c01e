"""Command-line surface.

Subcommands: solve (run one solver on a game file), check (stability at a
finite discount factor or in the patient limit), canon (threshold-monotonic
rewrite of a sequence), gen (random game files), bench (runtime CSV), and
reduce-ussp (emit the hazing instance embedding an unbounded subset-sum
question).

Exit codes: 0 success, 1 for infeasible/unstable verdicts, 2 for input
errors (malformed files, bad flags), with diagnostics on stderr.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from typing import Optional

from .bench import GenConfig, gen_game, gen_meta, run_bench, write_bench_csv
from .games import (
    HazingInstance,
    InstanceTooLargeError,
    SymmetricGame,
    UnstableSequenceError,
    check_stability_beta,
    check_stability_limit,
    canonicalize,
    to_hazing_instance,
    to_payoff_sequence,
)
from .gamefile import (
    GameFileError,
    dumps_compact,
    game_to_obj,
    load_sequence,
    load_single_game,
    save_games,
)
from .reductions import UsspInstance, ussp_to_optrep
from .solvers import INFEASIBLE, solve_brute, solve_dp, solve_fptas, solve_ilp

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_INPUT


def _load_instance(path: str) -> tuple[HazingInstance, Optional[SymmetricGame]]:
    game = load_single_game(path)
    if isinstance(game, SymmetricGame):
        return to_hazing_instance(game), game
    return game, None


def _threshold_positions(inst: HazingInstance) -> list[int]:
    pos = [0] * inst.n
    for i, j in enumerate(inst.threshold_order):
        pos[j] = i
    return pos


def _print_sequence(inst: HazingInstance, steps: tuple[int, ...]) -> None:
    pos = _threshold_positions(inst)
    print("steps:", " ".join(str(pos[j]) for j in steps))
    print("witness:", " ".join(str(inst.alphabet[j][0]) for j in steps))


def _cmd_solve(args: argparse.Namespace) -> int:
    if args.algo == "fptas":
        if args.epsilon is None:
            return _fail("fptas needs --epsilon")
    elif args.epsilon is not None:
        return _fail(f"--epsilon applies only to fptas, not {args.algo}")
    inst, _ = _load_instance(args.input)
    if args.algo == "dp":
        result = solve_dp(inst)
    elif args.algo == "ilp":
        result = solve_ilp(inst)
    elif args.algo == "brute":
        result = solve_brute(inst)
    else:
        result = solve_fptas(inst, Fraction(args.epsilon))
    if result.status == INFEASIBLE:
        print("infeasible")
        return EXIT_VERDICT
    print(f"H={result.total_hazing}")
    _print_sequence(inst, result.sequence.steps)
    return EXIT_OK


def _cmd_check(args: argparse.Namespace) -> int:
    inst, game = _load_instance(args.input)
    seq = load_sequence(args.sequence, inst)
    if args.limit:
        report = check_stability_limit(inst, seq)
        if report.stable:
            print("stable")
            return EXIT_OK
        k = report.first_violation
        lhs, rhs = report.detail
        if k == len(seq.steps):
            print(f"unstable: final threshold unmet (total {lhs} <= delta {rhs})")
        else:
            print(f"unstable: step {k} (served {lhs} <= threshold {rhs})")
        return EXIT_VERDICT
    if game is None:
        return _fail("finite-beta check needs a payoff game file")
    pseq = to_payoff_sequence(inst, seq)
    report = check_stability_beta(pseq, Fraction(args.beta))
    if report.stable:
        print("stable")
        return EXIT_OK
    lhs, rhs = report.detail
    print(
        f"unstable: step {report.first_violation} deviation profitable "
        f"({float(lhs):.6g} > {float(rhs):.6g})"
    )
    return EXIT_VERDICT


def _cmd_canon(args: argparse.Namespace) -> int:
    inst, _ = _load_instance(args.input)
    seq = load_sequence(args.sequence, inst)
    try:
        canon = canonicalize(inst, seq)
    except UnstableSequenceError as exc:
        print(f"unstable: {exc}")
        return EXIT_VERDICT
    _print_sequence(inst, canon.steps)
    return EXIT_OK


def _cmd_gen(args: argparse.Namespace) -> int:
    cfg = GenConfig(n=args.n, mpd=args.mpd, seed=args.seed, count=args.count)
    save_games(args.out, gen_game(cfg), gen_meta(cfg))
    return EXIT_OK


def _parse_int_list(raw: str, flag: str) -> list[int]:
    try:
        values = [int(part) for part in raw.split(",") if part]
    except ValueError as exc:
        raise ValueError(f"{flag}: expected comma-separated integers, got {raw!r}") from exc
    if not values:
        raise ValueError(f"{flag}: empty list")
    return values


def _cmd_bench(args: argparse.Namespace) -> int:
    n_list = _parse_int_list(args.n_list, "--n-list")
    mpd_list = _parse_int_list(args.mpd_list, "--mpd-list")
    algos = [a for a in args.algos.split(",") if a]
    epsilons = [Fraction(e) for e in args.epsilons.split(",") if e] if args.epsilons else []
    if not 0 <= args.seed < 2**64:
        raise ValueError(f"--seed must fit in 64 unsigned bits, got {args.seed}")
    seeder = random.Random(args.seed)
    games = {}
    for n in sorted(set(n_list)):
        for mpd in sorted(set(mpd_list)):
            cell_cfg = GenConfig(n=n, mpd=mpd, seed=seeder.getrandbits(64), count=args.trials)
            games[(n, mpd)] = gen_game(cell_cfg)
    records = run_bench(games, algos, epsilons, trials=args.trials)
    write_bench_csv(args.out, records)
    print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def _cmd_reduce(args: argparse.Namespace) -> int:
    items = tuple(_parse_int_list(args.items, "--items"))
    inst = ussp_to_optrep(UsspInstance(items, args.target))
    sys.stdout.write(dumps_compact(game_to_obj(inst)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hazeopt",
        description="Minimum-total-hazing solvers for repeated symmetric games.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_solve = sub.add_parser("solve", help="solve a game file for minimum total hazing")
    p_solve.add_argument("--algo", required=True, choices=["dp", "ilp", "fptas", "brute"])
    p_solve.add_argument("--input", required=True, help="game file (payoff or hazing)")
    p_solve.add_argument("--epsilon", help="approximation factor for fptas, e.g. 0.3 or 3/10")
    p_solve.set_defaults(func=_cmd_solve)

    p_check = sub.add_parser("check", help="check stability of a sequence")
    p_check.add_argument("--input", required=True)
    p_check.add_argument("--sequence", required=True, help="sequence file {\"steps\": [...]}")
    mode = p_check.add_mutually_exclusive_group(required=True)
    mode.add_argument("--beta", help="check at this discount factor (payoff games only)")
    mode.add_argument("--limit", action="store_true", help="check in the patient limit")
    p_check.set_defaults(func=_cmd_check)

    p_canon = sub.add_parser("canon", help="rewrite a stable sequence threshold-monotonically")
    p_canon.add_argument("--input", required=True)
    p_canon.add_argument("--sequence", required=True)
    p_canon.set_defaults(func=_cmd_canon)

    p_gen = sub.add_parser("gen", help="generate random payoff games")
    p_gen.add_argument("--n", type=int, required=True, help="actions per game")
    p_gen.add_argument("--mpd", type=int, required=True, help="maximum deviation payoff")
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.add_argument("--count", type=int, required=True, help="number of games")
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_bench = sub.add_parser("bench", help="benchmark solvers on generated games")
    p_bench.add_argument("--n-list", required=True, help="comma-separated action counts")
    p_bench.add_argument("--mpd-list", required=True, help="comma-separated payoff caps")
    p_bench.add_argument("--algos", required=True, help="comma-separated: dp,ilp,fptas,brute")
    p_bench.add_argument("--epsilons", default="", help="comma-separated fptas epsilons")
    p_bench.add_argument("--trials", type=int, default=100)
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--out", required=True, help="CSV output path")
    p_bench.set_defaults(func=_cmd_bench)

    p_red = sub.add_parser(
        "reduce-ussp", help="emit the hazing instance for an unbounded subset-sum question"
    )
    p_red.add_argument("--items", required=True, help="comma-separated positive integers")
    p_red.add_argument("--target", type=int, required=True)
    p_red.set_defaults(func=_cmd_reduce)

    return parser


def cli_main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_INPUT
    try:
        return args.func(args)
    except (GameFileError, ValueError, OSError, InstanceTooLargeError) as exc:
        return _fail(str(exc))


def main() -> None:
    sys.exit(cli_main(sys.argv[1:]))
