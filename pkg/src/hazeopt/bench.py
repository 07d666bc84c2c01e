"""Random game generation and solver runtime benchmarking.

Games are sampled per action: cooperative payoff p uniform on [0, min(30,
mpd)], deviation payoff p_star uniform on [p, mpd], so delta is always
nonnegative.  The sampler is the Mersenne Twister behind random.Random,
recorded as "mt19937" in generator metadata; a fixed seed reproduces games
bit for bit.  Generated games carry discount factor 9/10 (benchmarking only
exercises the hazing side, which ignores it).

run_bench times solver calls alone (instances are transformed beforehand)
with the monotonic nanosecond clock, after 3 untimed warmup solves per
series.  Infeasible instances are timed and counted but excluded from the
mean total hazing.  Series may run on parallel worker threads when the
HAZEOPT_THREADS environment variable exceeds 1 (note: concurrent timing on
CPython distorts absolute runtimes; the default is 1); records are merged
by sort order, not completion order.
"""

from __future__ import annotations

import csv
import gc
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional, Sequence

from .games import HazingInstance, SymmetricGame, to_hazing_instance
from .solvers import SOLVED, SolveResult, solve_brute, solve_dp, solve_fptas, solve_ilp

GENERATOR_ID = "mt19937"
GENERATOR_BETA = Fraction(9, 10)
CSV_HEADER = "n,mpd,algo,epsilon,trials,mean_runtime_ns,feasible_count,mean_total_hazing"
EXACT_ALGOS = ("dp", "ilp", "brute")
WARMUP_SOLVES = 3
THREADS_ENV = "HAZEOPT_THREADS"


@dataclass(frozen=True)
class GenConfig:
    """Generator parameters: action count, payoff cap, seed, game count."""

    n: int
    mpd: int
    seed: int
    count: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be at least 1, got {self.n}")
        if self.mpd < 0:
            raise ValueError(f"mpd must be nonnegative, got {self.mpd}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if self.count < 1:
            raise ValueError(f"count must be at least 1, got {self.count}")


def gen_game(cfg: GenConfig) -> list[SymmetricGame]:
    """Sample cfg.count games deterministically from cfg.seed."""
    rng = random.Random(cfg.seed)
    p_cap = min(30, cfg.mpd)
    games = []
    for _ in range(cfg.count):
        actions = []
        for _ in range(cfg.n):
            p = rng.randint(0, p_cap)
            actions.append((p, rng.randint(p, cfg.mpd)))
        games.append(SymmetricGame(actions, GENERATOR_BETA))
    return games


def gen_meta(cfg: GenConfig) -> dict:
    """Metadata stamped on generated game files (fixed key order)."""
    return {
        "generator": GENERATOR_ID,
        "seed": cfg.seed,
        "n": cfg.n,
        "mpd": cfg.mpd,
        "count": cfg.count,
    }


@dataclass(frozen=True)
class BenchRecord:
    """One benchmark series: an (n, mpd, algo, epsilon) cell's averages."""

    n: int
    mpd: int
    algo: str
    epsilon: str  # "" for exact solvers
    trials: int
    mean_runtime_ns: float
    feasible_count: int
    mean_total_hazing: Optional[float]

    def __post_init__(self) -> None:
        if self.algo not in EXACT_ALGOS and self.algo != "fptas":
            raise ValueError(f"unknown algo {self.algo!r}")
        if (self.algo == "fptas") != bool(self.epsilon):
            raise ValueError("epsilon labels exactly the fptas records")
        if not self.mean_runtime_ns > 0:
            raise ValueError("mean_runtime_ns must be positive")
        if not 0 <= self.feasible_count <= self.trials:
            raise ValueError("feasible_count must lie in [0, trials]")


def _make_solver(algo: str, epsilon: Optional[Fraction]) -> Callable[[HazingInstance], SolveResult]:
    if algo == "dp":
        return solve_dp
    if algo == "ilp":
        return solve_ilp
    if algo == "brute":
        return solve_brute
    if algo == "fptas":
        if epsilon is None:
            raise ValueError("fptas requires an epsilon")
        return lambda inst: solve_fptas(inst, epsilon)
    raise ValueError(f"unknown algorithm {algo!r}")


def _epsilon_label(epsilon: Fraction) -> str:
    return format(float(epsilon), "g")


def _run_series(
    key: tuple[int, int],
    instances: list[HazingInstance],
    algo: str,
    epsilon: Optional[Fraction],
    trials: int,
) -> BenchRecord:
    solver = _make_solver(algo, epsilon)
    m = len(instances)
    for i in range(WARMUP_SOLVES):
        solver(instances[i % m])
    clock = time.perf_counter_ns
    total_ns = 0
    feasible = 0
    hazing_sum = 0
    # collector pauses inside a microsecond-scale solve would swamp the mean
    gc_was_enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        for i in range(trials):
            inst = instances[i % m]
            t0 = clock()
            result = solver(inst)
            total_ns += clock() - t0
            if result.status == SOLVED:
                feasible += 1
                hazing_sum += result.total_hazing
    finally:
        if gc_was_enabled:
            gc.enable()
    return BenchRecord(
        n=key[0],
        mpd=key[1],
        algo=algo,
        epsilon="" if epsilon is None else _epsilon_label(epsilon),
        trials=trials,
        mean_runtime_ns=max(total_ns, 1) / trials,
        feasible_count=feasible,
        mean_total_hazing=hazing_sum / feasible if feasible else None,
    )


def bench_threads() -> int:
    """Worker-thread cap from HAZEOPT_THREADS (default 1)."""
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        threads = int(raw)
    except ValueError as exc:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {raw!r}") from exc
    if threads < 1:
        raise ValueError(f"{THREADS_ENV} must be at least 1, got {threads}")
    return threads


def run_bench(
    games: Mapping[tuple[int, int], Sequence[SymmetricGame]],
    algos: Sequence[str],
    epsilons: Sequence["Fraction | str | int | float"] = (),
    trials: int = 100,
) -> list[BenchRecord]:
    """Benchmark every (cell, algo, epsilon) series and return sorted records.

    games maps (n, mpd) to the cell's game list; trials timed solves cycle
    through it.  Exact algorithms contribute one series per cell, fptas one
    per epsilon.
    """
    if not algos:
        raise ValueError("select at least one algorithm")
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    eps_values = [Fraction(e) if not isinstance(e, float) else Fraction(repr(e)) for e in epsilons]
    for algo in algos:
        if algo not in EXACT_ALGOS and algo != "fptas":
            raise ValueError(f"unknown algorithm {algo!r}")
    if "fptas" in algos and not eps_values:
        raise ValueError("fptas selected but no epsilon given")
    for eps in eps_values:
        if not 0 < eps <= 1:
            raise ValueError(f"epsilon must lie in (0, 1], got {eps}")

    series = []
    for key in sorted(games):
        cell = list(games[key])
        if not cell:
            raise ValueError(f"cell {key} has no games")
        instances = [to_hazing_instance(g) for g in cell]
        for algo in algos:
            if algo == "fptas":
                for eps in eps_values:
                    series.append((key, instances, algo, eps))
            else:
                series.append((key, instances, algo, None))

    threads = bench_threads()
    if threads == 1:
        records = [_run_series(k, ins, a, e, trials) for k, ins, a, e in series]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(
                pool.map(lambda s: _run_series(s[0], s[1], s[2], s[3], trials), series)
            )
    records.sort(key=lambda r: (r.n, r.mpd, r.algo, float(r.epsilon) if r.epsilon else -1.0))
    return records


def write_bench_csv(path: str, records: Sequence[BenchRecord]) -> None:
    """Emit records under the fixed header, ordered by (n, mpd, algo, epsilon)."""
    rows = sorted(records, key=lambda r: (r.n, r.mpd, r.algo, float(r.epsilon) if r.epsilon else -1.0))
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for r in rows:
            writer.writerow(
                [
                    r.n,
                    r.mpd,
                    r.algo,
                    r.epsilon,
                    r.trials,
                    repr(r.mean_runtime_ns),
                    r.feasible_count,
                    "" if r.mean_total_hazing is None else repr(r.mean_total_hazing),
                ]
            )
