"""Shared grid and random-instance generators for the test suite."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from hazeopt import GenConfig, HazingInstance, HazingSequence, gen_game, to_hazing_instance


def iter_grid(
    delta_max: int = 15,
    h_max: int = 5,
    t_min: int = -3,
    max_size: int = 3,
) -> Iterator[HazingInstance]:
    """Every instance with an alphabet of up to max_size distinct (h, t) pairs,
    h in [1, h_max], t in [t_min, delta], delta in [0, delta_max]."""
    for delta in range(delta_max + 1):
        pool = [(h, t) for h in range(1, h_max + 1) for t in range(t_min, delta + 1)]
        for size in range(1, max_size + 1):
            for combo in combinations(pool, size):
                yield HazingInstance(combo, delta)


def random_instances(count: int, n_max: int, mpd_max: int, seed: int) -> list[HazingInstance]:
    """Random generator-sampled instances with per-instance n and mpd draws."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, n_max)
        mpd = rng.randint(1, mpd_max)
        game = gen_game(GenConfig(n=n, mpd=mpd, seed=rng.getrandbits(64), count=1))[0]
        out.append(to_hazing_instance(game))
    return out


def is_threshold_monotonic(inst: HazingInstance, seq: HazingSequence) -> bool:
    """All occurrences of each action adjacent, blocks in nondecreasing t."""
    steps = seq.steps
    seen = set()
    prev_j = None
    for j in steps:
        if j != prev_j:
            if j in seen:
                return False  # occurrences of j are split
            seen.add(j)
            if prev_j is not None and inst.alphabet[j][1] < inst.alphabet[prev_j][1]:
                return False
            prev_j = j
    return True
