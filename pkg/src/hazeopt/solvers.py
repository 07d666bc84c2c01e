"""Minimum-total-hazing solvers.

Four interchangeable solvers over a HazingInstance, all reporting through
SolveResult:

- solve_dp: exact dynamic program over accumulated hazing (pseudo-polynomial,
  O(n*delta + h_max)), with witness reconstruction.
- min_hazing_dp: value-only variant of the dynamic program using a rolling
  window of min(delta+1, h_max) table entries.
- solve_ilp: exact integer program over per-action repetition counts, solved
  by depth-first branch-and-bound in threshold order.
- solve_fptas: fully polynomial approximation scheme; guarantees a stable
  sequence within (1+epsilon) of optimal.
- solve_brute: exhaustive reference solver for cross-checking the others on
  small instances.

Infeasibility (no action with a negative threshold while delta >= 0) is a
result status, not an exception, so batch loops treat every instance
uniformly.  A negative delta makes the empty sequence stable and optimal;
every solver returns that directly.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .games import (
    HazingInstance,
    HazingSequence,
    InstanceTooLargeError,
    RationalLike,
    as_fraction,
)

SOLVED = "solved"
INFEASIBLE = "infeasible"

# int sentinel for unreachable table states; larger than any real overshoot
_INF = 1 << 60


@dataclass(frozen=True)
class SolveResult:
    """Solver output.

    counts lists per-action repetition counts in threshold order (ascending
    threshold, ties by alphabet position); sequence is an explicit witness in
    alphabet indices.  On infeasible instances the three payload fields are
    None.
    """

    status: str
    total_hazing: Optional[int]
    counts: Optional[tuple[int, ...]]
    sequence: Optional[HazingSequence]


@dataclass(frozen=True)
class DpTables:
    """Filled dynamic-program tables for inspection.

    min_overshoot[s] is the least amount by which a stable continuation from
    accumulated hazing s overshoots delta+1, or None when no stable
    continuation exists; indices run 0..delta+h_max.  choices[s] gives the
    (action index, successor state) pair realizing it for s <= delta.
    """

    min_overshoot: tuple[Optional[int], ...]
    choices: tuple[Optional[tuple[int, int]], ...]


@dataclass(frozen=True)
class FptasTables:
    """Internal state of the approximation scheme, for inspection.

    Sparse tables: best_hazing maps a normalized-cost index to the largest
    true hazing achieved at that index, witnesses to the realizing step list
    (alphabet indices).  Missing keys are unreachable.  normalized_costs is
    alphabet-aligned with None for small actions.  small_action is the
    alphabet index used for final top-up steps, None when no action is small.
    """

    upper_bound: int
    normalizer: Fraction
    table_bound: int
    normalized_costs: tuple[Optional[int], ...]
    best_hazing: dict[int, int]
    witnesses: dict[int, tuple[int, ...]]
    small_actions: tuple[int, ...]
    small_action: Optional[int]


def _solved_from_steps(inst: HazingInstance, steps: tuple[int, ...]) -> SolveResult:
    alphabet = inst.alphabet
    total = 0
    cnt = [0] * len(alphabet)
    for j in steps:
        total += alphabet[j][0]
        cnt[j] += 1
    counts = tuple(cnt[j] for j in inst.threshold_order)
    return SolveResult(SOLVED, total, counts, HazingSequence(steps))


def _infeasible() -> SolveResult:
    return SolveResult(INFEASIBLE, None, None, None)


def _dp_fill(alphabet: tuple[tuple[int, int], ...], delta: int, h_max: int):
    """Fill the overshoot table top-down from delta to 0.

    table[s] = s - delta - 1 for s > delta (already stable, overshoot known);
    otherwise the min over actions usable at s (s > t) of table[s + h].
    choices[s] records (action, successor) with ties broken toward the lowest
    action index.
    """
    size = delta + h_max + 1
    table = [_INF] * (delta + 1)
    table.extend(s - delta - 1 for s in range(delta + 1, size))
    choices: list[Optional[tuple[int, int]]] = [None] * (delta + 1)
    for s in range(delta, -1, -1):
        best = _INF
        best_j = -1
        for j, (h, t) in enumerate(alphabet):
            if s > t:
                v = table[s + h]
                if v < best:
                    best = v
                    best_j = j
        if best_j >= 0:
            table[s] = best
            choices[s] = (best_j, s + alphabet[best_j][0])
    return table, choices


def solve_dp(inst: HazingInstance) -> SolveResult:
    """Exact minimum-total-hazing via the overshoot dynamic program."""
    delta = inst.delta
    if delta < 0:
        return _solved_from_steps(inst, ())
    if not inst.alphabet:
        return _infeasible()
    table, choices = _dp_fill(inst.alphabet, delta, inst.h_max)
    if table[0] >= _INF:
        return _infeasible()
    steps = []
    s = 0
    while s <= delta:
        j, s = choices[s]
        steps.append(j)
    return _solved_from_steps(inst, tuple(steps))


def dp_tables(inst: HazingInstance) -> DpTables:
    """Fill and expose the dynamic-program tables (delta >= 0 only)."""
    if inst.delta < 0:
        raise ValueError("tables are defined for delta >= 0")
    if not inst.alphabet:
        raise ValueError("tables need a nonempty alphabet")
    table, choices = _dp_fill(inst.alphabet, inst.delta, inst.h_max)
    overshoot = tuple(None if v >= _INF else v for v in table)
    return DpTables(overshoot, tuple(choices))


def min_hazing_dp(inst: HazingInstance) -> Optional[int]:
    """Value of solve_dp without witness, in O(min(delta+1, h_max)) space.

    Returns None on infeasible instances.  Only a rolling window of table
    entries is kept: computing state s reads states in (s, s+h_max], and
    those above delta come from the closed-form base case, so min(delta+1,
    h_max) live entries suffice.
    """
    delta = inst.delta
    if delta < 0:
        return 0
    alphabet = inst.alphabet
    if not alphabet:
        return None
    w = min(delta + 1, inst.h_max)
    window = [_INF] * w
    for s in range(delta, -1, -1):
        best = _INF
        for h, t in alphabet:
            if s > t:
                nxt = s + h
                v = nxt - delta - 1 if nxt > delta else window[nxt % w]
                if v < best:
                    best = v
        # reads for state s precede this write, so the slot holding state
        # s+w (the only colliding index) is still intact where needed
        window[s % w] = best
    v0 = window[0]
    return None if v0 >= _INF else v0 + delta + 1


def solve_ilp(inst: HazingInstance) -> SolveResult:
    """Exact solve via branch-and-bound over repetition counts.

    Minimizes sum r_j * h_j over nonnegative integer counts, subject to the
    prefix constraints sum_{j' before j} r_j' h_j' >= t_j + 1 for every
    non-first action in threshold order and the final total >= delta + 1.
    The prefix constraints are unconditional: after the t <= delta
    pre-filter, an unused action's constraint is dominated by the next used
    action's (or the final) constraint, so no indicator linking is needed.

    Search walks states (position, partial sum) depth-first with two moves,
    add-one-copy and advance-position, which enumerates count vectors in
    threshold order one increment at a time.  The incumbent starts at the
    pure solution repeating the first eligible action (or one step of the
    cheapest negative-threshold action when none is eligible); states are
    pruned against the incumbent, memoized, and the search stops early once
    the incumbent hits the delta+1 floor.
    """
    delta = inst.delta
    if delta < 0:
        return _solved_from_steps(inst, ())
    n = inst.n
    if n == 0:
        return _infeasible()
    order = inst.threshold_order
    acts = [inst.alphabet[j] for j in order]
    if acts[0][1] >= 0:
        return _infeasible()
    target = delta + 1

    # incumbent: repeat the first action that is eligible (negative
    # threshold, cost within delta); if none, a single step of the cheapest
    # negative-threshold action already crosses delta
    pure_pos = -1
    for i, (h, t) in enumerate(acts):
        if t < 0 and h <= delta:
            pure_pos = i
            break
    if pure_pos >= 0:
        reps = -(-target // acts[pure_pos][0])
        best = reps * acts[pure_pos][0]
    else:
        pure_pos = min(
            (i for i, (h, t) in enumerate(acts) if t < 0),
            key=lambda i: acts[i][0],
        )
        reps = 1
        best = acts[pure_pos][0]
    best_base: Optional[int] = None  # winning state key, None = pure incumbent
    best_fin = 0

    # state key = pos * (delta + 1) + s for s in 0..delta
    span = delta + 1
    parent: dict[int, int] = {0: -1}
    stack = [0]
    while stack:
        if best == target:
            break
        key = stack.pop()
        pos, s = divmod(key, span)
        h, t = acts[pos]
        # finish using only this action: later prefix constraints are all
        # dominated by the final total
        fin = -(-(target - s) // h)
        cand = s + fin * h
        if cand < best:
            best = cand
            best_base = key
            best_fin = fin
        nxt = pos + 1
        if nxt < n:
            # advance: position nxt's prefix constraint must already hold
            if s > acts[nxt][1]:
                k2 = nxt * span + s
                if k2 not in parent:
                    parent[k2] = key
                    stack.append(k2)
            # add one copy, staying below the crossing point
            s2 = s + h
            if s2 <= delta:
                k2 = pos * span + s2
                if k2 not in parent:
                    parent[k2] = key
                    stack.append(k2)

    counts = [0] * n
    if best_base is None:
        counts[pure_pos] = reps
    else:
        key = best_base
        pos, _ = divmod(key, span)
        counts[pos] = best_fin
        while key > 0:
            prev = parent[key]
            if prev // span == key // span:
                counts[key // span] += 1
            key = prev
    steps = tuple(order[i] for i in range(n) for _ in range(counts[i]))
    result = _solved_from_steps(inst, steps)
    assert result.total_hazing == best
    return result


def solve_fptas(inst: HazingInstance, epsilon: RationalLike) -> SolveResult:
    """Approximate solve within a (1+epsilon) factor; see solve_fptas_with_tables."""
    return solve_fptas_with_tables(inst, epsilon)[0]


def solve_fptas_with_tables(
    inst: HazingInstance, epsilon: RationalLike
) -> tuple[SolveResult, Optional[FptasTables]]:
    """Approximation scheme returning the result and its internal tables.

    Pipeline: take the first eligible action (negative threshold, cost at
    most delta) in threshold order; repeating it just past delta gives an
    upper bound used to normalize costs.  Actions at most an epsilon/3
    fraction of the bound are "small" and excluded from the table; the rest
    are combined by a bounded subset-sum over normalized costs, keeping per
    index the largest true hazing (a larger prefix satisfies thresholds at
    least as well).  The answer tops up the best table entry with copies of
    the minimum-threshold small action.  When no action is eligible, one
    step of the cheapest negative-threshold action is exact and returned
    directly (tables None, like the trivial and infeasible paths).
    """
    eps = as_fraction(epsilon, "epsilon")
    if not 0 < eps <= 1:
        raise ValueError(f"epsilon must lie in (0, 1], got {eps}")
    delta = inst.delta
    if delta < 0:
        return _solved_from_steps(inst, ()), None
    n = inst.n
    order = inst.threshold_order
    acts = [inst.alphabet[j] for j in order]
    if n == 0 or acts[0][1] >= 0:
        return _infeasible(), None

    eligible = [i for i, (h, t) in enumerate(acts) if t < 0 and h <= delta]
    if not eligible:
        # every negative-threshold action alone overshoots delta; the
        # cheapest one is the exact optimum
        i0 = min(
            (i for i, (h, t) in enumerate(acts) if t < 0),
            key=lambda i: acts[i][0],
        )
        return _solved_from_steps(inst, (order[i0],)), None

    h_star = acts[eligible[0]][0]
    upper = (delta // h_star + 1) * h_star
    num, den = eps.numerator, eps.denominator
    table_bound = (9 * den * den) // (num * num)
    normalizer = Fraction(upper * num * num, 9 * den * den)
    small_cut_num = num * upper  # h is small iff 3*h*den <= num*upper

    norm_costs: list[Optional[int]] = [None] * n
    small_pos = []
    fill_pos = []
    for i, (h, t) in enumerate(acts):
        if 3 * h * den <= small_cut_num:
            small_pos.append(i)
        else:
            # floor(h / normalizer); at least 3 for non-small actions
            norm_costs[i] = (9 * h * den * den) // (upper * num * num)
            fill_pos.append(i)

    best_hazing: dict[int, int] = {0: 0}
    witnesses: dict[int, tuple[int, ...]] = {0: ()}
    keys = [0]
    for i in fill_pos:
        h, t = acts[i]
        f = norm_costs[i]
        j_alpha = order[i]
        idx = 0
        while idx < len(keys):
            k = keys[idx]
            idx += 1
            k2 = k + f
            if k2 > table_bound:
                break  # keys ascend, so every later k overflows too
            cur = best_hazing[k]
            if cur <= t:
                continue  # appending here would violate action i's threshold
            cand = cur + h
            old = best_hazing.get(k2)
            if old is None:
                best_hazing[k2] = cand
                witnesses[k2] = witnesses[k] + (j_alpha,)
                bisect.insort(keys, k2)  # lands past idx, visited this pass
            elif cand > old:
                best_hazing[k2] = cand
                witnesses[k2] = witnesses[k] + (j_alpha,)

    if small_pos:
        top_pos = small_pos[0]  # minimum threshold: positions ascend by t
        h_s, t_s = acts[top_pos]
        top_alpha = order[top_pos]
        choice = None
        for k in keys:
            v = best_hazing[k]
            if v > t_s:
                gap = delta + 1 - v
                reps = 0 if gap <= 0 else -(-gap // h_s)
                val = v + reps * h_s
                if choice is None or val < choice[0]:
                    choice = (val, k, reps)
        assert choice is not None, "no table entry clears the top-up threshold"
        steps = witnesses[choice[1]] + (top_alpha,) * choice[2]
    else:
        top_alpha = None
        choice = None
        for k in keys:
            v = best_hazing[k]
            if v > delta:
                if choice is None or v < choice[0]:
                    choice = (v, k)
        assert choice is not None, "no table entry exceeds delta"
        steps = witnesses[choice[1]]

    tables = FptasTables(
        upper_bound=upper,
        normalizer=normalizer,
        table_bound=table_bound,
        normalized_costs=tuple(
            norm_costs[pos] for pos in _alphabet_positions(order, n)
        ),
        best_hazing=best_hazing,
        witnesses=witnesses,
        small_actions=tuple(sorted(order[i] for i in small_pos)),
        small_action=top_alpha,
    )
    return _solved_from_steps(inst, steps), tables


def _alphabet_positions(order: tuple[int, ...], n: int) -> list[int]:
    """Invert a threshold order: result[alphabet index] = threshold position."""
    inv = [0] * n
    for pos, j in enumerate(order):
        inv[j] = pos
    return inv


def solve_brute(inst: HazingInstance, max_states: int = 1_000_000) -> SolveResult:
    """Exhaustive reference solver.

    Depth-first search over accumulated-hazing states: from each total at
    most delta, every action whose threshold is exceeded extends the plan;
    totals past delta are candidate answers.  States are visited once (the
    reachable totals, not the plans, determine the optimum).  Raises
    InstanceTooLargeError past max_states visited states.
    """
    delta = inst.delta
    if delta < 0:
        return _solved_from_steps(inst, ())
    alphabet = inst.alphabet
    seen = bytearray(delta + 1)
    seen[0] = 1
    parent: dict[int, tuple[int, int]] = {}
    visited = 1
    best: Optional[tuple[int, int, int]] = None  # (total, base state, action)
    stack = [0]
    while stack:
        s = stack.pop()
        for j, (h, t) in enumerate(alphabet):
            if s > t:
                s2 = s + h
                if s2 > delta:
                    if best is None or s2 < best[0]:
                        best = (s2, s, j)
                elif not seen[s2]:
                    seen[s2] = 1
                    parent[s2] = (s, j)
                    visited += 1
                    if visited > max_states:
                        raise InstanceTooLargeError(
                            f"more than {max_states} states explored"
                        )
                    stack.append(s2)
    if best is None:
        return _infeasible()
    steps = [best[2]]
    s = best[1]
    while s:
        s, j = parent[s]
        steps.append(j)
    steps.reverse()
    return _solved_from_steps(inst, tuple(steps))
