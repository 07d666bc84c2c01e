"""Game and sequence data model for restart-equilibrium hazing analysis.

A symmetric repeated game is reduced to a "hazing" view: once a pair of
players is committed to reaching the best cooperative payoff (the goal
value), every earlier step of their plan is summarized by how much payoff
it sacrifices (hazing cost h) and how tempting deviating at that point is
(threshold t).  A plan is stable in the patient limit exactly when the
hazing already served strictly exceeds the threshold at every step and the
total strictly exceeds the final threshold delta.

This module holds the data types, the payoff-to-hazing transform, exact
discounted-utility evaluation, both stability checkers (finite discount
factor and the patient limit), canonicalization into threshold-monotonic
form, and the total-hazing comparison that orders equivalence classes.

All finite-discount arithmetic is done with fractions.Fraction so stability
verdicts never depend on floating-point tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

RationalLike = Union[int, str, float, Fraction]


class UnstableSequenceError(ValueError):
    """Raised when an operation requires a limit-stable input sequence."""


class InstanceTooLargeError(RuntimeError):
    """Raised by exhaustive helpers when an input exceeds their size guard."""


def as_fraction(value: RationalLike, name: str = "value") -> Fraction:
    """Coerce ints, Fractions, "num/den" strings, and decimal floats exactly.

    Floats go through their shortest decimal repr, so 0.9 means 9/10 rather
    than the nearest binary double.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(repr(value))
    if isinstance(value, str):
        return Fraction(value)
    raise ValueError(f"{name} is not a rational: {value!r}")


def _as_payoff_pair(pair: Sequence[RationalLike]) -> tuple[Fraction, Fraction]:
    p, p_star = pair
    return (as_fraction(p, "p"), as_fraction(p_star, "p_star"))


@dataclass(frozen=True)
class SymmetricGame:
    """Per-action payoff table of a symmetric repeated game.

    Each action pairs a cooperative payoff p (both partners play it) with a
    deviation payoff p_star (the best one-shot gain against a partner who
    plays it), plus the common discount factor beta in [0, 1).

    Payoffs are stored as exact fractions; non-integer payoffs are accepted
    for discounted-utility work, but the hazing transform requires integers.
    """

    actions: tuple[tuple[Fraction, Fraction], ...]
    beta: Fraction

    def __init__(self, actions: Sequence[Sequence[RationalLike]], beta: RationalLike):
        if not actions:
            raise ValueError("a game needs at least one action")
        b = as_fraction(beta, "beta")
        if not 0 <= b < 1:
            raise ValueError(f"beta must lie in [0, 1), got {b}")
        object.__setattr__(self, "actions", tuple(_as_payoff_pair(a) for a in actions))
        object.__setattr__(self, "beta", b)

    @property
    def n(self) -> int:
        return len(self.actions)


@dataclass(frozen=True)
class GoalMeta:
    """Provenance of a HazingInstance derived from a SymmetricGame."""

    goal_payoff: int               # the payoff repeated forever once hazing ends
    goal_action_index: Optional[int]
    goal_deviation_payoff: int     # deviation payoff of the goal action


@dataclass(frozen=True)
class HazingInstance:
    """Hazing alphabet plus final threshold delta.

    Alphabet entries are (h, t) pairs: h >= 1 is the per-step hazing cost and
    t is the step threshold the previously served hazing must strictly
    exceed.  Entries with t > delta are rejected: such actions cannot be used
    before the final threshold is already met, so they are pre-filtered by
    the transform and the solvers rely on that.
    """

    alphabet: tuple[tuple[int, int], ...]
    delta: int
    goal_meta: Optional[GoalMeta] = None
    h_max: int = field(init=False, compare=False)
    threshold_order: tuple[int, ...] = field(init=False, compare=False)

    def __post_init__(self) -> None:
        delta = self.delta
        h_max = 0
        for h, t in self.alphabet:
            if h < 1:
                raise ValueError(f"hazing cost must be a positive integer, got {h}")
            if t > delta:
                raise ValueError(f"threshold {t} exceeds delta {delta}; pre-filter it")
            if h > h_max:
                h_max = h
        object.__setattr__(self, "alphabet", tuple(tuple(a) for a in self.alphabet))
        object.__setattr__(self, "h_max", h_max)
        order = sorted(range(len(self.alphabet)), key=lambda j: (self.alphabet[j][1], j))
        object.__setattr__(self, "threshold_order", tuple(order))

    @property
    def n(self) -> int:
        return len(self.alphabet)


@dataclass(frozen=True)
class PayoffSequence:
    """Eventually periodic payoff plan: a finite prefix then a repeating cycle.

    Index i resolves to prefix[i] for i < len(prefix) and cycles afterwards.
    A goal-value plan is exactly the case of a length-1 cycle.
    """

    prefix: tuple[tuple[Fraction, Fraction], ...]
    cycle: tuple[tuple[Fraction, Fraction], ...]

    def __init__(
        self,
        prefix: Sequence[Sequence[RationalLike]],
        cycle: Sequence[Sequence[RationalLike]],
    ):
        if not cycle:
            raise ValueError("cycle must be nonempty")
        object.__setattr__(self, "prefix", tuple(_as_payoff_pair(a) for a in prefix))
        object.__setattr__(self, "cycle", tuple(_as_payoff_pair(a) for a in cycle))

    def payoff_at(self, i: int) -> tuple[Fraction, Fraction]:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def scaled(self, c: int) -> "PayoffSequence":
        """Scale every payoff by the integer c (utility scales by exactly c)."""
        return PayoffSequence(
            tuple((p * c, ps * c) for p, ps in self.prefix),
            tuple((p * c, ps * c) for p, ps in self.cycle),
        )


@dataclass(frozen=True)
class HazingSequence:
    """A finite plan over a hazing alphabet, stored as alphabet indices."""

    steps: tuple[int, ...]

    def __init__(self, steps: Sequence[int]):
        object.__setattr__(self, "steps", tuple(steps))

    def total_hazing(self, inst: HazingInstance) -> int:
        alphabet = inst.alphabet
        return sum(alphabet[j][0] for j in self.steps)


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of a stability check.

    first_violation is the earliest failing step index (or, for a
    final-threshold failure in the limit check, one past the last step);
    detail carries the two sides of the violated inequality.
    """

    stable: bool
    first_violation: Optional[int] = None
    detail: Optional[tuple] = None


def to_hazing_instance(game: SymmetricGame) -> HazingInstance:
    """Reduce a payoff game to its hazing view.

    The goal value is the maximum cooperative payoff; among actions achieving
    it, the one with the smallest deviation payoff is the goal action (this
    minimizes delta and so weakly enlarges the feasible set).  Every other
    action with a positive hazing cost and a threshold at most delta enters
    the alphabet in input order; zero-cost non-goal actions are dropped
    because a free step never helps any prefix constraint.

    Requires integer payoffs: the hazing side is integer-only.
    """
    for p, p_star in game.actions:
        if p.denominator != 1 or p_star.denominator != 1:
            raise ValueError(
                "hazing reduction needs integer payoffs; scale the game first"
            )
    payoffs = [(int(p), int(ps)) for p, ps in game.actions]
    p_omega = max(p for p, _ in payoffs)
    goal_index = min(
        (j for j, (p, _) in enumerate(payoffs) if p == p_omega),
        key=lambda j: payoffs[j][1],
    )
    p_star_omega = payoffs[goal_index][1]
    delta = p_star_omega - p_omega
    alphabet = []
    for p, p_star in payoffs:
        h = p_omega - p
        t = p_star - p_omega
        if h >= 1 and t <= delta:
            alphabet.append((h, t))
    return HazingInstance(
        tuple(alphabet),
        delta,
        GoalMeta(p_omega, goal_index, p_star_omega),
    )


def to_payoff_sequence(inst: HazingInstance, seq: HazingSequence) -> PayoffSequence:
    """Expand a hazing plan back into payoffs: the hazing prefix followed by
    the goal value forever.  Requires goal_meta (present when the instance
    came from a payoff game, or supplied explicitly for synthetic instances).
    """
    meta = inst.goal_meta
    if meta is None:
        raise ValueError("instance has no goal payoff information")
    p_omega = meta.goal_payoff
    prefix = []
    for j in seq.steps:
        h, t = inst.alphabet[j]
        prefix.append((p_omega - h, p_omega + t))
    return PayoffSequence(tuple(prefix), ((p_omega, meta.goal_deviation_payoff),))


def discounted_utility(seq: PayoffSequence, beta: RationalLike) -> Fraction:
    """Total discounted utility of a plan, evaluated in closed form.

    The prefix is summed term by term; the cycle contributes
    beta^z * (sum_{i<L} beta^i c_i) / (1 - beta^L).  Exact for rational beta.
    """
    b = as_fraction(beta, "beta")
    if not 0 <= b < 1:
        raise ValueError(f"beta must lie in [0, 1), got {b}")
    total = Fraction(0)
    power = Fraction(1)
    for p, _ in seq.prefix:
        total += power * p
        power *= b
    cycle_sum = Fraction(0)
    cycle_power = Fraction(1)
    for c, _ in seq.cycle:
        cycle_sum += cycle_power * c
        cycle_power *= b
    # power is now beta^z; cycle_power is beta^L
    return total + power * cycle_sum / (1 - cycle_power)


def check_stability_beta(seq: PayoffSequence, beta: RationalLike) -> StabilityReport:
    """Check one-shot-deviation stability at a finite discount factor.

    Deviating at step k is unprofitable when the payoffs collected before k
    plus the discounted deviation payoff do not exceed (1 - beta^(k+1)) times
    the plan's utility (deviation triggers a restart with a fresh partner).
    Only k = 0 .. z+L-1 need checking: past the prefix, both the deviation
    payoff and the continuation value repeat with the cycle, so every later
    step duplicates one of the checked ones.  Ties count as stable here; the
    patient-limit check breaks them the other way.
    """
    b = as_fraction(beta, "beta")
    if not 0 <= b < 1:
        raise ValueError(f"beta must lie in [0, 1), got {b}")
    utility = discounted_utility(seq, b)
    collected = Fraction(0)
    power = Fraction(1)  # beta^k
    for k in range(len(seq.prefix) + len(seq.cycle)):
        p_k, p_star_k = seq.payoff_at(k)
        lhs = collected + power * p_star_k
        rhs = (1 - power * b) * utility
        if lhs > rhs:
            return StabilityReport(False, k, (lhs, rhs))
        collected += power * p_k
        power *= b
    return StabilityReport(True)


def check_stability_limit(inst: HazingInstance, seq: HazingSequence) -> StabilityReport:
    """Check patient-limit stability of a hazing plan.

    Stable iff at every step the hazing already served strictly exceeds that
    step's threshold, and the total strictly exceeds delta.  A final-threshold
    failure is reported at index len(steps).
    """
    alphabet = inst.alphabet
    n = len(alphabet)
    served = 0
    for k, j in enumerate(seq.steps):
        if not 0 <= j < n:
            raise ValueError(f"step {k} refers to missing alphabet entry {j}")
        h, t = alphabet[j]
        if served <= t:
            return StabilityReport(False, k, (served, t))
        served += h
    if served <= inst.delta:
        return StabilityReport(False, len(seq.steps), (served, inst.delta))
    return StabilityReport(True)


def canonicalize(inst: HazingInstance, seq: HazingSequence) -> HazingSequence:
    """Rewrite a stable plan in threshold-monotonic form.

    Occurrences of each action are grouped at its first appearance, then the
    blocks are ordered by nondecreasing threshold (stable, so equal-threshold
    blocks keep their first-appearance order).  The multiset of actions, and
    hence the total hazing and the equivalence class, is unchanged, and the
    result is again stable.
    """
    report = check_stability_limit(inst, seq)
    if not report.stable:
        raise UnstableSequenceError(
            f"cannot canonicalize an unstable sequence "
            f"(violation at step {report.first_violation})"
        )
    counts: dict[int, int] = {}
    for j in seq.steps:
        counts[j] = counts.get(j, 0) + 1
    blocks = sorted(counts, key=lambda j: inst.alphabet[j][1])
    return HazingSequence(tuple(j for j in blocks for _ in range(counts[j])))


def limit_compare(inst: HazingInstance, seq_a: HazingSequence, seq_b: HazingSequence) -> int:
    """Order two stable plans by patient-limit preference.

    Returns a negative number if seq_a is strictly better (lower total
    hazing), positive if worse, and 0 when the totals tie, in which case the
    plans are limit-utility equivalent.
    """
    ta = seq_a.total_hazing(inst)
    tb = seq_b.total_hazing(inst)
    return (ta > tb) - (ta < tb)
