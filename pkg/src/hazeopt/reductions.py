"""Unbounded subset-sum embeds into the hazing problem.

An unbounded subset-sum question (can item values, each usable any number of
times, total exactly A?) maps to a hazing instance whose alphabet prices
every item at its value with threshold -1 and whose final threshold is A-1.
With all thresholds negative, every multiset of actions is stable, so the
minimum total hazing is the smallest item combination strictly above A-1;
it equals A exactly when A itself is reachable.  A small reachability solver
validates the mapping end to end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .games import HazingInstance, InstanceTooLargeError


@dataclass(frozen=True)
class UsspInstance:
    """Unbounded subset-sum input: positive item values and a positive target."""

    items: tuple[int, ...]
    target: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "items", tuple(self.items))
        if not self.items:
            raise ValueError("items must be nonempty")
        for a in self.items:
            if not isinstance(a, int) or a < 1:
                raise ValueError(f"items must be positive integers, got {a!r}")
        if not isinstance(self.target, int) or self.target < 1:
            raise ValueError(f"target must be a positive integer, got {self.target!r}")


def ussp_to_optrep(u: UsspInstance) -> HazingInstance:
    """Map items to (value, -1) alphabet entries with final threshold target-1."""
    return HazingInstance(
        tuple((a, -1) for a in u.items),
        u.target - 1,
    )


def solve_ussp_brute(u: UsspInstance) -> bool:
    """Exact unbounded subset-sum via reachability up to the target.

    Guarded to targets at most 10^4; larger inputs raise
    InstanceTooLargeError.
    """
    if u.target > 10_000:
        raise InstanceTooLargeError(f"target {u.target} exceeds the 10^4 guard")
    reach = bytearray(u.target + 1)
    reach[0] = 1
    for s in range(1, u.target + 1):
        for a in u.items:
            if a <= s and reach[s - a]:
                reach[s] = 1
                break
    return bool(reach[u.target])
