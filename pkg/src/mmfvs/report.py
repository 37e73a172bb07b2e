"""Result containers shared by the solvers."""

from __future__ import annotations

from dataclasses import dataclass, field

from mmfvs.verify import Certificate


@dataclass(frozen=True)
class Solution:
    """A verified minimal feedback vertex set with its private-cycle witnesses."""

    vertices: frozenset[int]
    certificate: Certificate

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass
class SolveReport:
    """Outcome plus search statistics for one solver run.

    `outcome` is "yes" or "no"; a "yes" always carries a re-verified
    Solution.  `reductions_fired` counts rule applications by rule name and
    `extras` holds solver-specific audit counters.
    """

    outcome: str
    solution: Solution | None
    nodes_explored: int
    reductions_fired: dict[str, int]
    max_depth: int
    wall_time: float
    extras: dict[str, object] = field(default_factory=dict)

    @property
    def is_yes(self) -> bool:
        return self.outcome == "yes"
