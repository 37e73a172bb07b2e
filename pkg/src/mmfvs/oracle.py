"""Brute-force ground truth for small instances.

Deliberately simple definitional enumeration: subsets are tried by size
(descending for maximization, ascending for minimization) and
lexicographically within a size, so the first hit is both the optimum and
the lexicographically smallest witness of that size.  Everything else in
the package is tested against these routines.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from mmfvs.graph import Graph, is_acyclic_without
from mmfvs.verify import has_private_cycle, is_minimal_fvs

DEFAULT_CAP = 20


class OracleCapExceeded(Exception):
    """Raised when an instance is too large for exhaustive enumeration."""


@dataclass(frozen=True)
class OracleResult:
    opt_value: int
    witness: frozenset[int]
    enumerated: int


def _check_cap(g: Graph, cap: int) -> None:
    if len(g) > cap:
        raise OracleCapExceeded(f"|V| = {len(g)} exceeds the cap of {cap}")


def opt_mmfvs_brute(g: Graph, cap: int = DEFAULT_CAP) -> OracleResult:
    """Maximum size of a minimal feedback vertex set, by enumeration."""
    _check_cap(g, cap)
    vs = g.sorted_vertices()
    examined = 0
    for size in range(len(vs), -1, -1):
        for subset in combinations(vs, size):
            examined += 1
            s = frozenset(subset)
            if not is_acyclic_without(g, s):
                continue
            if all(has_private_cycle(g, v, s - {v}) for v in subset):
                return OracleResult(size, s, examined)
    raise AssertionError("the empty set is a minimal fvs of a forest")


def opt_mmvc_brute(g: Graph, cap: int = DEFAULT_CAP) -> OracleResult:
    """Maximum size of a minimal vertex cover, by enumeration."""
    _check_cap(g, cap)
    vs = g.sorted_vertices()
    edges = sorted(g.edges())

    def is_cover(s: frozenset[int]) -> bool:
        return all(u in s or v in s for u, v in edges)

    examined = 0
    for size in range(len(vs), -1, -1):
        for subset in combinations(vs, size):
            examined += 1
            s = frozenset(subset)
            if not is_cover(s):
                continue
            if all(not is_cover(s - {v}) for v in subset):
                return OracleResult(size, s, examined)
    raise AssertionError("the empty set is a minimal cover of an edgeless graph")


def fvs_min_brute(g: Graph, cap: int = DEFAULT_CAP) -> int:
    """Minimum feedback vertex set size, by enumeration."""
    _check_cap(g, cap)
    vs = g.sorted_vertices()
    for size in range(len(vs) + 1):
        for subset in combinations(vs, size):
            if is_acyclic_without(g, subset):
                return size
    raise AssertionError("removing all vertices always leaves a forest")


def extension_exists_brute(
    g: Graph,
    required: frozenset[int],
    forbidden: frozenset[int],
    k: int,
    cap: int = DEFAULT_CAP,
) -> frozenset[int] | None:
    """Largest-first search for a minimal fvs S with required <= S,
    S disjoint from forbidden and |S - required| >= k.  Returns a witness
    or None; the reference oracle for the extension solver.
    """
    _check_cap(g, cap)
    free = sorted(g.vertices - required - forbidden)
    for size in range(len(free), max(k, 0) - 1, -1):
        for subset in combinations(free, size):
            s = required | frozenset(subset)
            if is_minimal_fvs(g, s) is not None:
                return s
    return None
