"""Exact solver parameterized by the vertex cover number.

Every minimal fvs S meets a minimum vertex cover C in S ∩ C, so the cover
side is guessed outright (2^vc guesses).  For one guess, the final forest
outside the solution consists of the committed-out cover vertices plus a
set Z of independent "connector" vertices gluing their components into
trees; every other surviving independent vertex closes a cycle with that
forest and must join the solution.  The search for Z guesses how the
components group into trees (a partition), how each group is assembled
from blocks joined by one connector each, and which cross edges hook the
blocks together; candidates for each connector are pinned down by exact
adjacency counts.  Guesses are enumerated with fewer connectors first, so
the first assignment that verifies is the largest solution the cover guess
can give.  Nothing is trusted from the search state: a candidate solution
is kept only after full minimality verification on the input graph.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence

from mmfvs.graph import Graph, is_acyclic_without
from mmfvs.report import Solution, SolveReport
from mmfvs.verify import (
    Certificate,
    is_minimal_fvs,
    members_have_private_cycles,
    min_vertex_cover,
    partial_minimality_ok,
)


@dataclass(frozen=True)
class GuessState:
    """A fully resolved inner guess: how one cover-side guess builds its forest."""

    cover_in: frozenset[int]
    cover_out: frozenset[int]
    comp_partition: tuple[tuple[frozenset[int], ...], ...]
    sub_partitions: tuple[tuple[tuple[frozenset[int], ...], ...], ...]
    cross_edges: tuple[tuple[tuple[int, int], ...], ...]
    connectors: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ConnectorResult:
    """Outcome of a successful connector search for one cover-side guess."""

    connectors: frozenset[int]
    forced: frozenset[int]
    removed: frozenset[int]
    solution: frozenset[int]
    certificate: Certificate
    trees: int
    guess: GuessState


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """All partitions of `items` via restricted-growth strings.

    Blocks come out ordered by first element, so enumeration order is
    canonical and deterministic.
    """
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n
    while True:
        blocks: dict[int, list[int]] = {}
        for idx, label in enumerate(rgs):
            blocks.setdefault(label, []).append(items[idx])
        yield [blocks[label] for label in sorted(blocks)]
        # advance the restricted-growth string
        i = n - 1
        while i > 0:
            if rgs[i] <= max(rgs[:i]):
                rgs[i] += 1
                for j in range(i + 1, n):
                    rgs[j] = 0
                break
            i -= 1
        else:
            return


def labeled_trees(size: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """All labeled trees on `size` nodes (edge lists), by Pruefer decoding."""
    if size == 1:
        yield ()
        return
    if size == 2:
        yield ((0, 1),)
        return
    for seq in product(range(size), repeat=size - 2):
        degree = [1] * size
        for x in seq:
            degree[x] += 1
        edges: list[tuple[int, int]] = []
        work = list(degree)
        for x in seq:
            leaf = min(v for v in range(size) if work[v] == 1)
            edges.append((leaf, x))
            work[leaf] -= 1
            work[x] -= 1
        last = [v for v in range(size) if work[v] == 1]
        edges.append((last[0], last[1]))
        yield tuple(edges)


def cross_edge_choices(size: int) -> Iterator[tuple[frozenset[int], ...]]:
    """Per-block target sets for every oriented spanning tree over blocks.

    A cross edge (connector of block a -> some vertex of block b) is one
    orientation of a tree edge {a, b}; size - 1 such edges joining all
    blocks are exactly the oriented labeled trees.
    """
    if size == 1:
        yield (frozenset(),)
        return
    for tree in labeled_trees(size):
        for mask in range(1 << (size - 1)):
            targets: list[set[int]] = [set() for _ in range(size)]
            for bit, (a, b) in enumerate(tree):
                src, dst = (a, b) if not mask >> bit & 1 else (b, a)
                targets[src].add(dst)
            yield tuple(frozenset(t) for t in targets)


def _oriented_tree_edges(targets: Sequence[frozenset[int]]) -> tuple[tuple[int, int], ...]:
    return tuple(
        (src, dst) for src in range(len(targets)) for dst in sorted(targets[src])
    )


class _CoverGuess:
    """Connector search state for one committed cover-side guess."""

    def __init__(
        self,
        g: Graph,
        pristine: Graph,
        cover_in: frozenset[int],
        cover_out: frozenset[int],
        indep: frozenset[int],
        counters: dict[str, int],
    ):
        self.g = g
        self.pristine = pristine
        self.cover_in = cover_in
        self.cover_out = cover_out
        self.indep = indep
        self.counters = counters
        self.removed: set[int] = set()
        self.forced: set[int] = set()

    # -- in-guess reductions ------------------------------------------------

    def _live_neighbors(self, v: int) -> set[int]:
        return set(self.g.neighbors(v)) - self.cover_in - self.removed - self.forced

    def _out_components(self) -> list[frozenset[int]]:
        live_out = self.cover_out - self.removed
        seen: set[int] = set()
        comps: list[frozenset[int]] = []
        for start in sorted(live_out):
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self._live_neighbors(x) & live_out:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(frozenset(comp))
        return comps

    def reduce(self) -> None:
        """Degree and cycle rules to joint fixpoint.

        Vertices of degree <= 1 outside the committed cover side are
        deleted (outside any solution); independent vertices closing a
        cycle with one committed-out component are forced inside.
        """
        while True:
            changed = False
            # degree rule over the graph minus cover_in
            while True:
                victims = [
                    v
                    for v in sorted((self.cover_out | self.indep) - self.removed - self.forced)
                    if len(self._live_neighbors(v)) <= 1
                ]
                if not victims:
                    break
                self.removed.update(victims)
                self.counters["reduction_degree"] = (
                    self.counters.get("reduction_degree", 0) + len(victims)
                )
                changed = True
            # cycle rule: two live neighbors in one committed-out component
            comp_of: dict[int, int] = {}
            for i, comp in enumerate(self._out_components()):
                for v in comp:
                    comp_of[v] = i
            closers: list[int] = []
            for u in sorted(self.indep - self.removed - self.forced):
                touched: set[int] = set()
                for w in self._live_neighbors(u):
                    i = comp_of.get(w)
                    if i is None:
                        continue
                    if i in touched:
                        closers.append(u)
                        break
                    touched.add(i)
            if closers:
                self.forced.update(closers)
                self.counters["reduction_force"] = (
                    self.counters.get("reduction_force", 0) + len(closers)
                )
                changed = True
            if not changed:
                return

    # -- connector structure search ------------------------------------------

    def _candidates(
        self,
        blocks: Sequence[tuple[frozenset[int], ...]],
        block_unions: Sequence[frozenset[int]],
        part_union: frozenset[int],
        block_idx: int,
        targets: frozenset[int] | None,
    ) -> list[int]:
        """Connector candidates for one block.

        A candidate is adjacent to exactly one vertex of every component of
        its block, has no committed-out neighbor outside its part, and,
        when `targets` is given, exactly one neighbor in each target block
        and none in the other blocks.
        """
        live_out = self.cover_out - self.removed
        found: list[int] = []
        for x in sorted(self.indep - self.removed - self.forced):
            nb = self._live_neighbors(x) & live_out
            if not nb <= part_union:
                continue
            if any(len(nb & comp) != 1 for comp in blocks[block_idx]):
                continue
            if targets is not None:
                ok = True
                for other in range(len(blocks)):
                    if other == block_idx:
                        continue
                    hits = len(nb & block_unions[other])
                    if hits != (1 if other in targets else 0):
                        ok = False
                        break
                if not ok:
                    continue
            found.append(x)
        return found

    def _part_structures(
        self, part_comps: tuple[frozenset[int], ...], connectors: int
    ) -> Iterator[tuple[tuple, tuple, list[list[int]]]]:
        """(blocks, targets, per-block candidates) choices for one part."""
        part_union = frozenset().union(*part_comps)
        if connectors == 0:
            if len(part_comps) == 1:
                yield ((), (), [])
            return
        for raw in set_partitions(range(len(part_comps))):
            if len(raw) != connectors:
                continue
            blocks = tuple(
                tuple(part_comps[i] for i in block) for block in raw
            )
            block_unions = [frozenset().union(*b) for b in blocks]
            base = [
                self._candidates(blocks, block_unions, part_union, b, None)
                for b in range(len(blocks))
            ]
            if any(not c for c in base):
                continue
            for targets in cross_edge_choices(len(blocks)):
                self.counters["structure_guesses"] = (
                    self.counters.get("structure_guesses", 0) + 1
                )
                cands = [
                    self._candidates(blocks, block_unions, part_union, b, targets[b])
                    for b in range(len(blocks))
                ]
                if any(not c for c in cands):
                    continue
                yield (blocks, targets, cands)

    def _assign(
        self, slots: list[list[int]], used: set[int], picked: list[int]
    ) -> Iterator[list[int]]:
        if len(picked) == len(slots):
            yield list(picked)
            return
        for x in slots[len(picked)]:
            if x in used:
                continue
            used.add(x)
            picked.append(x)
            yield from self._assign(slots, used, picked)
            picked.pop()
            used.discard(x)

    def _try_assignment(
        self, comps: list[frozenset[int]], partition: list[list[int]],
        plans: list[tuple], connectors: list[int]
    ) -> ConnectorResult | None:
        z = frozenset(connectors)
        live_out = self.cover_out - self.removed
        forest = live_out | z
        if not is_acyclic_without(self.g, self.g.vertices - forest):
            self.counters["forest_check_failures"] = (
                self.counters.get("forest_check_failures", 0) + 1
            )
            return None
        tree_sets = self.g.induced(forest).components()
        if len(tree_sets) != len(partition):
            self.counters["forest_check_failures"] = (
                self.counters.get("forest_check_failures", 0) + 1
            )
            return None
        trees = len(tree_sets)
        # every leftover independent vertex must close a cycle with one of
        # the final trees, or it cannot be a minimal member of the solution
        tree_of: dict[int, int] = {}
        for i, tree in enumerate(tree_sets):
            for v in tree:
                tree_of[v] = i
        for u in sorted(self.indep - self.removed - self.forced - z):
            touched: set[int] = set()
            private = False
            for w in self._live_neighbors(u) & forest:
                i = tree_of[w]
                if i in touched:
                    private = True
                    break
                touched.add(i)
            if not private:
                self.counters["assignments_rejected_structure"] = (
                    self.counters.get("assignments_rejected_structure", 0) + 1
                )
                return None
        solution = frozenset(
            self.cover_in
            | self.forced
            | (self.indep - self.removed - self.forced - z)
        )
        if not members_have_private_cycles(self.pristine, solution, self.cover_in):
            self.counters["assignments_rejected_partial"] = (
                self.counters.get("assignments_rejected_partial", 0) + 1
            )
            return None
        certificate = is_minimal_fvs(self.pristine, solution)
        if certificate is None:
            self.counters["guess_rejected_at_verify"] = (
                self.counters.get("guess_rejected_at_verify", 0) + 1
            )
            return None
        # reconstruct the per-part view for the report
        slot = 0
        sub_partitions = []
        cross_edges = []
        chosen = []
        for part_idx in range(len(partition)):
            blocks, targets, _ = plans[part_idx]
            sub_partitions.append(blocks)
            cross_edges.append(_oriented_tree_edges(targets) if targets else ())
            chosen.append(tuple(connectors[slot : slot + len(blocks)]))
            slot += len(blocks)
        guess = GuessState(
            cover_in=self.cover_in,
            cover_out=self.cover_out,
            comp_partition=tuple(tuple(comps[i] for i in part) for part in partition),
            sub_partitions=tuple(sub_partitions),
            cross_edges=tuple(cross_edges),
            connectors=tuple(chosen),
        )
        return ConnectorResult(
            connectors=z,
            forced=frozenset(self.forced),
            removed=frozenset(self.removed),
            solution=solution,
            certificate=certificate,
            trees=trees,
            guess=guess,
        )

    def search(self) -> ConnectorResult | None:
        self.reduce()
        comps = self._out_components()
        live_indep = self.indep - self.removed - self.forced
        if not live_indep:
            return self._try_assignment(comps, [[i] for i in range(len(comps))],
                                        [((), (), [])] * len(comps), [])
        if not comps:
            # surviving independent vertices but nothing to hook them to
            return None
        # Fewer connectors first: each one shrinks the solution by one, so
        # the first verified hit is this guess's maximum.  Zero connectors
        # cannot work here: a surviving independent vertex meets every
        # committed-out component at most once, so it would have no private
        # cycle in the unglued forest.
        for z_total in range(1, min(len(live_indep), len(comps)) + 1):
            for partition in set_partitions(range(len(comps))):
                self.counters["comp_partitions"] = (
                    self.counters.get("comp_partitions", 0) + 1
                )
                parts = [tuple(comps[i] for i in part) for part in partition]
                low = sum(0 if len(p) == 1 else 1 for p in parts)
                high = sum(len(p) for p in parts)
                if not low <= z_total <= high:
                    continue
                for split in self._connector_splits(parts, z_total):
                    result = self._combine(comps, partition, parts, split, 0, [], [])
                    if result is not None:
                        return result
        return None

    def _connector_splits(
        self, parts: list[tuple[frozenset[int], ...]], z_total: int
    ) -> Iterator[list[int]]:
        """Ways to spend z_total connectors across the parts."""

        def rec(idx: int, left: int, acc: list[int]) -> Iterator[list[int]]:
            if idx == len(parts):
                if left == 0:
                    yield list(acc)
                return
            size = len(parts[idx])
            lo = 0 if size == 1 else 1
            for s in range(lo, min(size, left) + 1):
                acc.append(s)
                yield from rec(idx + 1, left - s, acc)
                acc.pop()

        yield from rec(0, z_total, [])

    def _combine(
        self,
        comps: list[frozenset[int]],
        partition: list[list[int]],
        parts: list[tuple[frozenset[int], ...]],
        split: list[int],
        part_idx: int,
        plans: list[tuple],
        slots: list[list[int]],
    ) -> ConnectorResult | None:
        if part_idx == len(parts):
            for connectors in self._assign(slots, set(), []):
                self.counters["assignments_tried"] = (
                    self.counters.get("assignments_tried", 0) + 1
                )
                result = self._try_assignment(comps, partition, plans, connectors)
                if result is not None:
                    return result
            return None
        for plan in self._part_structures(parts[part_idx], split[part_idx]):
            plans.append(plan)
            slots.extend(plan[2])
            result = self._combine(comps, partition, parts, split, part_idx + 1, plans, slots)
            if result is not None:
                return result
            for _ in plan[2]:
                slots.pop()
            plans.pop()
        return None


def find_connectors(
    g: Graph,
    cover_in: frozenset[int],
    cover_out: frozenset[int],
    pristine: Graph | None = None,
    counters: dict[str, int] | None = None,
) -> ConnectorResult | None:
    """Search for connectors completing one cover-side guess.

    Returns the first (largest-solution) verified result, or None when the
    guess admits no minimal fvs of the required shape.
    """
    if not is_acyclic_without(g, g.vertices - cover_out):
        return None
    indep = g.vertices - cover_in - cover_out
    guess = _CoverGuess(
        g,
        pristine if pristine is not None else g,
        cover_in,
        cover_out,
        indep,
        counters if counters is not None else {},
    )
    return guess.search()


def solve_vc(g: Graph) -> tuple[Solution, SolveReport]:
    """A largest minimal fvs, by guessing its intersection with a cover."""
    start = time.perf_counter()
    counters: dict[str, int] = {}
    # vertices of degree <= 1 sit on no cycle and join no minimal fvs
    reduced = g
    while True:
        low = [v for v in reduced.sorted_vertices() if reduced.degree(v) <= 1]
        if not low:
            break
        counters["outer_degree_prune"] = counters.get("outer_degree_prune", 0) + len(low)
        reduced = reduced.delete(low)

    cover = min_vertex_cover(reduced)
    ordered = sorted(cover)
    best: Solution | None = None
    best_state: ConnectorResult | None = None
    cover_guesses = viable = 0
    for size in range(len(ordered) + 1):
        for picked in combinations(ordered, size):
            cover_guesses += 1
            cover_in = frozenset(picked)
            cover_out = cover - cover_in
            if not is_acyclic_without(reduced, reduced.vertices - cover_out):
                continue
            if cover_in and not partial_minimality_ok(g, cover_in):
                continue
            viable += 1
            result = find_connectors(reduced, cover_in, cover_out, pristine=g, counters=counters)
            if result is None:
                continue
            if best is None or len(result.solution) > len(best.vertices):
                best = Solution(result.solution, result.certificate)
                best_state = result
    assert best is not None, "the empty set always extends on a forest"
    report = SolveReport(
        outcome="yes",
        solution=best,
        nodes_explored=counters.get("assignments_tried", 0),
        reductions_fired={
            name: counters.get(name, 0)
            for name in ("outer_degree_prune", "reduction_degree", "reduction_force")
        },
        max_depth=0,
        wall_time=time.perf_counter() - start,
        extras={
            "cover_size": len(cover),
            "cover": tuple(ordered),
            "cover_guesses": cover_guesses,
            "viable_cover_guesses": viable,
            "comp_partitions": counters.get("comp_partitions", 0),
            "structure_guesses": counters.get("structure_guesses", 0),
            "assignments_tried": counters.get("assignments_tried", 0),
            "assignments_rejected_partial": counters.get("assignments_rejected_partial", 0),
            "guess_rejected_at_verify": counters.get("guess_rejected_at_verify", 0),
            "forest_check_failures": counters.get("forest_check_failures", 0),
            "winning_trees": best_state.trees if best_state else 0,
            "winning_guess": best_state.guess if best_state else None,
        },
    )
    return best, report
