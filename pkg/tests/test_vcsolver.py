from mmfvs.graph import Graph
from mmfvs.oracle import opt_mmfvs_brute
from mmfvs.verify import is_minimal_fvs, min_vertex_cover
from mmfvs.vcsolver import (
    cross_edge_choices,
    find_connectors,
    labeled_trees,
    set_partitions,
    solve_vc,
)

from helpers import apex_pair, cycle, disjoint_triangles, gnp, path


class TestEnumerators:
    def test_set_partition_counts_are_bell_numbers(self):
        for n, bell in [(0, 1), (1, 1), (2, 2), (3, 5), (4, 15), (5, 52)]:
            assert sum(1 for _ in set_partitions(list(range(n)))) == bell

    def test_partitions_are_canonical_and_distinct(self):
        seen = set()
        for blocks in set_partitions([4, 7, 9]):
            key = tuple(tuple(b) for b in blocks)
            assert key not in seen
            seen.add(key)
            assert [b[0] for b in blocks] == sorted(b[0] for b in blocks)

    def test_labeled_tree_counts_follow_cayley(self):
        for n in (1, 2, 3, 4, 5):
            count = sum(1 for _ in labeled_trees(n))
            assert count == max(1, n ** (n - 2))

    def test_cross_edge_choices_count(self):
        # labeled trees times one orientation bit per tree edge
        for n in (1, 2, 3, 4):
            count = sum(1 for _ in cross_edge_choices(n))
            assert count == max(1, n ** (n - 2)) * (1 << max(0, n - 1))


class TestFindConnectors:
    def test_single_tree_forces_everything(self):
        # committed-out path 0-1-2; independent 3 and 4 each see two of its
        # vertices, so the cycle rule forces both and no connector is needed
        g = Graph(range(5), [(0, 1), (1, 2), (0, 3), (1, 3), (1, 4), (2, 4)])
        res = find_connectors(g, frozenset(), frozenset({0, 1, 2}))
        assert res is not None
        assert res.connectors == frozenset()
        assert res.forced == {3, 4}
        assert res.solution == {3, 4}

    def test_unique_connector_between_two_components(self):
        # committed-out edges (0,1) and (2,3); vertex 4 touches one vertex
        # of each and is the only way to glue them into a single tree, in
        # which vertex 5 then closes its private cycle
        g = Graph(
            range(6),
            [(0, 1), (2, 3), (0, 4), (2, 4), (1, 5), (3, 5)],
        )
        res = find_connectors(g, frozenset(), frozenset({0, 1, 2, 3}))
        assert res is not None
        assert res.connectors == {4}
        assert res.solution == {5}
        assert res.trees == 1

    def test_wrong_guess_returns_none(self):
        # committed-out side contains a cycle
        assert find_connectors(cycle(3), frozenset(), frozenset({0, 1, 2})) is None


class TestSolveVc:
    def test_apex_pair(self):
        sol, report = solve_vc(apex_pair(6))
        assert len(sol.vertices) == 4
        assert report.extras["cover_size"] == 2

    def test_c5(self):
        sol, _ = solve_vc(cycle(5))
        assert len(sol.vertices) == 1

    def test_forest(self):
        sol, _ = solve_vc(path(6))
        assert sol.vertices == frozenset()

    def test_two_triangles(self):
        sol, _ = solve_vc(disjoint_triangles(2))
        assert len(sol.vertices) == 2

    def test_matches_oracle_on_random_graphs(self):
        for seed in range(25):
            g = gnp(7, 0.4, seed=seed)
            sol, report = solve_vc(g)
            assert is_minimal_fvs(g, sol.vertices) is not None
            expected = opt_mmfvs_brute(g).opt_value
            assert len(sol.vertices) == expected, (seed, report.extras)

    def test_matches_oracle_on_denser_graphs(self):
        for seed in range(12):
            g = gnp(8, 0.55, seed=100 + seed)
            sol, _ = solve_vc(g)
            assert len(sol.vertices) == opt_mmfvs_brute(g).opt_value

    def test_guess_budget_follows_cover_bound(self):
        for seed in range(10):
            g = gnp(8, 0.4, seed=300 + seed)
            _, report = solve_vc(g)
            vc = report.extras["cover_size"]
            if vc >= 2:
                bound = vc**vc * vc ** len(g.vertices) * vc ** (2 * vc)
                assert report.extras["structure_guesses"] <= bound

    def test_verify_safety_net_is_quiet(self):
        for seed in range(15):
            g = gnp(7, 0.35, seed=600 + seed)
            _, report = solve_vc(g)
            assert report.extras["guess_rejected_at_verify"] == 0
            assert report.extras["forest_check_failures"] == 0

    def test_winning_guess_is_reported(self):
        _, report = solve_vc(apex_pair(6))
        guess = report.extras["winning_guess"]
        assert guess is not None
        assert guess.cover_in | guess.cover_out <= {0, 1}
