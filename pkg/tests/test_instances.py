import pytest

from mmfvs.graph import Graph
from mmfvs.instances import InstanceFormatError, generate, parse_instance, write_instance

from helpers import apex_pair, cycle, disjoint_triangles


class TestParse:
    def test_basic(self):
        g = parse_instance("p mmfvs 3 2\ne 1 2\ne 2 3\n")
        assert g.vertices == {0, 1, 2}
        assert sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_comments_and_blank_lines(self):
        g = parse_instance("c a comment\n\np mmfvs 2 1\nc another\ne 1 2\n")
        assert g.edge_count() == 1

    def test_self_loop(self):
        with pytest.raises(InstanceFormatError, match="line 2: self-loop"):
            parse_instance("p mmfvs 3 1\ne 3 3\n")

    def test_duplicate_edge(self):
        with pytest.raises(InstanceFormatError, match="line 3: duplicate edge"):
            parse_instance("p mmfvs 3 2\ne 1 2\ne 2 1\n")

    def test_out_of_range(self):
        with pytest.raises(InstanceFormatError, match="line 2: endpoint out of range"):
            parse_instance("p mmfvs 3 1\ne 1 4\n")

    def test_bad_header(self):
        with pytest.raises(InstanceFormatError, match="header"):
            parse_instance("p mmfvs 3\ne 1 2\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(InstanceFormatError, match="announced 2 edges"):
            parse_instance("p mmfvs 3 2\ne 1 2\n")

    def test_missing_header(self):
        with pytest.raises(InstanceFormatError, match="missing header"):
            parse_instance("c nothing here\n")


class TestRoundTrip:
    def test_parse_write_identity(self):
        for g in (apex_pair(6), cycle(5), disjoint_triangles(2), Graph(range(4))):
            assert parse_instance(write_instance(g)) == g

    def test_isolated_vertices_survive(self):
        g = Graph(range(5), [(0, 1)])
        assert parse_instance(write_instance(g)).vertices == g.vertices


class TestGenerate:
    def test_apex_pair_matches_reference_shape(self):
        g = generate("apexpair", {"n": 6})
        assert g == apex_pair(6)
        assert g.degree(0) == 5 and g.degree(1) == 5
        assert g.induced({2, 3, 4, 5}).edge_count() == 0

    def test_cycle_and_complete(self):
        assert generate("cycle", {"n": 5}) == cycle(5)
        assert generate("complete", {"n": 4}).edge_count() == 6

    def test_disjoint_cycles(self):
        assert generate("disjoint-cycles", {"sizes": "3,3"}) == disjoint_triangles(2)

    def test_gnp_determinism(self):
        a = generate("gnp", {"n": 10, "p": 0.3}, seed=7)
        b = generate("gnp", {"n": 10, "p": 0.3}, seed=7)
        assert a == b
        c = generate("gnp", {"n": 10, "p": 0.3}, seed=8)
        assert a != c  # overwhelmingly likely for these parameters

    def test_reduction_output_shape(self):
        g = generate("reduction-output", {"n": 4, "p": 0.5}, seed=3)
        assert len(g) == 2 * 4 + 5

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="unknown family"):
            generate("mystery", {"n": 3})
