from fractions import Fraction

import pytest

from planegraphs import (
    EnumerationLimitError,
    PlaneGraph,
    PointSet,
    containing_triangulation,
    convex_hull,
    count_plane_graphs,
    count_plane_graphs_bruteforce,
    enumerate_plane_graphs,
    enumerate_triangulations,
    expected_degree_vector,
    gen_cap_with_apex,
    gen_convex_chain,
    gen_triangular_hull_random,
    is_triangulation,
    total_edge_incidences,
)
from planegraphs.crossings import structures

from conftest import brute_degree_data, catalan, convex_count_recurrence, coords


def collect(ps):
    seen = []
    enumerate_plane_graphs(ps, lambda g: seen.append(g.edges))
    return seen


class TestEnumerate:
    def test_triangle_has_eight_graphs(self, triangle):
        seen = collect(triangle)
        assert len(seen) == 8
        assert seen[0] == 0  # the empty graph is visited
        assert len(set(seen)) == 8

    def test_single_point(self):
        ps = PointSet.from_coords([(0, 0)])
        assert enumerate_plane_graphs(ps, lambda g: None) == 1

    def test_convex4_has_48(self, convex4):
        assert len(collect(convex4)) == 48

    def test_lexicographic_order(self, triangle):
        # exclude-before-include on segment 0, then 1, then 2
        seen = collect(triangle)
        keys = [tuple(e >> k & 1 for k in range(3)) for e in seen]
        assert keys == sorted(keys)

    def test_deterministic(self, convex4):
        assert collect(convex4) == collect(convex4)

    def test_cap_refusal_mentions_estimate(self):
        ps = gen_convex_chain(6)
        with pytest.raises(EnumerationLimitError, match="11.65"):
            enumerate_plane_graphs(ps, lambda g: None, max_n=5)


class TestCount:
    def test_triangle(self, triangle):
        assert count_plane_graphs(triangle) == 8

    def test_convex5_equals_bruteforce(self):
        ps = gen_convex_chain(5)
        assert count_plane_graphs(ps) == count_plane_graphs_bruteforce(ps)

    def test_oracle_equivalence_small_sets(self, small_sets):
        for ps in small_sets:
            assert count_plane_graphs(ps) == count_plane_graphs_bruteforce(ps)

    def test_oracle_equivalence_21_segments(self):
        ps = gen_convex_chain(7)  # 21 segments
        assert count_plane_graphs(ps) == count_plane_graphs_bruteforce(ps)

    def test_convex_recurrence_oracle(self):
        oracle = convex_count_recurrence(9)
        for m in range(3, 10):
            assert count_plane_graphs(gen_convex_chain(m)) == oracle[m]

    def test_cap_apex_product(self):
        assert count_plane_graphs(gen_cap_with_apex(5)) == 16 * count_plane_graphs(
            gen_convex_chain(4)
        )

    def test_bruteforce_segment_limit(self):
        with pytest.raises(EnumerationLimitError):
            count_plane_graphs_bruteforce(gen_convex_chain(8))

    def test_workers_agree(self):
        ps = gen_triangular_hull_random(6, seed=1)
        single = count_plane_graphs(ps)
        assert count_plane_graphs(ps, workers=2) == single
        assert count_plane_graphs(ps, workers=2, prefix_bits=4) == single

    def test_monotone_in_interior_points(self):
        base = coords((0, 0), (12, 0), (0, 12), (3, 3))
        bigger = coords((0, 0), (12, 0), (0, 12), (3, 3), (5, 2))
        assert count_plane_graphs(bigger) > count_plane_graphs(base)


class TestDegreeVector:
    def test_triangle(self, triangle):
        dv = expected_degree_vector(triangle)
        assert dv.pg == 8
        assert dv.vhat == (Fraction(3, 4), Fraction(3, 2), Fraction(3, 4))

    def test_single_point(self):
        dv = expected_degree_vector(PointSet.from_coords([(0, 0)]))
        assert dv.pg == 1 and dv.vhat == (Fraction(1),)

    def test_sum_identities(self, small_sets):
        for ps in small_sets:
            dv = expected_degree_vector(ps)
            assert sum(dv.vhat) == ps.n
            assert sum(dv.ving_counts) == ps.n * dv.pg
            assert sum(i * v for i, v in enumerate(dv.ving_counts)) == 2 * total_edge_incidences(ps)

    def test_matches_bruteforce(self, small_sets):
        for ps in small_sets:
            dv = expected_degree_vector(ps)
            pg, ving = brute_degree_data(ps)
            assert dv.pg == pg
            assert list(dv.ving_counts) == ving

    def test_workers_agree(self):
        ps = gen_cap_with_apex(6)
        assert expected_degree_vector(ps, workers=2) == expected_degree_vector(ps)


class TestTriangulations:
    def test_triangle_full_graph(self, triangle):
        assert is_triangulation(triangle, PlaneGraph(0b111, 3))
        assert not is_triangulation(triangle, PlaneGraph(0b011, 3))

    def test_convex4_with_diagonal(self, convex4):
        table, _ = structures(convex4)
        edges = 0
        for seg in [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]:
            edges |= 1 << table.index_of[seg]
        g = PlaneGraph(edges, 4)
        assert is_triangulation(convex4, g)
        assert g.edge_count() == 5 == 3 * 4 - 3 - 4

    def test_maximality_equals_edge_count(self, small_sets):
        for ps in small_sets:
            h = len(convex_hull(ps))
            target = 3 * ps.n - 3 - h

            def check(g):
                assert is_triangulation(ps, g) == (g.edge_count() == target)

            enumerate_plane_graphs(ps, check)

    def test_catalan_counts(self):
        for m in range(4, 8):
            stats = enumerate_triangulations(gen_convex_chain(m))
            assert stats.count == catalan(m - 2)

    def test_triangle_single_triangulation(self, triangle):
        assert enumerate_triangulations(triangle).count == 1

    def test_matches_filter_oracle(self, small_sets):
        for ps in small_sets:
            expected = set()
            enumerate_plane_graphs(
                ps, lambda g: expected.add(g.edges) if is_triangulation(ps, g) else None
            )
            got = {r.graph.edges for r in enumerate_triangulations(ps).records}
            assert got == expected

    def test_euler_face_count(self, small_sets):
        # |E| = 3n - 3 - h, hence 2n - 2 - h bounded (triangular) faces
        for ps in small_sets:
            h = len(convex_hull(ps))
            for rec in enumerate_triangulations(ps).records:
                assert rec.graph.edge_count() == 3 * ps.n - 3 - h
                assert sum(rec.histogram) == ps.n

    def test_records_histograms(self, convex4):
        stats = enumerate_triangulations(convex4)
        assert stats.count == 2
        for rec in stats.records:
            assert rec.v3 == rec.histogram[3]
            assert rec.v4 == 0  # degree 4 needs n >= 5
        stats5 = enumerate_triangulations(gen_convex_chain(5))
        for rec in stats5.records:
            assert rec.v3 == rec.histogram[3]
            assert rec.v4 == rec.histogram[4]


class TestContainingTriangulation:
    def test_fixpoint(self, triangle):
        t = PlaneGraph(0b111, 3)
        assert containing_triangulation(triangle, t) == t

    def test_empty_triangle(self, triangle):
        assert containing_triangulation(triangle, PlaneGraph(0, 3)).edges == 0b111

    def test_empty_convex4_lowest_index_rule(self, convex4):
        table, _ = structures(convex4)
        t = containing_triangulation(convex4, PlaneGraph(0, 4))
        expected = 0
        for seg in [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]:
            expected |= 1 << table.index_of[seg]
        assert t.edges == expected  # hull plus the (0, 2) diagonal

    def test_contains_and_is_triangulation(self, small_sets):
        for ps in small_sets:
            def check(g):
                t = containing_triangulation(ps, g)
                assert t.edges & g.edges == g.edges
                assert is_triangulation(ps, t)

            enumerate_plane_graphs(ps, check)

    def test_rejects_crossing_input(self, convex4):
        table, _ = structures(convex4)
        bad = (1 << table.index_of[(0, 2)]) | (1 << table.index_of[(1, 3)])
        with pytest.raises(ValueError):
            containing_triangulation(convex4, PlaneGraph(bad, 4))


class TestPlaneGraphEncoding:
    def test_hex_round_trip(self, convex4):
        for edges in (0, 1, 0b101010, 63):
            g = PlaneGraph(edges, 4)
            assert PlaneGraph.from_hex(g.to_hex(), 4) == g

    def test_hex_is_lowercase_lsb0(self):
        assert PlaneGraph(0, 3).to_hex() == "0"
        assert PlaneGraph(0b1010, 4).to_hex() == "a"
