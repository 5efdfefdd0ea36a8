from fractions import Fraction

import pytest

from planegraphs import (
    PointSet,
    convex_hull,
    count_plane_graphs,
    expected_degree_vector,
    flajolet_noy_approx,
    gen_cap_with_apex,
    gen_convex_chain,
    gen_triangular_hull_random,
    is_triangular_hull,
    segments_cross,
    validate_general_position,
    verify_product_law,
)
from planegraphs.constructions import ConstructionSpec, fn_ratio_table, v0_trend_table


class TestConvexChain:
    def test_small_hulls(self):
        assert is_triangular_hull(gen_convex_chain(3))
        assert len(convex_hull(gen_convex_chain(5))) == 5

    def test_general_position_by_construction(self):
        # distinct parabola abscissas have pairwise distinct slopes
        assert validate_general_position(gen_convex_chain(9)) == []

    def test_coordinate_cap(self):
        with pytest.raises(ValueError):
            gen_convex_chain(1100)

    def test_minimum_size(self):
        with pytest.raises(ValueError):
            gen_convex_chain(2)


class TestCapWithApex:
    def test_hull_is_expected_triangle(self):
        for n in (4, 5, 8):
            ps = gen_cap_with_apex(n)
            assert set(convex_hull(ps)) == {0, 1, n - 1}

    def test_certificate_no_apex_chord_crossing(self):
        ps = gen_cap_with_apex(6)
        pts = ps.points
        for i in range(1, 6):
            for j in range(1, 6):
                for k in range(j + 1, 6):
                    if i in (j, k):
                        continue
                    assert not segments_cross(pts[0], pts[i], pts[j], pts[k])

    def test_apex_zero_ving_fraction(self):
        # the apex is isolated in exactly the graphs with no apex edge
        for n in (4, 5, 6):
            ps = gen_cap_with_apex(n)
            dv = expected_degree_vector(ps)
            assert Fraction(dv.per_point[0][0], dv.pg) == Fraction(1, 1 << (n - 1))

    def test_cap_point_zero_ving_fractions(self):
        # dropping any cap point leaves a cap-with-apex on n-1 points, so all
        # cap points have the same isolated-vertex fraction
        n = 6
        ps = gen_cap_with_apex(n)
        dv = expected_degree_vector(ps)
        chain_count = count_plane_graphs(gen_convex_chain(n - 2))
        expected = Fraction((1 << (n - 2)) * chain_count, dv.pg)
        for p in range(1, n):
            assert Fraction(dv.per_point[p][0], dv.pg) == expected
        assert dv.vhat[0] == (n - 1) * expected + Fraction(1, 1 << (n - 1))

    def test_minimum_size(self):
        with pytest.raises(ValueError):
            gen_cap_with_apex(3)


class TestTriangularHullRandom:
    def test_deterministic_in_seed(self):
        a = gen_triangular_hull_random(7, seed=11)
        b = gen_triangular_hull_random(7, seed=11)
        assert a == b
        assert a != gen_triangular_hull_random(7, seed=12)

    def test_hull_size_three(self):
        for seed in (1, 2, 3):
            assert is_triangular_hull(gen_triangular_hull_random(6, seed=seed))

    def test_validates(self):
        assert validate_general_position(gen_triangular_hull_random(8, seed=5)) == []


class TestConstructionSpec:
    def test_dispatch(self):
        assert ConstructionSpec("convex_chain", 4).build() == gen_convex_chain(4)
        assert ConstructionSpec("triangular_hull_random", 5, seed=9).build() == (
            gen_triangular_hull_random(5, seed=9)
        )
        with pytest.raises(ValueError):
            ConstructionSpec("pentagon", 5).build()


class TestProductLaw:
    @pytest.mark.parametrize("n,factor", [(4, 8), (5, 16), (6, 32)])
    def test_exact(self, n, factor):
        report = verify_product_law(n)
        assert report.status == "holds"
        assert report.details["pg"] == factor * count_plane_graphs(gen_convex_chain(n - 1))

    def test_n5_values(self):
        assert count_plane_graphs(gen_cap_with_apex(5)) == 768 == 16 * 48


class TestAsymptotics:
    def test_leading_term_positive_and_growing(self):
        values = [flajolet_noy_approx(m) for m in range(3, 9)]
        assert all(v > 0 for v in values)
        assert values == sorted(values)

    def test_ratio_table_trend(self):
        rows = fn_ratio_table(8)
        ratios = {row["m"]: row["ratio"] for row in rows}
        distances = [abs(ratios[m] - 1) for m in range(4, 9)]
        assert distances == sorted(distances, reverse=True)

    def test_growth_factor_approaches_constant(self):
        rows = fn_ratio_table(9)
        growth = [row["growth_factor"] for row in rows if row["growth_factor"]]
        assert growth == sorted(growth)
        assert 9.0 < growth[-1] < 6 + 4 * 2**0.5

    def test_convex_position_invariance(self):
        # pg depends only on the crossing structure, so any convex-position
        # realization matches the parabola chain
        upward = PointSet.from_coords([(k, k * k) for k in range(5)])
        assert len(convex_hull(upward)) == 5
        assert count_plane_graphs(upward) == count_plane_graphs(gen_convex_chain(5))

    def test_v0_trend_table(self):
        rows = v0_trend_table(6)
        assert [row["n"] for row in rows] == [4, 5, 6]
        for row in rows:
            assert isinstance(row["vhat0"], Fraction)
            for c in (23.31, 23.314, 23.32):
                assert 0 < row[f"scaled_{c}"] < 5
