from fractions import Fraction

import pytest

from planegraphs import (
    PointSet,
    count_plane_graphs,
    gen_cap_with_apex,
    gen_convex_chain,
    gen_triangular_hull_random,
    harmonic_residual,
    run_claims,
    stirling_bounds,
    verify_graph_charge_cap,
    verify_previous_lower,
    verify_triangulation_degree_lemmas,
    verify_v0_upper,
    verify_vi_upper,
    verify_visibility_lemma,
    verify_zero_ving_recurrence,
)
from planegraphs.verify import (
    HOLDS,
    NOT_APPLICABLE,
    central_binomial_sweep,
    harmonic_gap_sweep,
    harmonic_residual_sweep,
    stirling_sweep,
    ving_charge_argmax_sweep,
)


class TestV0Upper:
    def test_holds_on_cap_apex(self):
        report = verify_v0_upper(gen_cap_with_apex(5))
        assert report.status == HOLDS
        assert report.margin > 0
        assert report.details["bound_strictly_below_n_over_10_18"] is True

    def test_triangle_not_applicable_but_informative(self, triangle):
        report = verify_v0_upper(triangle)
        assert report.status == NOT_APPLICABLE
        # with n < 5 the bound would even be false: 3/4 > 33/112
        assert report.details["vhat0"] == Fraction(3, 4) > Fraction(33, 112)

    def test_non_triangular_hull_not_applicable(self, convex4):
        assert verify_v0_upper(convex4).status == NOT_APPLICABLE


class TestViUpper:
    def test_triangle_values(self, triangle):
        reports = verify_vi_upper(triangle)
        assert [r.status for r in reports] == [HOLDS, HOLDS]
        # vhat_1 = 3/2 < 3/sqrt(pi), vhat_2 = 3/4 < 3/sqrt(2 pi)
        assert all(r.margin > 0 for r in reports)

    def test_all_degrees_on_triangular_hull_set(self):
        ps = gen_triangular_hull_random(6, seed=1)
        reports = verify_vi_upper(ps)
        assert len(reports) == 5
        assert all(r.status == HOLDS for r in reports)

    def test_i_max_validated(self, triangle):
        with pytest.raises(ValueError):
            verify_vi_upper(triangle, i_max=5)


class TestPreviousLower:
    def test_triangle(self, triangle):
        reports = {r.claim: r for r in verify_previous_lower(triangle)}
        assert all(r.status == HOLDS for r in reports.values())
        assert reports["prior_v0_lower"].details["value"] == Fraction(3, 4)
        assert reports["prior_v1_lower"].details["bound"] == Fraction(9, 1024)
        assert reports["prior_v2v3_lower"].details["value"] == Fraction(3, 4)

    def test_small_sets_hold(self, small_sets):
        for ps in small_sets:
            assert all(r.status == HOLDS for r in verify_previous_lower(ps))


class TestVisibilityLemma:
    def test_strict_mode_holds(self):
        for ps in (gen_cap_with_apex(5), gen_triangular_hull_random(5, seed=2)):
            report = verify_visibility_lemma(ps)
            assert report.status == HOLDS
            assert report.details["min_visibility"] >= 3
            assert report.details["strict_mode"]

    def test_report_only_for_convex4(self, convex4):
        report = verify_visibility_lemma(convex4)
        assert report.status == NOT_APPLICABLE
        # a diagonal blocks the other diagonal: minimum drops below 3
        assert report.details["min_visibility"] == 2

    def test_zero_ving_tally_matches_expectation(self):
        ps = gen_cap_with_apex(5)
        report = verify_visibility_lemma(ps)
        from planegraphs import expected_degree_vector

        assert report.details["zero_vings_scanned"] == expected_degree_vector(ps).ving_counts[0]


class TestTriangulationDegreeLemmas:
    def test_hold_on_triangular_hull_sets(self):
        for ps in (gen_cap_with_apex(5), gen_cap_with_apex(6),
                   gen_triangular_hull_random(6, seed=1)):
            reports = verify_triangulation_degree_lemmas(ps)
            assert [r.status for r in reports] == [HOLDS, HOLDS, HOLDS]

    def test_n5_deg3_bound_is_two(self):
        # 2n/3 - 1 = 7/3 at n = 5, so no triangulation may have 3 vertices of degree 3
        ps = gen_cap_with_apex(5)
        report = verify_triangulation_degree_lemmas(ps)[0]
        assert report.status == HOLDS
        from planegraphs import enumerate_triangulations

        assert all(rec.v3 <= 2 for rec in enumerate_triangulations(ps).records)

    def test_not_applicable_on_convex(self, convex4):
        assert all(
            r.status == NOT_APPLICABLE for r in verify_triangulation_degree_lemmas(convex4)
        )


class TestGraphChargeCap:
    def test_holds_with_monotonicity(self):
        report = verify_graph_charge_cap(gen_cap_with_apex(5))
        assert report.status == HOLDS
        assert report.details["potential_monotonicity"] is True
        # the cap is non-strict and attained here: a triangulation with
        # degrees (3,3,4,4,4) has charge 2/8 + 3/16 = 49/112 exactly
        assert report.margin == 0
        assert report.details["max_charge"] == Fraction(49, 112)

    def test_triangle_not_applicable(self, triangle):
        assert verify_graph_charge_cap(triangle).status == NOT_APPLICABLE


class TestZeroVingRecurrence:
    def test_triangle_value(self, triangle):
        reports = {r.claim: r for r in verify_zero_ving_recurrence(triangle)}
        general = reports["zero_ving_identity"]
        assert general.status == HOLDS
        assert general.details["lhs"] == 6  # 3 * pg(two points) = 3 * 2
        assert all(r.status == HOLDS for r in reports.values())

    def test_four_point_sets(self, convex4):
        ps_interior = PointSet.from_coords([(0, 0), (9, 0), (0, 9), (2, 2)])
        for ps in (convex4, ps_interior):
            assert all(r.status == HOLDS for r in verify_zero_ving_recurrence(ps))

    def test_consequence_inequality(self):
        ps = gen_cap_with_apex(5)
        reports = {r.claim: r for r in verify_zero_ving_recurrence(ps)}
        assert reports["zero_ving_growth_consequence"].margin >= 0


class TestAnalytic:
    def test_harmonic_residual_m1(self):
        lo, hi = harmonic_residual(1)
        # eps_1 = gamma - 1/2 = 0.0772...
        assert Fraction(77, 1000) < lo <= hi < Fraction(78, 1000)

    def test_harmonic_residual_large(self):
        lo, hi = harmonic_residual(10**4)
        assert 0 <= lo <= hi <= Fraction(1, 8 * 10**8)

    def test_harmonic_sweeps(self):
        assert harmonic_residual_sweep(500).status == HOLDS
        gap = harmonic_gap_sweep(500)
        assert gap.status == HOLDS
        assert gap.margin > 0

    def test_stirling_bounds(self):
        assert stirling_bounds(1)
        assert stirling_bounds(10)
        assert stirling_bounds(500)
        with pytest.raises(ValueError):
            stirling_bounds(0)

    def test_stirling_sweep(self):
        report = stirling_sweep(60)
        assert report.status == HOLDS
        assert report.margin > 0

    def test_central_binomial(self):
        assert central_binomial_sweep(500).status == HOLDS

    def test_charge_argmax(self):
        assert ving_charge_argmax_sweep(16).status == HOLDS


class TestRunClaims:
    def test_all_claims_on_cap_apex(self):
        reports = run_claims(gen_cap_with_apex(5))
        assert reports
        assert not any(r.status == "violated" for r in reports)
        claims = {r.claim for r in reports}
        assert "v0_upper" in claims and "harmonic_residual_bounds" in claims

    def test_claim_selection(self, triangle):
        reports = run_claims(triangle, ["previous_lower"])
        assert {r.claim for r in reports} == {
            "prior_v0_lower", "prior_v1_lower", "prior_v2_lower", "prior_v2v3_lower"
        }

    def test_unknown_claim_rejected(self, triangle):
        with pytest.raises(ValueError):
            run_claims(triangle, ["not_a_claim"])

    def test_analytic_only_without_pointset(self):
        reports = run_claims(None, ["charge_argmax"])
        assert len(reports) == 1 and reports[0].status == HOLDS
