import math
from fractions import Fraction

import numpy as np
import pytest

from spectral_turan import (
    AsymptoticOnly,
    Complete,
    FKernel,
    LinearForestSpec,
    NegativeRadicandError,
    Proven,
    SplitS,
    SplitSPlus,
    Star,
    Unconditional,
    UnsupportedCaseError,
    adjacency_matrix,
    build_family,
    canonical_form,
    ex_bipartite_kp3,
    ex_kp3,
    ex_linear_forest,
    extremal_graphs,
    h_parameter,
    hong_bound,
    is_forest_free,
    least_eig_bound,
    near_matching,
    rho_bipartite_kp3,
    rho_f,
    rho_f_bounds,
    rho_s,
    rho_s_plus_bound,
    sqrt_edge_bound,
    union,
)


def eig_max(g):
    return float(np.linalg.eigvalsh(adjacency_matrix(g))[-1])


def canon(g):
    return canonical_form(g)


class TestEdgeCounts:
    def test_kp3_k2_narrow_band(self):
        # dense, plateau, single jump at n=9, then the matching regime
        expected = {3: 3, 4: 6, 5: 10, 6: 10, 7: 11, 8: 11, 9: 12, 10: 13, 11: 15, 12: 16}
        for n, e in expected.items():
            assert ex_kp3(n, 2).value == e, n

    def test_kp3_case_boundaries(self):
        k = 3
        assert ex_kp3(3 * k - 1, k).value == math.comb(3 * k - 1, 2)
        assert ex_kp3(3 * k, k).value == math.comb(3 * k - 1, 2)
        assert ex_kp3(5 * k - 1, k).value == math.comb(3 * k - 1, 2) + k
        n = 5 * k
        assert (
            ex_kp3(n, k).value
            == math.comb(k - 1, 2) + (n - k + 1) * (k - 1) + (n - k + 1) // 2
        )

    def test_kp3_k1_is_matching_number(self):
        for n in range(5, 12):
            assert ex_kp3(n, 1).value == n // 2

    def test_kp3_is_unconditional(self):
        assert isinstance(ex_kp3(9, 2).validity, Unconditional)

    def test_linear_forest_general_form(self):
        f = LinearForestSpec.parse("5,3")
        assert h_parameter(f) == 2
        v = ex_linear_forest(30, f)
        assert v.value == math.comb(2, 2) + 2 * 28 + 1  # all odd: +1
        assert isinstance(v.validity, AsymptoticOnly)
        assert ex_linear_forest(30, LinearForestSpec.parse("4,2")).value == 57

    def test_linear_forest_redirects_all_threes(self):
        with pytest.raises(UnsupportedCaseError):
            ex_linear_forest(30, LinearForestSpec.kp3(2))

    def test_bipartite_kp3_values_and_threshold(self):
        v = ex_bipartite_kp3(18, 2)
        assert v.value == 17
        assert str(v.validity) == "Proven(n>=18)"
        # the tag states the theorem's domain and does not move with n
        assert ex_bipartite_kp3(17, 2).validity == Proven(n_from=18)
        assert ex_bipartite_kp3(40, 3).validity == Proven(n_from=29)
        assert ex_bipartite_kp3(40, 3).value == 2 * 38


class TestExtremalWitnesses:
    def test_kp3_witness_sets_small_n(self):
        f = LinearForestSpec.kp3(2)
        assert [canon(g) for g in extremal_graphs(5, f)] == [
            canon(build_family(Complete(5)))
        ]
        for n in (6, 7, 8):
            (w,) = extremal_graphs(n, f)
            expected = union(build_family(Complete(5)), near_matching(n - 5))
            assert canon(w) == canon(expected)

    def test_kp3_double_witness_at_n9(self):
        ws = extremal_graphs(9, LinearForestSpec.kp3(2))
        got = {canon(g) for g in ws}
        expected = {
            canon(union(build_family(Complete(5)), near_matching(4))),
            canon(build_family(FKernel(9, 2))),
        }
        assert got == expected

    def test_kp3_witness_large_n(self):
        (w,) = extremal_graphs(12, LinearForestSpec.kp3(2))
        assert canon(w) == canon(build_family(FKernel(12, 2)))

    def test_general_witness_is_split_family(self):
        f = LinearForestSpec.parse("4,2")  # not all odd: plain split graph
        (w,) = extremal_graphs(20, f)
        assert canon(w) == canon(build_family(SplitS(20, 2)))
        f = LinearForestSpec.parse("5,3")  # all odd: one extra edge
        (w,) = extremal_graphs(20, f)
        assert canon(w) == canon(build_family(SplitSPlus(20, 2)))

    @pytest.mark.parametrize("spec", ["5,3", "4,2", "2,2,2", "3,3,2"])
    def test_witnesses_are_free_and_tight_up_to_60(self, spec):
        f = LinearForestSpec.parse(spec)
        for n in range(f.total_vertices + 2, 61, 7):
            target = ex_linear_forest(n, f).value
            for w in extremal_graphs(n, f):
                assert w.edge_count() == target
                assert is_forest_free(w, f)

    def test_long_path_witness_small_n(self):
        # freeness proofs for long parts blow past the node budget on
        # big hosts, so pin this shape at a modest order only
        f = LinearForestSpec.parse("7,3,2")
        (w,) = extremal_graphs(20, f)
        assert w.edge_count() == ex_linear_forest(20, f).value
        assert is_forest_free(w, f)


class TestSpectralFormulas:
    def test_rho_s_star_case(self):
        v = rho_s(10, 1)
        assert v.value == pytest.approx(3.0, abs=1e-12)
        assert v.polynomial == (-9, 0, 1)

    @pytest.mark.parametrize("h", [1, 2, 3, 5])
    @pytest.mark.parametrize("n", [12, 37, 80])
    def test_rho_s_matches_eigensolver(self, n, h):
        g = build_family(SplitS(n, h))
        assert rho_s(n, h).value == pytest.approx(eig_max(g), abs=1e-8)

    @pytest.mark.parametrize("k", [2, 3, 4, 6])
    @pytest.mark.parametrize("n", [15, 36, 61])
    def test_rho_f_matches_eigensolver(self, n, k):
        g = build_family(FKernel(n, k))
        assert rho_f(n, k).value == pytest.approx(eig_max(g), abs=1e-8)

    def test_rho_f_cubic_root_case(self):
        v = rho_f(10, 2)
        assert v.value == pytest.approx(3.4939592074349344, abs=1e-10)
        assert v.polynomial == (1, -9, -1, 1)
        assert v.polynomial_residual() <= Fraction(1, 10**12)

    def test_rho_f_bounds_sandwich(self):
        lo, hi = rho_f_bounds(10, 2)
        assert lo.value == pytest.approx((1 + math.sqrt(33)) / 2, abs=1e-12)
        assert hi.value == pytest.approx((1 + math.sqrt(37)) / 2, abs=1e-12)
        for k in range(2, 7):
            for n in (8 * k * k - 3 * k, 8 * k * k, 200):
                lo, hi = rho_f_bounds(n, k)
                mid = rho_f(n, k).value
                assert lo.value < mid <= hi.value + 1e-12

    def test_exact_radius_formulas_are_unconditional(self):
        # these give the eigenvalue of a concrete graph, so no threshold
        assert isinstance(rho_f(26, 2).validity, Unconditional)
        assert isinstance(rho_s(30, 4).validity, Unconditional)

    def test_rho_s_plus_bound_dominates_construction(self):
        # the cited validity threshold 4^h is optimistic at its own edge
        # for h = 2: rho(S+_{16,2}) = 5.8914 exceeds the 5.8619 bound,
        # and the inequality only takes over from n = 38
        assert eig_max(build_family(SplitSPlus(16, 2))) > rho_s_plus_bound(16, 2).value
        for n, h in [(38, 2), (100, 2), (64, 3), (120, 3)]:
            g = build_family(SplitSPlus(n, h))
            assert eig_max(g) < rho_s_plus_bound(n, h).value


class TestUniversalBounds:
    def test_hong_bound_tight_on_complete(self):
        for n in range(3, 9):
            v = hong_bound(math.comb(n, 2), n, n - 1)
            assert v.value == pytest.approx(n - 1, abs=1e-12)

    def test_hong_bound_star(self):
        g = build_family(Star(10))
        v = hong_bound(g.edge_count(), g.n, g.min_degree())
        assert eig_max(g) <= v.value + 1e-12

    def test_hong_bound_rejects_impossible_input(self):
        with pytest.raises(NegativeRadicandError):
            hong_bound(1, 10, 3)

    def test_sqrt_edge_bound(self):
        assert sqrt_edge_bound(16).value == pytest.approx(4.0, abs=1e-15)
        assert sqrt_edge_bound(0).value == 0.0

    def test_least_eig_and_bipartite_rho_formulas(self):
        assert least_eig_bound(20, 3).value == pytest.approx(-6.0, abs=1e-12)
        assert rho_bipartite_kp3(20, 3).value == pytest.approx(6.0, abs=1e-12)

    def test_near_matching_shape(self):
        g = near_matching(7)
        assert (g.n, g.edge_count()) == (7, 3)
        assert sorted(g.degrees()) == [0, 1, 1, 1, 1, 1, 1]
