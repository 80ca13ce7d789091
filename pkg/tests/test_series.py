import math

import pytest

from recdiv.sequences import ArithSeq, dirichlet_inverse, gen_builtin
from recdiv.series import (
    DivergenceError,
    SingularityDomainError,
    dirichlet_partial_sum,
    find_singularity,
    verify_closed_form,
    zeta,
)

# pinned by an independent bisection run; literature agrees to 1e-11
RHO = 1.72864723899818


def direct_sum_bracket(s, m=20000):
    """Bracket zeta(s) by direct summation plus integral tail bounds."""
    partial = math.fsum(n**-s for n in range(1, m))
    lo = partial + m ** (1.0 - s) / (s - 1.0)
    hi = partial + (m - 1) ** (1.0 - s) / (s - 1.0)
    return lo, hi


class TestZeta:
    def test_against_pi_squared_over_six(self):
        z = zeta(2, 1e-10)
        assert z.abs_error_bound <= 1e-10
        assert abs(z.value - math.pi**2 / 6) <= z.abs_error_bound

    def test_against_pi_fourth_over_ninety(self):
        z = zeta(4, 1e-10)
        assert z.abs_error_bound <= 1e-10
        assert abs(z.value - math.pi**4 / 90) <= z.abs_error_bound

    def test_at_three_against_direct_summation(self):
        z = zeta(3, 1e-10)
        lo, hi = direct_sum_bracket(3.0)
        assert lo - z.abs_error_bound <= z.value <= hi + z.abs_error_bound
        assert abs(z.value - 1.2020569032) <= 1e-10 + 5e-11

    def test_bracket_at_non_integer_points(self):
        for s in (1.7, 2.2, 3.7):
            z = zeta(s, 1e-12)
            lo, hi = direct_sum_bracket(s)
            slack = (hi - lo) + z.abs_error_bound
            assert lo - slack <= z.value <= hi + slack

    def test_strictly_decreasing_on_grid(self):
        values = [zeta(1.0 + k / 10).value for k in range(1, 41)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_error_bound_is_positive_and_honored(self):
        for s, tol in ((1.05, 1e-6), (2.0, 1e-12), (9.5, 1e-4)):
            z = zeta(s, tol)
            assert 0 < z.abs_error_bound <= max(tol, 1e-13)

    def test_tolerance_floor(self):
        # absurdly small tolerances clamp to the double-precision floor
        z = zeta(2, 1e-30)
        assert z.abs_error_bound <= 1e-13
        assert abs(z.value - math.pi**2 / 6) <= 1e-12

    def test_divergence_and_validation(self):
        with pytest.raises(DivergenceError):
            zeta(1.0)
        with pytest.raises(DivergenceError):
            zeta(0.3)
        with pytest.raises(ValueError):
            zeta(2.0, tol=0.0)
        with pytest.raises(ValueError):
            zeta(math.inf)
        with pytest.raises(ValueError):
            zeta(math.nan)


class TestDirichletPartialSum:
    def test_epsilon_sums_to_exactly_one(self):
        eps = gen_builtin("epsilon", 500)
        for s in (1.1, 2.0, 3.5, -1.0):
            assert dirichlet_partial_sum(eps, s).partial_sum == 1.0

    def test_constant_function_approaches_zeta(self):
        one = gen_builtin("one", 100_000)
        point = dirichlet_partial_sum(one, 2.0)
        true = zeta(2).value
        assert 0 < true - point.partial_sum < 2e-5  # tail ~ 1/n_max

    def test_point_metadata(self):
        f = gen_builtin("K", 1000)
        point = dirichlet_partial_sum(f, 2.5)
        assert point.s == 2.5
        assert point.n_terms == 1000
        assert "1000" in point.tail_note

    def test_matches_plain_summation_small(self):
        f = gen_builtin("sigma", 50, x=1)
        point = dirichlet_partial_sum(f, 3.0)
        plain = sum(f[n] / n**3 for n in range(1, 51))
        assert math.isclose(point.partial_sum, plain, rel_tol=1e-14)

    def test_rejects_non_finite_s(self):
        f = gen_builtin("one", 10)
        with pytest.raises(ValueError):
            dirichlet_partial_sum(f, math.nan)


class TestFindSingularity:
    def test_pinned_location(self):
        rho = find_singularity(1e-10)
        assert 1.5 < rho < 2.0
        assert abs(rho - RHO) < 1e-8

    def test_defining_property_round_trip(self):
        rho = find_singularity(1e-10)
        assert abs(zeta(rho).value - 2.0) < 1e-8

    def test_coarse_tolerance(self):
        assert abs(find_singularity(1e-8) - RHO) < 1e-7

    def test_rejects_bad_tolerance(self):
        with pytest.raises(ValueError):
            find_singularity(0.0)


class TestVerifyClosedForm:
    def test_acceptance_pairs_at_reduced_range(self):
        for x, s in ((0, 3), (0, 4), (1, 4)):
            report = verify_closed_form(x, s, 20_000, 1e-3)
            assert report.passed
            assert report.gap <= 1e-3
            assert report.gap_shrinks
            assert report.checkpoint_lengths == (5000, 10_000, 20_000)
            assert report.checkpoint_gaps[-1] == report.gap

    def test_report_values_are_consistent(self):
        report = verify_closed_form(0, 3, 4000)
        expected_closed = zeta(3).value / (2 - zeta(3).value)
        assert math.isclose(report.closed_form, expected_closed, rel_tol=1e-12)
        rel = abs(report.partial_sum - report.closed_form) / abs(report.closed_form)
        assert math.isclose(report.gap, rel, rel_tol=1e-12)

    def test_below_singularity_raises(self):
        for s in (1.5, 1.6, 1.0, 0.5):
            with pytest.raises(SingularityDomainError) as exc_info:
                verify_closed_form(0, s, 100)
            assert abs(exc_info.value.rho - RHO) < 1e-6
            assert "1.7286472" in str(exc_info.value)

    def test_at_rho_itself_raises(self):
        with pytest.raises(SingularityDomainError):
            verify_closed_form(0, RHO, 100)

    def test_divergent_numerator_raises(self):
        with pytest.raises(DivergenceError):
            verify_closed_form(2, 2.5, 100)
        with pytest.raises(DivergenceError):
            verify_closed_form(1, 2.0, 100)

    def test_argument_validation(self):
        with pytest.raises(ValueError):
            verify_closed_form(-1, 3, 100)
        with pytest.raises(ValueError):
            verify_closed_form(0, 3, 0)
        with pytest.raises(ValueError):
            verify_closed_form(0, 3, 100, tol=0.0)

    def test_tiny_range_has_degenerate_checkpoints(self):
        report = verify_closed_form(0, 4, 2)
        assert report.checkpoint_lengths == (1, 2)


def seq_with_inverses(n_max):
    seqs = {
        "epsilon": gen_builtin("epsilon", n_max),
        "one": gen_builtin("one", n_max),
        "id_1": gen_builtin("id", n_max, x=1),
        "mobius": gen_builtin("mobius", n_max),
        "phi": gen_builtin("phi", n_max),
        "num_divisors": gen_builtin("num_divisors", n_max),
        "sigma_1": gen_builtin("sigma", n_max, x=1),
        "kappa_0": gen_builtin("kappa", n_max, x=0),
        "kappa_1": gen_builtin("kappa", n_max, x=1),
        "K": gen_builtin("K", n_max),
    }
    seqs["kappa_0_inv"] = dirichlet_inverse(seqs["kappa_0"])
    seqs["K_inv"] = dirichlet_inverse(seqs["K"])
    return seqs


def closed_forms(s):
    z = lambda t: zeta(t).value
    return {
        "epsilon": 1.0,
        "one": z(s),
        "id_1": z(s - 1),
        "mobius": 1.0 / z(s),
        "phi": z(s - 1) / z(s),
        "num_divisors": z(s) ** 2,
        "sigma_1": z(s) * z(s - 1),
        "kappa_0": z(s) / (2.0 - z(s)),
        "kappa_1": z(s - 1) / (2.0 - z(s)),
        "kappa_0_inv": (2.0 - z(s)) / z(s),
        "K": 1.0 / (2.0 - z(s)),
        "K_inv": 2.0 - z(s),
    }


class TestSeriesColumnConsistency:
    # relative gaps this small sit at the precision of the closed forms
    # themselves, so the decrease requirement only applies above it
    NOISE_FLOOR = 1e-11

    def test_all_rows_match_their_zeta_expression(self):
        n_max = 100_000
        seqs = seq_with_inverses(n_max)
        for s in (2.5, 3.0, 4.0):
            forms = closed_forms(s)
            for name, f in seqs.items():
                closed = forms[name]
                terms = f.terms()
                gaps = []
                for length in (n_max // 4, n_max // 2, n_max):
                    point = dirichlet_partial_sum(ArithSeq(terms[:length]), s)
                    gaps.append(abs(point.partial_sum - closed) / abs(closed))
                assert gaps[-1] <= 1e-2, (name, s, gaps)
                for earlier, later in zip(gaps, gaps[1:]):
                    assert later <= max(earlier, self.NOISE_FLOOR), (name, s, gaps)

    def test_reciprocal_pairing_at_three(self):
        n_max = 100_000
        seqs = seq_with_inverses(n_max)
        for name in ("kappa_0", "K"):
            forward = dirichlet_partial_sum(seqs[name], 3.0).partial_sum
            backward = dirichlet_partial_sum(seqs[name + "_inv"], 3.0).partial_sum
            assert abs(forward * backward - 1.0) < 1e-3
