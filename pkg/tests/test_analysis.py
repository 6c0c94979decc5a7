"""
Weak rotation holds, strong rotation fails: resonance deviations and
correlation functionals on the default chain.
"""

from dataclasses import replace
from fractions import Fraction

import pytest

from torus_rotation.analysis import (
    CorrelationKind, correlation, derivative_correlation, deviation_at_resonance,
    deviation_ladder, deviation_profile, integration_by_parts_check, resonance_time,
    weak_rotation_estimate, weak_rotation_ladder,
)
from torus_rotation.errors import DomainError
from torus_rotation.flow import ClosedFormTrajectory
from torus_rotation.liouville import ResonantMode
from torus_rotation.precision import hp_context, reduce_phase


@pytest.fixture(scope='module')
def ctx():
    return hp_context(512)


class TestWeakRotation:

    def test_linear_components_exact(self, traj2):
        estimate = weak_rotation_estimate(traj2, 10 ** 12)
        assert estimate.rho_exact == (traj2.r_K, 1)
        assert estimate.rho_hat[1] == 1

    def test_third_component_bound(self, traj2):
        estimate = weak_rotation_estimate(traj2, 10 ** 12)
        assert estimate.passed
        assert float(estimate.third_component_bound) < 3.3e-7
        assert abs(estimate.rho_hat[2]) <= estimate.third_component_bound

    def test_bound_decreases(self, traj2):
        ladder = weak_rotation_ladder(traj2, [10 ** 6, 10 ** 9, 10 ** 12])
        bounds = [e.third_component_bound for e in ladder]
        assert bounds[0] > bounds[1] > bounds[2]

    def test_near_full_turn(self, traj1):
        estimate = weak_rotation_estimate(traj1, 10 ** 4)
        assert float(estimate.rho_hat[2]) == pytest.approx(1.0e-20, rel=1e-9)

    def test_nonpositive_horizon(self, traj1):
        with pytest.raises(DomainError):
            weak_rotation_estimate(traj1, 0)


class TestResonanceTime:

    def test_first_mode(self, traj3):
        t1 = resonance_time(traj3.mode(1))
        assert t1 == 1 / (4 * traj3.mode(1).lam)
        assert 2500 - Fraction(1, 10 ** 14) < t1 < 2500
        assert abs(t1 - Fraction(24999999999999999975, 10 ** 16)) < Fraction(1, 10 ** 30)

    def test_second_mode(self, traj3):
        assert float(resonance_time(traj3.mode(2))) == pytest.approx(2.5e17)

    def test_quarter_lambda(self):
        mode = ResonantMode(1, 4, 1, Fraction(1, 4), Fraction(1, 4))
        assert resonance_time(mode) == 1

    def test_zero_lambda(self):
        with pytest.raises(DomainError):
            resonance_time(ResonantMode(1, 4, 1, Fraction(0), Fraction(1, 4)))

    def test_quarter_turn_is_exact(self, traj3):
        for mode in traj3.modes:
            assert reduce_phase(mode.lam * resonance_time(mode)) == Fraction(1, 4)


class TestDeviation:

    def test_ladder_values(self, traj3):
        expected = [15.91549431, 3.183098862e5, 4.774648293e23]
        reports = deviation_ladder(traj3)
        for report, value in zip(reports, expected):
            assert float(report.x3_at_tn) == pytest.approx(value, rel=1e-6)
            assert report.certified_lower_bound > 0
            assert report.exceeds_n_over_4pi
            assert report.passed

    def test_ladder_grows(self, traj3):
        reports = deviation_ladder(traj3)
        for a, b in zip(reports, reports[1:]):
            assert b.x3_at_tn >= 10 ** 4 * a.x3_at_tn

    def test_first_mode_with_two(self, traj2):
        report = deviation_at_resonance(traj2, 1)
        assert 4.9e-9 < float(report.x3_at_tn - report.amplitude) < 5.1e-9
        assert float(report.certified_lower_bound) == pytest.approx(15.91549431, abs=1e-7)
        assert report.x3_at_tn >= report.certified_lower_bound

    def test_second_mode_margin(self, traj3):
        report = deviation_at_resonance(traj3, 2)
        assert abs(report.x3_at_tn - report.amplitude) <= 16

    @pytest.mark.parametrize('n', [0, 4])
    def test_out_of_range(self, traj3, n):
        with pytest.raises(DomainError):
            deviation_at_resonance(traj3, n)

    def test_record(self, traj1):
        record = deviation_at_resonance(traj1, 1).to_record()
        assert record['n'] == 1
        assert record['pass'] is True
        assert record['t_n'].endswith('/' + str((4 * traj1.mode(1).lam).numerator))


class TestDeviationProfile:

    def test_origin_only(self, traj2):
        (point,) = deviation_profile(traj2, [0])
        assert (point.t, point.x3, point.running_sup) == (0, 0, 0)

    def test_geometric_grid_reaches_amplitude(self, traj1):
        grid = [Fraction(f"{10 ** (i / 10):.12g}") for i in range(41)]
        profile = deviation_profile(traj1, grid)
        assert float(profile[-1].running_sup) == pytest.approx(15.9155, rel=1e-3)

    def test_jump_between_resonances(self, traj2):
        t1, t2 = (resonance_time(m) for m in traj2.modes)
        profile = deviation_profile(traj2, [1, t1, 10 ** 6, t2])
        sups = [float(p.running_sup) for p in profile]
        assert sups[1] == pytest.approx(15.9155, rel=1e-4)
        assert sups[3] == pytest.approx(3.1831e5, rel=1e-4)
        assert sups == sorted(sups)

    def test_unsorted_grid(self, traj2):
        with pytest.raises(DomainError):
            deviation_profile(traj2, [0, 2, 1])

    def test_repeated_time(self, traj2):
        with pytest.raises(DomainError):
            deviation_profile(traj2, [0, 1, 1])


class TestCorrelation:

    def test_first_mode_limit(self, traj2):
        estimate = correlation(traj2, 1, 10 ** 12, CorrelationKind.SIN)
        assert float(estimate.limit) == pytest.approx(7.957747155, rel=1e-9)
        assert abs(float(estimate.value) - 7.957747155) < 2.6e-4
        assert estimate.within_bound
        assert estimate.limit_exceeds_n_over_4pi
        assert estimate.passed

    def test_second_mode_limit(self, traj2):
        estimate = correlation(traj2, 2, 10 ** 20, 'sin')
        assert float(estimate.value) == pytest.approx(1.591549431e5, rel=1e-3)
        assert estimate.passed

    @pytest.mark.parametrize('n', [1, 2])
    def test_cos_has_zero_limit(self, traj2, n):
        estimate = correlation(traj2, n, 10 ** 12, CorrelationKind.COS)
        assert estimate.limit == 0
        assert abs(estimate.value) <= estimate.error_bound
        assert estimate.passed

    def test_consistency_over_ladder(self, traj3):
        for n in (1, 2, 3):
            for kind in CorrelationKind:
                bounds = []
                for T in (10 ** 6, 10 ** 9, 10 ** 12, 10 ** 15, 10 ** 20):
                    estimate = correlation(traj3, n, T, kind)
                    assert estimate.within_bound
                    bounds.append(estimate.error_bound)
                if n == 1 and kind is CorrelationKind.SIN:
                    assert all(a > b for a, b in zip(bounds, bounds[1:]))

    def test_bound_decreases_once_cross_terms_oscillate(self, traj3):
        # From T = 10^60 on, every cross term takes its 1/T bound, not a_m·T/2.
        ladder = (10 ** 60, 10 ** 70, 10 ** 80, 10 ** 90)
        for n in (1, 2, 3):
            for kind in CorrelationKind:
                estimates = [correlation(traj3, n, T, kind) for T in ladder]
                assert all(e.within_bound for e in estimates)
                bounds = [e.error_bound for e in estimates]
                assert all(a > b for a, b in zip(bounds, bounds[1:]))

    @pytest.mark.parametrize('kind', list(CorrelationKind))
    @pytest.mark.parametrize('n', [1, 2])
    def test_linear_in_amplitudes(self, traj2, ctx, n, kind):
        doubled = ClosedFormTrajectory(
            traj2.r_K,
            tuple(replace(mode, amplitude=2 * mode.amplitude) for mode in traj2.modes),
            traj2.base,
        )
        base = correlation(traj2, n, 10 ** 12, kind)
        scaled = correlation(doubled, n, 10 ** 12, kind)
        assert scaled.limit == 2 * base.limit
        assert abs(scaled.value - 2 * base.value) <= ctx.ldexp(abs(base.value) + 1, -480)

    def test_limit_exceeds_n_over_4pi(self, traj3, ctx):
        for n in (1, 2, 3):
            estimate = correlation(traj3, n, 10 ** 20)
            assert estimate.limit > n / (4 * ctx.pi)

    def test_tail_contribution(self, traj2):
        estimate = correlation(traj2, 1, 10 ** 12)
        assert float(estimate.tail_contribution) == pytest.approx(3e-60)

    def test_domain(self, traj2):
        with pytest.raises(DomainError):
            correlation(traj2, 3, 10 ** 12)
        with pytest.raises(DomainError):
            correlation(traj2, 1, 0)

    def test_record(self, traj2):
        record = correlation(traj2, 1, 10 ** 12).to_record()
        assert record['kind'] == 'sin'
        assert record['T'] == '1000000000000/1'
        assert record['pass'] is True


class TestDerivativeCorrelation:

    def test_cos_limit(self, traj2):
        value = derivative_correlation(traj2, 1, 10 ** 12, CorrelationKind.COS)
        assert abs(float(value) - 0.005) < 1e-9

    def test_sin_limit(self, traj2):
        value = derivative_correlation(traj2, 1, 10 ** 12, CorrelationKind.SIN)
        assert abs(float(value)) < 1e-9

    def test_second_mode(self, traj2):
        value = derivative_correlation(traj2, 2, 10 ** 20, CorrelationKind.COS)
        assert float(value) == pytest.approx(1e-12, rel=1e-3)


class TestIntegrationByParts:

    @pytest.mark.parametrize('n,T', [(1, 10 ** 6), (1, 10 ** 12), (2, 10 ** 20)])
    def test_correct_pairing_closes(self, traj2, ctx, n, T):
        check = integration_by_parts_check(traj2, n, T)
        scale = max(1, abs(check.cos_correlation))
        assert check.correct_residual <= scale * ctx.mpf(10) ** -100

    def test_printed_pairing_is_flagged(self, traj2, ctx):
        check = integration_by_parts_check(traj2, 1, 10 ** 12)
        assert check.discrepancy_flagged
        # the dropped pairing converges to A₁/2, not to the cos limit 0
        assert float(check.printed_residual) == pytest.approx(7.957747155, rel=1e-6)
        assert check.to_record()['discrepancy_flagged'] is True
