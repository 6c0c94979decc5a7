"""
Closed-form trajectory and the RK4 oracle it is validated against.
"""

import random
from fractions import Fraction

import mpmath
import pytest

from torus_rotation.errors import DomainError, ParameterMismatchError
from torus_rotation.field import TruncatedField, build_field, eval_field
from torus_rotation.flow import (
    cross_validate, eval_trajectory, integrate_ode, solve_closed_form, x3_rate,
)
from torus_rotation.liouville import LiouvilleSpec, ResonantMode
from torus_rotation.precision import hp_context, to_real


@pytest.fixture(scope='module')
def rk4_coarse(field2):
    return integrate_ode(field2, 100, Fraction(1, 100), 256)


@pytest.fixture(scope='module')
def rk4_fine(field2):
    return integrate_ode(field2, 100, Fraction(1, 200), 256)


def _reference_x3(traj, t):
    """x₃(t) summed with mpmath's own sin at 200 digits."""
    with mpmath.workdps(200):
        total = mpmath.mpf(0)
        for mode in traj.modes:
            lam = mpmath.mpf(mode.lam.numerator) / mode.lam.denominator
            A = mpmath.mpf(mode.amplitude.numerator) / mode.amplitude.denominator / (2 * mpmath.pi)
            total += A * mpmath.sin(2 * mpmath.pi * lam * mpmath.mpf(t.numerator) / t.denominator)
        return +total


class TestClosedForm:

    def test_amplitudes(self, traj3):
        expected = [15.91549431, 3.183098862e5, 4.774648293e23]
        for n, value in enumerate(expected, start=1):
            assert float(traj3.amplitude(n)) == pytest.approx(value, rel=1e-9)

    def test_amplitude_blow_up(self, traj3):
        for mode in traj3.modes:
            product = mode.resonance_product()
            assert 0 < abs(product) < 1
            assert mode.amplitude * product / mode.index == 1
            assert abs(mode.amplitude) > mode.index

    def test_mode_out_of_range(self, traj2):
        with pytest.raises(DomainError):
            traj2.mode(3)

    def test_zero_divisor_rejected(self, field1):
        degenerate = TruncatedField(field1.r_K, (ResonantMode(1, 100, 11, Fraction(0), Fraction(1, 100)),))
        with pytest.raises(DomainError):
            solve_closed_form(degenerate)


class TestEvalTrajectory:

    def test_origin(self, traj3):
        assert eval_trajectory(traj3, 0) == (0, 0, 0)

    def test_linear_coordinates(self, traj2):
        t = Fraction(37, 3)
        x1, x2, _ = eval_trajectory(traj2, t)
        assert x1 == to_real(traj2.r_K * t)
        assert x2 == to_real(t)

    def test_t_100(self, traj2):
        _, _, x3 = eval_trajectory(traj2, 100)
        assert abs(x3 - _reference_x3(traj2, Fraction(100))) < hp_context(512).mpf(10) ** -140
        assert float(x3) == pytest.approx(0.99934, abs=1e-5)

    def test_first_resonance(self, traj2):
        t1 = 1 / (4 * traj2.modes[0].lam)
        _, _, x3 = eval_trajectory(traj2, t1)
        excess = x3 - traj2.amplitude(1)
        assert 4.9e-9 < float(excess) < 5.1e-9

    def test_bounded_by_amplitude_sum(self, traj3):
        bound = traj3.amplitude_sum()
        rng = random.Random(3)
        for _ in range(200):
            t = Fraction(rng.randint(0, 10 ** 30), rng.randint(1, 10 ** 6))
            assert abs(eval_trajectory(traj3, t)[2]) <= bound

    def test_rate_matches_field(self, field3, traj3):
        ctx = hp_context(512)
        tol = ctx.ldexp(1, 8 - 512) * max(1, to_real(field3.amplitude_sum()))
        rng = random.Random(17)
        for _ in range(100):
            t = Fraction(rng.randint(0, 10 ** 12), rng.randint(1, 10 ** 3))
            h3 = eval_field(field3, (field3.r_K * t, t, 0))[2]
            assert abs(x3_rate(traj3, t) - h3) <= tol


class TestIntegrateOde:

    def test_zero_horizon(self, field2):
        series = integrate_ode(field2, 0, Fraction(1, 10))
        assert series.times == [0]
        assert series.states == [(0, 0, 0)]

    def test_empty_field_is_linear(self, spec):
        ctx = hp_context(256)
        empty = TruncatedField(spec.truncation(), ())
        t, (x1, x2, x3) = integrate_ode(empty, 10, Fraction(1, 10)).final
        assert t == 10
        assert abs(x1 - to_real(10 * spec.truncation(), 256)) < ctx.mpf(10) ** -70
        assert abs(x2 - 10) < ctx.mpf(10) ** -70
        assert x3 == 0

    def test_final_partial_step(self, field1):
        series = integrate_ode(field1, 1, Fraction(3, 10), 64)
        assert series.times == [0, Fraction(3, 10), Fraction(3, 5), Fraction(9, 10), 1]
        assert len(series) == 5

    @pytest.mark.parametrize('t_end,step', [(10, 0), (10, Fraction(-1, 10)), (10, 1), (-1, Fraction(1, 10))])
    def test_rejects(self, field1, t_end, step):
        with pytest.raises(DomainError):
            integrate_ode(field1, t_end, step)

    def test_matches_closed_form(self, traj2, rk4_coarse):
        t, state = rk4_coarse.final
        assert t == 100
        assert len(rk4_coarse) == 10001
        assert abs(state[2] - eval_trajectory(traj2, 100, 256)[2]) < hp_context(256).mpf(10) ** -9


class TestCrossValidate:

    def test_passes_at_default_tolerance(self, traj2, rk4_coarse):
        report = cross_validate(traj2, rk4_coarse, Fraction(1, 10 ** 8))
        assert report.passed
        assert report.samples == 10001

    def test_error_within_analytic_bound(self, traj2, rk4_coarse, rk4_fine):
        for series in (rk4_coarse, rk4_fine):
            report = cross_validate(traj2, series, Fraction(1, 10 ** 8))
            assert 0 < report.max_error <= series.error_bound

    def test_fourth_order_convergence(self, traj2, rk4_coarse, rk4_fine):
        coarse = cross_validate(traj2, rk4_coarse, 1).max_error
        fine = cross_validate(traj2, rk4_fine, 1).max_error
        assert 12 <= coarse / fine <= 20

    def test_missing_mode_is_detected(self, field1, traj2):
        series = integrate_ode(field1, 100, Fraction(1, 10))
        report = cross_validate(traj2, series, Fraction(1, 10 ** 10))
        assert not report.passed
        assert report.worst_time == 100
        assert float(report.max_error) == pytest.approx(2e-10, rel=1e-3)

    def test_series_against_itself(self, rk4_coarse):
        assert cross_validate(rk4_coarse, rk4_coarse, 0).passed

    def test_truncation_mismatch(self, rk4_coarse):
        other = solve_closed_form(build_field(LiouvilleSpec(10, 4), 2))
        with pytest.raises(ParameterMismatchError):
            cross_validate(other, rk4_coarse, Fraction(1, 10 ** 8))

    def test_grid_mismatch(self, rk4_coarse, rk4_fine):
        with pytest.raises(ParameterMismatchError):
            cross_validate(rk4_coarse, rk4_fine, 1)
