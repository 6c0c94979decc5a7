"""
FLOW

Trajectories of ẋ = h(x), x(0) = 0.

Closed form (modes 1..M):

    x₁(t) = r_K·t,  x₂(t) = t,  x₃(t) = Σ Aₘ sin(2πλₘt),  Aₘ = m / (2π pₘ^m λₘ)

Amplitudes are held as the exact rational Aₘ·2π = m/(pₘ^m λₘ); the 2π is
applied once, at evaluation. The RK4 integrator is the independent oracle the
closed form is validated against.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple, Union
import logging

from .errors import DomainError, ParameterMismatchError
from .field import TruncatedField, eval_field
from .precision import (
    DEFAULT_BITS, GUARD_BITS, Rational, RealHP,
    cos_turns, hp_context, reduce_phase, round_to, sin_turns, to_fraction, to_real,
)

logger = logging.getLogger(__name__)

State = Tuple[RealHP, RealHP, RealHP]


@dataclass(frozen=True)
class TrajectoryMode:
    """
    One sine mode of x₃.

    amplitude  Aₘ·2π = m/(pₘ^m λₘ), exact
    """
    index: int
    p: int
    lam: Fraction
    amplitude: Fraction

    @property
    def drift_amplitude(self) -> Fraction:
        """Aₘ·2πλₘ, the field amplitude aₘ the mode integrates."""
        return self.amplitude * self.lam

    def resonance_product(self) -> Fraction:
        """pₘ^m λₘ; |·| < 1 is what makes Aₘ exceed m/(2π)."""
        return self.p ** self.index * self.lam


@dataclass(frozen=True)
class ClosedFormTrajectory:
    r_K: Fraction
    modes: Tuple[TrajectoryMode, ...]
    base: int = 10

    @property
    def M(self) -> int:
        return len(self.modes)

    def mode(self, n: int) -> TrajectoryMode:
        if not 1 <= n <= self.M:
            raise DomainError(f"mode index {n} outside 1..{self.M}")
        return self.modes[n - 1]

    def amplitude(self, n: int, bits: int = DEFAULT_BITS) -> RealHP:
        """Aₙ as a RealHP."""
        wp = bits + GUARD_BITS
        ctx = hp_context(wp)
        return round_to(to_real(self.mode(n).amplitude, wp) / (2 * ctx.pi), bits)

    def amplitude_sum(self, bits: int = DEFAULT_BITS) -> RealHP:
        """Σ |Aₘ|, the sup bound of x₃."""
        wp = bits + GUARD_BITS
        ctx = hp_context(wp)
        total = sum((abs(m.amplitude) for m in self.modes), Fraction(0))
        return round_to(to_real(total, wp) / (2 * ctx.pi), bits)

    def rounding_bound(self, bits: int = DEFAULT_BITS) -> RealHP:
        """Evaluation error of x₃: Σ Aₘ·2^(4-bits)."""
        ctx = hp_context(bits)
        return self.amplitude_sum(bits) * ctx.ldexp(ctx.one, 4 - bits)


def solve_closed_form(field: TruncatedField) -> ClosedFormTrajectory:
    """Termwise integration of the truncated field."""
    modes = []
    for mode in field.modes:
        if mode.lam == 0:
            raise DomainError(f"mode {mode.index} has a zero small divisor; cannot integrate")
        modes.append(TrajectoryMode(
            index=mode.index,
            p=mode.p,
            lam=mode.lam,
            amplitude=Fraction(mode.index, mode.p ** mode.index) / mode.lam,
        ))
    return ClosedFormTrajectory(field.r_K, tuple(modes), field.base)


def _x3(traj: ClosedFormTrajectory, t: Fraction, bits: int) -> RealHP:
    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    total = ctx.fsum(
        to_real(mode.amplitude, wp) * sin_turns(reduce_phase(mode.lam * t), wp)
        for mode in traj.modes
    )
    return round_to(total / (2 * ctx.pi), bits)


def eval_trajectory(traj: ClosedFormTrajectory, t: Rational, bits: int = DEFAULT_BITS) -> State:
    t = Fraction(t)
    return to_real(traj.r_K * t, bits), to_real(t, bits), _x3(traj, t, bits)


def x3_rate(traj: ClosedFormTrajectory, t: Rational, bits: int = DEFAULT_BITS) -> RealHP:
    """ẋ₃(t) = Σ aₘ cos(2πλₘt)"""
    t = Fraction(t)
    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    total = ctx.fsum(
        to_real(mode.drift_amplitude, wp) * cos_turns(reduce_phase(mode.lam * t), wp)
        for mode in traj.modes
    )
    return round_to(total, bits)


# ========== RK4 oracle ==========

@dataclass
class SampleSeries:
    """
    States sampled on a strictly increasing time grid.

    error_bound is the analytic global error of the method on [0, t_end].
    """
    times: List[Fraction]
    states: List[State]
    method: str
    step: Fraction
    bits: int
    r_K: Fraction
    error_bound: Optional[RealHP] = None

    def __len__(self) -> int:
        return len(self.times)

    def __iter__(self):
        return iter(zip(self.times, self.states))

    @property
    def final(self) -> Tuple[Fraction, State]:
        return self.times[-1], self.states[-1]


def rk4_error_bound(field: TruncatedField, t_end: Rational, step: Rational,
                    bits: int = DEFAULT_BITS) -> RealHP:
    """
    t_end·(step/2)⁴/180 · Σ aₘ(2π|λₘ|)⁴.

    Along a trajectory h₃ depends on t alone, so one classical RK4 step
    advances x₃ by Simpson's rule on a panel of width `step`.
    """
    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    rate = sum((mode.amplitude * mode.lam ** 4 for mode in field.modes), Fraction(0))
    rational = Fraction(t_end) * (Fraction(step) / 2) ** 4 / 180 * rate
    return round_to(to_real(rational, wp) * (2 * ctx.pi) ** 4, bits)


def integrate_ode(field: TruncatedField, t_end: Rational, step: Rational,
                  bits: int = 256) -> SampleSeries:
    """
    Fixed-step classical RK4 from x(0) = 0.

    Samples at 0, step, 2·step, ...; a final shorter step lands on t_end
    when step does not divide it.
    """
    t_end, step = Fraction(t_end), Fraction(step)
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    if step >= 1:
        raise DomainError(f"step {step} >= 1 is useless for validation")
    if t_end < 0:
        raise DomainError(f"t_end must be non-negative, got {t_end}")

    ctx = hp_context(bits)
    x = [ctx.zero, ctx.zero, ctx.zero]
    t = Fraction(0)
    times, states = [t], [tuple(x)]

    def rate(y):
        z = (to_fraction(y[0]), to_fraction(y[1]), 0)
        return eval_field(field, z, bits)

    logger.info("RK4: M=%d t_end=%s step=%s bits=%d", field.M, t_end, step, bits)

    while t < t_end:
        h = min(step, t_end - t)
        hr = to_real(h, bits)
        half = hr / 2

        k1 = rate(x)
        k2 = rate([x[i] + half * k1[i] for i in range(3)])
        k3 = rate([x[i] + half * k2[i] for i in range(3)])
        k4 = rate([x[i] + hr * k3[i] for i in range(3)])
        x = [x[i] + hr / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]) for i in range(3)]

        t += h
        times.append(t)
        states.append(tuple(x))

    logger.debug("RK4 finished after %d steps", len(times) - 1)
    return SampleSeries(
        times=times,
        states=states,
        method='rk4',
        step=step,
        bits=bits,
        r_K=field.r_K,
        error_bound=rk4_error_bound(field, t_end, step, bits),
    )


@dataclass
class ValidationReport:
    max_error: RealHP
    tol: RealHP
    worst_time: Fraction
    samples: int
    method: str = 'rk4'

    @property
    def passed(self) -> bool:
        return self.max_error <= self.tol


def cross_validate(reference: Union[ClosedFormTrajectory, SampleSeries],
                   series: SampleSeries, tol: Rational) -> ValidationReport:
    """
    max over samples of ‖reference - series‖∞, pass iff <= tol.

    Both sides must come from the same Liouville truncation; the mode count
    may differ (a missing mode shows up as discrepancy, not as an error).
    """
    if reference.r_K != series.r_K:
        raise ParameterMismatchError("reference and series use different truncations r_K")
    if len(series) == 0:
        raise DomainError("cannot validate an empty series")

    bits = series.bits
    ctx = hp_context(bits)

    if isinstance(reference, SampleSeries):
        if reference.times != series.times:
            raise ParameterMismatchError("series are sampled on different time grids")
        expected = reference.states
    else:
        expected = [eval_trajectory(reference, t, bits) for t in series.times]

    worst, worst_time = ctx.zero, series.times[0]
    for t, got, want in zip(series.times, series.states, expected):
        err = max(abs(ctx.mpf(g) - ctx.mpf(w)) for g, w in zip(got, want))
        if err > worst:
            worst, worst_time = err, t

    tol_real = to_real(tol, bits)
    report = ValidationReport(max_error=worst, tol=tol_real, worst_time=worst_time,
                              samples=len(series), method=series.method)
    logger.info("cross-validation: max error %s at t=%s (%s)",
                ctx.nstr(worst, 8), worst_time, 'pass' if report.passed else 'fail')
    return report
