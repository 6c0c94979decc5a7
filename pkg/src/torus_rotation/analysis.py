"""
ANALYSIS

The weak / strong rotation dichotomy on the constructed flow.

Weak sense:   x(T)/T → (r, 1, 0), with the third component bounded by
              Σ Aₘ/T plus the field tail beyond M.
Strong sense: fails. At the resonance time tₙ = 1/(4|λₙ|) mode n sits exactly
              on a quarter turn and contributes its whole amplitude Aₙ, which
              exceeds n/(2π) because |pₙⁿλₙ| < 1.

Correlations T⁻¹∫₀ᵀ x₃(s)·trig(2πλₙs) ds are evaluated in closed form: the
integrand is a finite trigonometric polynomial, so every product-to-sum term
has an exact antiderivative. Nothing here is quadrature.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple
import logging

from .errors import DomainError
from .field import tail_bound
from .export import format_rational, format_real
from .flow import ClosedFormTrajectory, eval_trajectory
from .precision import (
    DEFAULT_BITS, GUARD_BITS, Rational, RealHP,
    cos_turns, hp_context, reduce_phase, round_to, rounding_allowance, sin_turns, to_real,
)

logger = logging.getLogger(__name__)


class CorrelationKind(str, Enum):
    SIN = 'sin'
    COS = 'cos'


def _positive_time(T: Rational) -> Fraction:
    T = Fraction(T)
    if T <= 0:
        raise DomainError(f"time horizon must be positive, got {T}")
    return T


def _tail(traj: ClosedFormTrajectory) -> Fraction:
    return tail_bound(traj.M, traj.base)


# ========== Weak rotation ==========

@dataclass(frozen=True)
class RotationEstimate:
    T: Fraction
    rho_hat: Tuple[RealHP, RealHP, RealHP]
    third_component_bound: RealHP
    rho_exact: Tuple[Fraction, Fraction]

    @property
    def passed(self) -> bool:
        return abs(self.rho_hat[2]) <= self.third_component_bound

    def to_record(self) -> Dict:
        return {
            'T': format_rational(self.T),
            'rho_1': format_rational(self.rho_exact[0]),
            'rho_2': format_rational(self.rho_exact[1]),
            'rho_3': format_real(self.rho_hat[2]),
            'bound': format_real(self.third_component_bound),
            'pass': self.passed,
        }


def weak_rotation_estimate(traj: ClosedFormTrajectory, T: Rational,
                           bits: int = DEFAULT_BITS) -> RotationEstimate:
    """
    x(T)/T with its certified third-component bound.

    The bound is Σ|Aₘ|/T plus tail_bound(M): the field beyond M contributes
    at most tail·T to x₃(T), hence at most tail to the ratio.
    """
    T = _positive_time(T)
    x1, x2, x3 = eval_trajectory(traj, T, bits)
    ctx = hp_context(bits)
    T_real = to_real(T, bits)
    rho3 = x3 / T_real
    bound = traj.amplitude_sum(bits) / T_real + to_real(_tail(traj), bits)
    bound += rounding_allowance(traj.rounding_bound(bits), bits)
    # Components 1 and 2 are exactly r_K and 1.
    rho_exact = (traj.r_K, Fraction(1))
    return RotationEstimate(
        T=T,
        rho_hat=(to_real(rho_exact[0], bits), ctx.one, rho3),
        third_component_bound=bound,
        rho_exact=rho_exact,
    )


def weak_rotation_ladder(traj: ClosedFormTrajectory, horizons: Sequence[Rational],
                         bits: int = DEFAULT_BITS) -> List[RotationEstimate]:
    return [weak_rotation_estimate(traj, T, bits) for T in horizons]


# ========== Resonance and deviation ==========

def resonance_time(mode) -> Fraction:
    """
    tₙ = 1/(4|λₙ|), the quarter period of mode n.

    For λₙ > 0 this is exactly 1/(4λₙ). Accepts ResonantMode or TrajectoryMode.
    """
    if mode.lam == 0:
        raise DomainError(f"mode {mode.index} has λ = 0; no resonance time")
    return 1 / (4 * abs(mode.lam))


@dataclass(frozen=True)
class DeviationReport:
    n: int
    t_n: Fraction
    amplitude: RealHP
    x3_at_tn: RealHP
    certified_lower_bound: RealHP
    exceeds_n_over_4pi: bool

    @property
    def passed(self) -> bool:
        ctx = self.x3_at_tn.context
        return (self.exceeds_n_over_4pi
                and self.certified_lower_bound > self.n / (4 * ctx.pi)
                and self.x3_at_tn >= self.certified_lower_bound)

    def to_record(self) -> Dict:
        return {
            'n': self.n,
            't_n': format_rational(self.t_n),
            'A_n': format_real(self.amplitude),
            'x3_at_tn': format_real(self.x3_at_tn),
            'certified_lower_bound': format_real(self.certified_lower_bound),
            'exceeds_n_over_4pi': self.exceeds_n_over_4pi,
            'pass': self.passed,
        }


def deviation_at_resonance(traj: ClosedFormTrajectory, n: int,
                           bits: int = DEFAULT_BITS) -> DeviationReport:
    """
    x₃ at tₙ and a certified lower bound for it.

    lower = |Aₙ| - Σ_{m<n}|Aₘ| - Σ_{n<m≤M} aₘ·tₙ - tail·tₙ
    Modes above n are still in their linear regime at tₙ (|sin x| <= |x|);
    modes below n are bounded by their amplitude.
    """
    mode = traj.mode(n)
    t_n = resonance_time(mode)
    _, _, x3 = eval_trajectory(traj, t_n, bits)

    lower_rational = abs(mode.amplitude)           # ·1/(2π)
    below = sum((abs(m.amplitude) for m in traj.modes[:n - 1]), Fraction(0))
    above = sum((abs(m.drift_amplitude) for m in traj.modes[n:]), Fraction(0))

    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    tau = 2 * ctx.pi
    lower = (to_real(lower_rational - below, wp) / tau
             - to_real((above + _tail(traj)) * t_n, wp))
    lower -= rounding_allowance(traj.rounding_bound(bits), bits)

    amplitude = traj.amplitude(n, bits)
    report = DeviationReport(
        n=n,
        t_n=t_n,
        amplitude=amplitude,
        x3_at_tn=x3,
        certified_lower_bound=round_to(lower, bits),
        exceeds_n_over_4pi=bool(x3 > n / (2 * tau)),
    )
    logger.debug("deviation n=%d: x3=%s lower=%s", n,
                 ctx.nstr(x3, 12), ctx.nstr(report.certified_lower_bound, 12))
    return report


def deviation_ladder(traj: ClosedFormTrajectory, bits: int = DEFAULT_BITS) -> List[DeviationReport]:
    return [deviation_at_resonance(traj, n, bits) for n in range(1, traj.M + 1)]


@dataclass(frozen=True)
class ProfilePoint:
    t: Fraction
    x3: RealHP
    running_sup: RealHP


def deviation_profile(traj: ClosedFormTrajectory, times: Sequence[Rational],
                      bits: int = DEFAULT_BITS) -> List[ProfilePoint]:
    """Running sup of |x₃| over a strictly increasing grid."""
    grid = [Fraction(t) for t in times]
    for a, b in zip(grid, grid[1:]):
        if not a < b:
            raise DomainError(f"time grid must be strictly increasing ({a} then {b})")

    ctx = hp_context(bits)
    sup = ctx.zero
    profile = []
    for t in grid:
        _, _, x3 = eval_trajectory(traj, t, bits)
        sup = max(sup, abs(x3))
        profile.append(ProfilePoint(t, x3, sup))
    return profile


# ========== Correlation functionals ==========

@dataclass(frozen=True)
class CorrelationEstimate:
    """
    value  T⁻¹∫₀ᵀ x₃(s)·trig(2πλₙs) ds, exact closed form
    limit  Aₙ/2 = n/(4π pₙⁿλₙ) for sin, 0 for cos
    error_bound  certified |value - limit| for the M-mode trajectory
    tail_contribution  certified effect of the modes beyond M
    """
    n: int
    T: Fraction
    kind: CorrelationKind
    value: RealHP
    limit: RealHP
    error_bound: RealHP
    tail_contribution: RealHP
    limit_exceeds_n_over_4pi: bool

    @property
    def within_bound(self) -> bool:
        return abs(self.value - self.limit) <= self.error_bound

    @property
    def passed(self) -> bool:
        if self.kind is CorrelationKind.SIN:
            return self.within_bound and self.limit_exceeds_n_over_4pi
        return self.within_bound

    def to_record(self) -> Dict:
        return {
            'n': self.n,
            'T': format_rational(self.T),
            'kind': self.kind.value,
            'value': format_real(self.value),
            'limit': format_real(self.limit),
            'error_bound': format_real(self.error_bound),
            'tail_contribution': format_real(self.tail_contribution),
            'pass': self.passed,
        }


def _check_pairing(traj: ClosedFormTrajectory, n: int):
    target = abs(traj.mode(n).lam)
    for other in traj.modes:
        if other.index != n and abs(other.lam) == target:
            raise DomainError(f"modes {n} and {other.index} share |λ|; correlation undefined")


def correlation(traj: ClosedFormTrajectory, n: int, T: Rational,
                kind: CorrelationKind = CorrelationKind.SIN,
                bits: int = DEFAULT_BITS) -> CorrelationEstimate:
    """
    Exact closed form of T⁻¹∫₀ᵀ x₃(s)·trig(2πλₙs) ds.

    With Rₘ = 2πAₘ, δ = λₘ - λₙ and σ = λₘ + λₙ:

      sin, m = n   Rₙ/(4π) - Rₙ sin(4πλₙT) / (16π²λₙT)
      sin, m ≠ n   Rₘ/(8π²T) · [sin(2πδT)/δ - sin(2πσT)/σ]
      cos, m = n   Rₙ (1 - cos(4πλₙT)) / (16π²λₙT)
      cos, m ≠ n   Rₘ/(8π²T) · [(1 - cos(2πσT))/σ + (1 - cos(2πδT))/δ]

    Cross terms are bounded by min(analytic 1/T bound, aₘT/2); the second
    follows from |Aₘ sin(2πλₘs)| <= aₘ·s.
    """
    kind = CorrelationKind(kind)
    T = _positive_time(T)
    mode_n = traj.mode(n)
    _check_pairing(traj, n)

    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    pi2 = ctx.pi ** 2
    R_n, lam_n = mode_n.amplitude, mode_n.lam

    def real(x: Fraction) -> RealHP:
        return to_real(x, wp)

    def trig(phase: Fraction, want_sin: bool) -> RealHP:
        turn = reduce_phase(phase)
        return sin_turns(turn, wp) if want_sin else cos_turns(turn, wp)

    terms = []
    bound_terms = []

    if kind is CorrelationKind.SIN:
        limit = real(R_n) / (4 * ctx.pi)
        terms.append(limit - real(R_n / (lam_n * T)) * trig(2 * lam_n * T, True) / (16 * pi2))
        bound_terms.append(real(abs(R_n / (lam_n * T))) / (16 * pi2))
    else:
        limit = ctx.zero
        terms.append(real(R_n / (lam_n * T)) * (1 - trig(2 * lam_n * T, False)) / (16 * pi2))
        bound_terms.append(real(abs(R_n / (lam_n * T))) / (8 * pi2))

    for mode in traj.modes:
        if mode.index == n:
            continue
        R_m = mode.amplitude
        delta, sigma = mode.lam - lam_n, mode.lam + lam_n
        if kind is CorrelationKind.SIN:
            value = (real(R_m / (delta * T)) * trig(delta * T, True)
                     - real(R_m / (sigma * T)) * trig(sigma * T, True)) / (8 * pi2)
            analytic = real(abs(R_m / T) * (1 / abs(delta) + 1 / abs(sigma))) / (8 * pi2)
        else:
            value = (real(R_m / (sigma * T)) * (1 - trig(sigma * T, False))
                     + real(R_m / (delta * T)) * (1 - trig(delta * T, False))) / (8 * pi2)
            analytic = real(abs(R_m / T) * (1 / abs(delta) + 1 / abs(sigma))) / (4 * pi2)
        linear = real(abs(mode.drift_amplitude) * T / 2)
        terms.append(value)
        bound_terms.append(min(analytic, linear))

    value = ctx.fsum(terms)
    error_bound = ctx.fsum(bound_terms)
    scale = abs(limit) + ctx.fsum(abs(term) for term in terms)
    error_bound += rounding_allowance(scale, bits)

    estimate = CorrelationEstimate(
        n=n,
        T=T,
        kind=kind,
        value=round_to(value, bits),
        limit=round_to(limit, bits),
        error_bound=round_to(error_bound, bits),
        tail_contribution=to_real(_tail(traj) * T / 2, bits),
        # |Rₙ| > n  <=>  |pₙⁿλₙ| < 1  <=>  |limit| > n/(4π)
        limit_exceeds_n_over_4pi=abs(R_n) > n,
    )
    logger.debug("correlation n=%d T=%s %s: value=%s bound=%s", n, T, kind.value,
                 ctx.nstr(estimate.value, 12), ctx.nstr(estimate.error_bound, 6))
    return estimate


def derivative_correlation(traj: ClosedFormTrajectory, n: int, T: Rational,
                           kind: CorrelationKind = CorrelationKind.COS,
                           bits: int = DEFAULT_BITS) -> RealHP:
    """
    Exact T⁻¹∫₀ᵀ ẋ₃(s)·trig(2πλₙs) ds, with ẋ₃ = Σ aₘ cos(2πλₘs).

    Tends to aₙ/2 for cos and to 0 for sin.
    """
    kind = CorrelationKind(kind)
    T = _positive_time(T)
    mode_n = traj.mode(n)
    _check_pairing(traj, n)

    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    tau = 2 * ctx.pi
    lam_n = mode_n.lam
    terms = []

    def antiderivative(mu: Fraction) -> RealHP:
        """T⁻¹∫₀ᵀ cos(2πμs) ds  or  T⁻¹∫₀ᵀ sin(2πμs) ds, matching `kind`."""
        turn = reduce_phase(mu * T)
        if kind is CorrelationKind.COS:
            return sin_turns(turn, wp) / (tau * to_real(mu * T, wp))
        return (1 - cos_turns(turn, wp)) / (tau * to_real(mu * T, wp))

    for mode in traj.modes:
        a = to_real(mode.drift_amplitude, wp)
        sigma = mode.lam + lam_n
        if mode.index == n:
            # cos·cos = (1 + cos 2θ)/2,  cos·sin = sin 2θ / 2
            head = ctx.one if kind is CorrelationKind.COS else ctx.zero
            terms.append(a / 2 * (head + antiderivative(sigma)))
            continue
        delta = lam_n - mode.lam
        terms.append(a / 2 * (antiderivative(sigma) + antiderivative(delta)))
    return round_to(ctx.fsum(terms), bits)


@dataclass(frozen=True)
class IntegrationByPartsCheck:
    """
    Two pairings of the integration-by-parts identity for the cos-correlation.

    correct  C = x₃(T)·sin(2πλₙT)/(2πλₙT) - D_sin/(2πλₙ)
    printed  C = D_cos/(2πλₙ)   (the boundary term dropped, ẋ₃ paired with cos)

    Residuals are |C - right-hand side|. The correct pairing vanishes up to
    rounding; the printed one converges to Aₙ/2 instead of 0.
    """
    n: int
    T: Fraction
    cos_correlation: RealHP
    correct_residual: RealHP
    printed_residual: RealHP

    @property
    def discrepancy_flagged(self) -> bool:
        return self.printed_residual > self.correct_residual

    def to_record(self) -> Dict:
        return {
            'n': self.n,
            'T': format_rational(self.T),
            'cos_correlation': format_real(self.cos_correlation),
            'correct_pairing_residual': format_real(self.correct_residual),
            'printed_pairing_residual': format_real(self.printed_residual),
            'discrepancy_flagged': self.discrepancy_flagged,
        }


def integration_by_parts_check(traj: ClosedFormTrajectory, n: int, T: Rational,
                               bits: int = DEFAULT_BITS) -> IntegrationByPartsCheck:
    T = _positive_time(T)
    mode = traj.mode(n)
    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    scale = 2 * ctx.pi * to_real(mode.lam, wp)

    C = correlation(traj, n, T, CorrelationKind.COS, wp).value
    D_sin = derivative_correlation(traj, n, T, CorrelationKind.SIN, wp)
    D_cos = derivative_correlation(traj, n, T, CorrelationKind.COS, wp)
    _, _, x3 = eval_trajectory(traj, T, wp)
    boundary = x3 * sin_turns(reduce_phase(mode.lam * T), wp) / (scale * to_real(T, wp))

    return IntegrationByPartsCheck(
        n=n,
        T=T,
        cos_correlation=round_to(C, bits),
        correct_residual=round_to(abs(C - (boundary - D_sin / scale)), bits),
        printed_residual=round_to(abs(C - D_cos / scale), bits),
    )
