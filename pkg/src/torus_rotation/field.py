"""
FIELD

The vector field h on 𝕋³, truncated at M modes:

    h(z) = ( r_K, 1, Σ_{m≤M} aₘ cos(2π(z₁pₘ - z₂qₘ)) ),   aₘ = m·pₘ^(-m)

Points are exact rationals in the universal cover ℝ³; the torus projection is
implicit in the exact phase reduction. The modes beyond M are represented only
by `tail_bound`.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import List, Sequence, Tuple
import logging

from .errors import ConstructionError, DomainError
from .liouville import LiouvilleSpec, ResonantMode, build_resonant_sequence, verify_chain
from .precision import (
    DEFAULT_BITS, GUARD_BITS, Rational, RealHP,
    cos_turns, hp_context, reduce_phase, round_to, sin_turns, to_real,
)

logger = logging.getLogger(__name__)

Point = Tuple[Rational, Rational, Rational]


@dataclass(frozen=True)
class TruncatedField:
    r_K: Fraction
    modes: Tuple[ResonantMode, ...]
    base: int = 10

    @property
    def M(self) -> int:
        return len(self.modes)

    def truncate(self, M: int) -> 'TruncatedField':
        """The same field restricted to its first M modes."""
        if not 0 <= M <= self.M:
            raise DomainError(f"cannot truncate a {self.M}-mode field to {M} modes")
        return TruncatedField(self.r_K, self.modes[:M], self.base)

    def amplitude_sum(self) -> Fraction:
        """Σ aₘ, the sup bound of the third component."""
        return sum((mode.amplitude for mode in self.modes), Fraction(0))

    def phase(self, mode: ResonantMode, z1: Rational, z2: Rational) -> Fraction:
        return reduce_phase(Fraction(z1) * mode.p - Fraction(z2) * mode.q)


def build_field(spec: LiouvilleSpec, M: int) -> TruncatedField:
    """Chain construction + exact verification, wrapped as a field."""
    r_K = spec.truncation()
    if M == 0:
        return TruncatedField(r_K, (), spec.base)
    modes = build_resonant_sequence(spec, M)
    report = verify_chain(modes, r_K, spec.truncation_error_bound())
    if not report.passed:
        raise ConstructionError(f"resonant chain failed verification:\n{report.summary()}")
    return TruncatedField(r_K, tuple(modes), spec.base)


def eval_field(field: TruncatedField, z: Point, bits: int = DEFAULT_BITS) -> Tuple[RealHP, RealHP, RealHP]:
    """h(z). Independent of z₃; 1-periodic in z₁ and z₂ bit for bit."""
    z1, z2, _ = z
    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    third = ctx.fsum(
        to_real(mode.amplitude, wp) * cos_turns(field.phase(mode, z1, z2), wp)
        for mode in field.modes
    )
    return to_real(field.r_K, bits), hp_context(bits).one, round_to(third, bits)


def field_gradient(field: TruncatedField, z: Point, bits: int = DEFAULT_BITS) -> Tuple[RealHP, RealHP]:
    """(∂h₃/∂z₁, ∂h₃/∂z₂), the series differentiated termwise."""
    z1, z2, _ = z
    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    tau = 2 * ctx.pi
    d1, d2 = [], []
    for mode in field.modes:
        s = sin_turns(field.phase(mode, z1, z2), wp)
        d1.append(-to_real(mode.amplitude * mode.p, wp) * s)
        d2.append(to_real(mode.amplitude * mode.q, wp) * s)
    return round_to(tau * ctx.fsum(d1), bits), round_to(tau * ctx.fsum(d2), bits)


# ========== Regularity ==========

@dataclass(frozen=True)
class SmoothnessBound:
    """
    Order-k majorants of the truncated third component.

    rational_part  Σ_{m≤M} m·max(pₘ,qₘ)^k·pₘ^(-m), so majorant = (2π)^k·rational_part
    comparison     2^k(r_K+1)^k·Σ_{k≤m≤M} m·2^(-m)
    dominated      every term with m >= k sits below its comparison term
    """
    k: int
    rational_part: Fraction
    majorant: RealHP
    comparison_rational: Fraction
    comparison: RealHP
    dominated: bool


def smoothness_bound(field: TruncatedField, k: int, bits: int = DEFAULT_BITS) -> SmoothnessBound:
    if k < 0:
        raise DomainError(f"derivative order must be non-negative, got {k}")

    rational = Fraction(0)
    comparison = Fraction(0)
    dominated = True
    scale = (2 * (abs(field.r_K) + 1)) ** k

    for mode in field.modes:
        m = mode.index
        term = m * Fraction(max(mode.p, mode.q)) ** k * Fraction(1, mode.p ** m)
        rational += term
        if m >= k:
            reference = scale * Fraction(m, 2 ** m)
            comparison += reference
            dominated = dominated and term <= reference

    ctx = hp_context(bits + GUARD_BITS)
    majorant = (2 * ctx.pi) ** k * to_real(rational, bits + GUARD_BITS)
    return SmoothnessBound(
        k=k,
        rational_part=rational,
        majorant=round_to(majorant, bits),
        comparison_rational=comparison,
        comparison=to_real(comparison, bits),
        dominated=dominated,
    )


def smoothness_ladder(field: TruncatedField, k_max: int, bits: int = DEFAULT_BITS) -> List[SmoothnessBound]:
    return [smoothness_bound(field, k, bits) for k in range(k_max + 1)]


def tail_bound(M: int, base: int = 10) -> Fraction:
    """
    Exact bound on Σ_{m>M} m·base^(-m(m+1)!), the field amplitudes beyond M.

    Certified only for chains with pₘ = base^((m+1)!), the family the greedy
    construction produces at base 10. Other bases can start lower (base 2
    picks p₁ = 2^(1!)); check the chain before relying on this bound there.
    Successive terms shrink by more than half, so the tail is at most twice
    its first term (M+1)·base^(-(M+1)(M+2)!).
    """
    if M < 0:
        raise DomainError(f"mode count must be non-negative, got {M}")
    first = M + 1
    return Fraction(2 * first, base ** (first * factorial(first + 1)))


def field_samples(field: TruncatedField, points: Sequence[Point],
                  bits: int = DEFAULT_BITS) -> List[Tuple[Point, Tuple[RealHP, RealHP, RealHP]]]:
    return [(z, eval_field(field, z, bits)) for z in points]
