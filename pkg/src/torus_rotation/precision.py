"""
PRECISION

Exact rationals, exact phase reduction and turn-based trigonometry.

The small divisors λₘ of the construction reach 10⁻⁹⁶ at the default
settings, while the times at which they matter reach 10⁹⁶. Floating point
never sees those products: every phase is reduced modulo 1 as an exact
`Fraction` first, and only the residual in [0, 1) is handed to mpmath.

Values:
  BigRational  fractions.Fraction
  RealHP       mpmath mpf from hp_context(bits)
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union
import logging
import math

from mpmath import mpf
from mpmath.ctx_mp import MPContext
from mpmath.libmp import from_rational, round_nearest, to_rational

from .errors import DomainError

logger = logging.getLogger(__name__)

BigRational = Fraction
RealHP = mpf
Rational = Union[Fraction, int]

DEFAULT_BITS = 512
GUARD_BITS = 32


@lru_cache(maxsize=None)
def hp_context(bits: int) -> MPContext:
    """
    mpmath context fixed at `bits` mantissa bits.

    Contexts are cached and never mutated after creation. mpmath still
    memoizes constants such as π in module globals; see warm_constants.
    """
    if bits < 1:
        raise DomainError(f"precision must be positive, got {bits} bits")
    ctx = MPContext()
    ctx.prec = bits
    return ctx


def warm_constants(bits: int) -> RealHP:
    """
    Fill mpmath's π memo at `bits`.

    The memo is a module global that grows on demand. Once it holds `bits`,
    every request at or below `bits` only reads it, so threads working at
    those precisions never write it.
    """
    ctx = hp_context(bits)
    return +ctx.pi


def to_real(x: Rational, bits: int = DEFAULT_BITS) -> RealHP:
    """Correctly rounded conversion of an exact rational to RealHP."""
    x = Fraction(x)
    ctx = hp_context(bits)
    return ctx.make_mpf(from_rational(x.numerator, x.denominator, bits, round_nearest))


def to_fraction(x: RealHP) -> Fraction:
    """Exact value of a finite RealHP as a Fraction."""
    if not x.context.isfinite(x):
        raise DomainError(f"cannot convert non-finite value {x} to a rational")
    p, q = to_rational(x._mpf_)
    # mpz under the gmpy backend; math.floor needs int-backed Fractions
    return Fraction(int(p), int(q))


def round_to(x: RealHP, bits: int) -> RealHP:
    """Round a RealHP (of any precision) to `bits`."""
    return hp_context(bits).mpf(x)


def reduce_phase(x: Rational) -> Fraction:
    """
    Fractional part of x, exactly.

    Returns y in [0, 1) with x - y an integer.
    """
    x = Fraction(x)
    return x - math.floor(x)


def _check_phase(phase: Fraction):
    if not 0 <= phase < 1:
        raise DomainError(f"phase must lie in [0, 1), got {phase}")


def _kernel(u: Fraction, bits: int, want_sin: bool) -> RealHP:
    """sin or cos of 2πu for u in [0, 1/4), at bits + GUARD_BITS."""
    wp = bits + GUARD_BITS
    ctx = hp_context(wp)
    if u == 0:
        return ctx.zero if want_sin else ctx.one
    x = to_real(2 * u, wp)
    return ctx.sinpi(x) if want_sin else ctx.cospi(x)


def _turns(phase: Rational, bits: int, want_sin: bool) -> RealHP:
    phase = Fraction(phase)
    _check_phase(phase)

    # Quadrant symmetry: only [0, 1/4) reaches the kernel.
    quadrant = math.floor(4 * phase)
    u = phase - Fraction(quadrant, 4)

    if want_sin:
        # sin(2π(k/4 + u)) = s, c, -s, -c
        use_sin, negate = [(True, False), (False, False), (True, True), (False, True)][quadrant]
    else:
        # cos(2π(k/4 + u)) = c, -s, -c, s
        use_sin, negate = [(False, False), (True, True), (False, True), (True, False)][quadrant]

    value = _kernel(u, bits, use_sin)
    if negate:
        value = -value
    return round_to(value, bits)


def sin_turns(phase: Rational, bits: int = DEFAULT_BITS) -> RealHP:
    """sin(2π·phase) for an exact phase in [0, 1)."""
    return _turns(phase, bits, want_sin=True)


def cos_turns(phase: Rational, bits: int = DEFAULT_BITS) -> RealHP:
    """cos(2π·phase) for an exact phase in [0, 1)."""
    return _turns(phase, bits, want_sin=False)


def rounding_allowance(scale: RealHP, bits: int) -> RealHP:
    """Slack 2^(8-bits)·max(1, |scale|) added to every certified bound."""
    ctx = hp_context(bits)
    return ctx.ldexp(ctx.one, 8 - bits) * max(ctx.one, abs(scale))


def bits_to_resolve(small: Fraction, scale: Fraction) -> int:
    """
    Upper bound on ⌈log₂(|scale| / |small|)⌉.

    Number of mantissa bits below |scale| at which |small| still shows up.
    """
    if small == 0:
        raise DomainError("cannot resolve an exact zero")
    ratio = abs(Fraction(scale)) / abs(Fraction(small))
    if ratio <= 1:
        return 0
    return ratio.numerator.bit_length() - ratio.denominator.bit_length() + 1


@dataclass(frozen=True)
class PrecisionPolicy:
    """
    Working precision and truncation orders.

    bits   mantissa bits of every RealHP result
    K      Liouville truncation order (default M_max + 2)
    M_max  highest mode index the run will build
    """
    bits: int = DEFAULT_BITS
    K: Optional[int] = None
    M_max: int = 3

    def __post_init__(self):
        if self.K is None:
            object.__setattr__(self, 'K', self.M_max + 2)
        if self.bits < 1:
            raise DomainError(f"bits must be positive, got {self.bits}")
        if self.M_max < 0:
            raise DomainError(f"M_max must be non-negative, got {self.M_max}")
        if self.K < self.M_max + 1:
            raise DomainError(
                f"truncation order K={self.K} must be at least M_max+1={self.M_max + 1}"
            )

    @property
    def working_bits(self) -> int:
        return self.bits + GUARD_BITS
