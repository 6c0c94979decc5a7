"""
LIOUVILLE

The Liouville truncation r_K and the resonant convergent chain.

The irrational rotation number is the classical constant

    L = Σ_{k≥1} base^(-k!)

of which we only ever hold the exact rational truncation r_K (first K terms).
Every chain inequality is checked on r_K, and a truncation certificate shows
that the same strict inequalities hold for L itself.

Chain condition, for every mode m:

    0 < |r pₘ - qₘ| < pₘ^(-m) < |r pₘ₋₁ - qₘ₋₁|      (nesting from m = 2)
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, floor
from typing import Iterator, List, Optional, Sequence
import logging

from .errors import ConstructionError
from .precision import DEFAULT_BITS, bits_to_resolve

logger = logging.getLogger(__name__)

# Guard bits the precision certificate keeps below the smallest divisor.
RESOLUTION_GUARD_BITS = 16


@dataclass(frozen=True)
class LiouvilleSpec:
    """The constant Σ base^(-k!) truncated after K terms."""
    base: int = 10
    K: int = 5

    def __post_init__(self):
        if self.base < 2:
            raise ConstructionError(f"base must be at least 2, got {self.base}")
        if self.K < 1:
            raise ConstructionError(f"truncation order K must be at least 1, got {self.K}")

    def exponent(self, k: int) -> int:
        return factorial(k)

    def truncation(self) -> Fraction:
        return liouville_truncation(self)

    def truncation_error_bound(self) -> Fraction:
        """Exact bound 2·base^(-(K+1)!) on |L - r_K|."""
        return Fraction(2, self.base ** self.exponent(self.K + 1))

    def candidates(self) -> Iterator[int]:
        """Denominators base^(j!) for j = 1..K, increasing."""
        for j in range(1, self.K + 1):
            yield self.base ** self.exponent(j)


def liouville_truncation(spec: LiouvilleSpec) -> Fraction:
    """r_K = Σ_{k=1}^{K} base^(-k!), exact."""
    return sum(
        (Fraction(1, spec.base ** spec.exponent(k)) for k in range(1, spec.K + 1)),
        Fraction(0),
    )


@dataclass(frozen=True)
class ResonantMode:
    """
    One link (m, pₘ, qₘ) of the chain.

    lam        λₘ = r_K·pₘ - qₘ, exact
    amplitude  aₘ = m·pₘ^(-m), the coefficient of mode m in the field
    """
    index: int
    p: int
    q: int
    lam: Fraction
    amplitude: Fraction

    @classmethod
    def from_convergent(cls, index: int, p: int, q: int, r_K: Fraction) -> 'ResonantMode':
        return cls(
            index=index,
            p=p,
            q=q,
            lam=r_K * p - q,
            amplitude=Fraction(index, p ** index),
        )

    @property
    def threshold(self) -> Fraction:
        """pₘ^(-m)"""
        return Fraction(1, self.p ** self.index)

    def __repr__(self) -> str:
        return f"ResonantMode(m={self.index}, p={self.p}, q={self.q}, λ≈{float(self.lam):.3e})"


def _nearest_integer(x: Fraction) -> int:
    return floor(x + Fraction(1, 2))


def build_resonant_sequence(spec: LiouvilleSpec, M: int) -> List[ResonantMode]:
    """
    Greedy chain of M modes.

    For each m the smallest candidate p = base^(j!) wins for which
    q = nearest integer to r_K·p satisfies 0 < |λ| < p^(-m) and, from m = 2
    on, p^(-m) < |λₘ₋₁|.
    """
    if M < 1:
        raise ConstructionError("empty chain requested (M must be at least 1)")
    if M > spec.K - 1:
        raise ConstructionError(
            f"precondition violation: M={M} needs truncation order K >= {M + 1}, got K={spec.K}"
        )

    r_K = liouville_truncation(spec)
    modes: List[ResonantMode] = []

    for m in range(1, M + 1):
        previous = modes[-1] if modes else None
        chosen = None
        for p in spec.candidates():
            mode = ResonantMode.from_convergent(m, p, _nearest_integer(r_K * p), r_K)
            if mode.q < 1 or not 0 < abs(mode.lam) < mode.threshold:
                continue
            if previous is not None and not mode.threshold < abs(previous.lam):
                continue
            chosen = mode
            break

        if chosen is None:
            raise ConstructionError(
                f"no candidate p <= {spec.base}^({spec.K}!) satisfies the chain "
                f"inequalities for mode m={m}; increase K"
            )
        logger.debug("mode %d: p=%s q=%s", m, chosen.p, chosen.q)
        modes.append(chosen)

    return modes


# ========== Verification ==========

@dataclass(frozen=True)
class LinkCheck:
    """One exact comparison of the chain."""
    name: str
    index: int
    passed: bool
    detail: str = ''


@dataclass(frozen=True)
class TruncationCertificate:
    """pₘ·|L - r_K| <= pₘ·error_bound < |λₘ|/2 for every mode."""
    error_bound: Fraction
    margins: List[bool]

    @property
    def passed(self) -> bool:
        return all(self.margins)


@dataclass
class ChainReport:
    modes: List[ResonantMode]
    checks: List[LinkCheck] = field(default_factory=list)
    truncation_certificate: Optional[TruncationCertificate] = None

    @property
    def passed(self) -> bool:
        if not all(c.passed for c in self.checks):
            return False
        return self.truncation_certificate is None or self.truncation_certificate.passed

    @property
    def failures(self) -> List[LinkCheck]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        lines = [f"chain of {len(self.modes)} modes: {status} ({len(self.checks)} checks)"]
        for check in self.failures:
            lines.append(f"  m={check.index}: {check.name} violated {check.detail}")
        return '\n'.join(lines)


def verify_chain(modes: Sequence[ResonantMode], r_K: Fraction,
                 truncation_error: Optional[Fraction] = None) -> ChainReport:
    """
    Re-run every chain comparison exactly.

    Never raises on a violated inequality; the report carries the verdict.
    With `truncation_error` (a bound on |L - r_K|) the truncation certificate
    is checked as well.
    """
    if not modes:
        raise ConstructionError("cannot verify an empty chain")

    report = ChainReport(modes=list(modes))
    checks = report.checks

    def check(name: str, index: int, ok: bool, detail: str = ''):
        checks.append(LinkCheck(name, index, bool(ok), '' if ok else detail))

    for position, mode in enumerate(modes):
        m = mode.index
        check('index', m, m == position + 1, f"(found at position {position + 1})")
        check('p >= 2', m, mode.p >= 2, f"(p={mode.p})")
        check('q >= 1', m, mode.q >= 1, f"(q={mode.q})")
        check('lambda consistent', m, mode.lam == r_K * mode.p - mode.q,
              "(λ differs from r_K·p - q)")
        check('amplitude consistent', m, mode.amplitude == Fraction(m, mode.p ** m),
              "(a differs from m·p^-m)")
        check('0 < |lambda|', m, mode.lam != 0, "(λ = 0)")
        check('|lambda| < p^-m', m, abs(mode.lam) < mode.threshold,
              f"(|λ|≈{float(abs(mode.lam)):.3e})")
        if position > 0:
            previous = modes[position - 1]
            check('p^-m < |lambda_prev|', m, mode.threshold < abs(previous.lam),
                  f"(p^-m≈{float(mode.threshold):.3e}, |λ_prev|≈{float(abs(previous.lam)):.3e})")

    magnitudes = [abs(mode.lam) for mode in modes]
    distinct = len(set(magnitudes)) == len(magnitudes)
    check('|lambda| pairwise distinct', 0, distinct, "(repeated |λ|)")

    if truncation_error is not None:
        margins = [mode.p * truncation_error < abs(mode.lam) / 2 for mode in modes]
        report.truncation_certificate = TruncationCertificate(truncation_error, margins)

    logger.info("chain verification: %s", 'pass' if report.passed else 'fail')
    return report


# ========== Precision certificate ==========

@dataclass(frozen=True)
class PrecisionCertificate:
    """Does a `bits` mantissa resolve every λₘ against |r_K·pₘ|?"""
    bits: int
    required_bits: int
    worst_mode: int

    @property
    def passed(self) -> bool:
        return self.bits >= self.required_bits


def precision_certificate(modes: Sequence[ResonantMode], r_K: Fraction,
                          bits: int = DEFAULT_BITS) -> PrecisionCertificate:
    required, worst = 0, 0
    for mode in modes:
        need = bits_to_resolve(mode.lam, r_K * mode.p) + RESOLUTION_GUARD_BITS
        if need > required:
            required, worst = need, mode.index
    return PrecisionCertificate(bits=bits, required_bits=required, worst_mode=worst)
