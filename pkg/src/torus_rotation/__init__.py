"""
TORUS ROTATION

A smooth flow on the 3-torus with a rotation vector in the weak sense and
none in the strong sense, built and verified in exact arithmetic.

    ẋ = ( r, 1, Σₘ m·pₘ^(-m) cos(2π(x₁pₘ - x₂qₘ)) )

with r a Liouville number and (pₘ, qₘ) a resonant chain of its convergents.

Components:
- precision: exact rationals, exact phase reduction, turn-based sin/cos
- liouville: truncation r_K, resonant chain, chain verification
- field: the truncated vector field, smoothness majorants, tail bound
- flow: closed-form trajectory, RK4 oracle, cross-validation
- analysis: weak rotation, resonance deviation, correlation functionals
- cli: Laboratory (sequence, field-check, simulate, deviation, correlation,
  report, series)
"""

__version__ = '0.1.0'

from .errors import (
    TorusLabError, DomainError, ConstructionError, ParameterMismatchError, ConfigError,
)
from .precision import (
    BigRational, RealHP, PrecisionPolicy, DEFAULT_BITS,
    hp_context, to_real, to_fraction, reduce_phase, sin_turns, cos_turns,
)
from .liouville import (
    LiouvilleSpec, ResonantMode, ChainReport, liouville_truncation,
    build_resonant_sequence, verify_chain, precision_certificate,
)
from .field import (
    TruncatedField, SmoothnessBound, build_field, eval_field, field_gradient,
    smoothness_bound, tail_bound,
)
from .flow import (
    ClosedFormTrajectory, SampleSeries, ValidationReport,
    solve_closed_form, eval_trajectory, x3_rate, integrate_ode, cross_validate,
)
from .analysis import (
    CorrelationKind, CorrelationEstimate, DeviationReport, RotationEstimate,
    weak_rotation_estimate, resonance_time, deviation_at_resonance, deviation_profile,
    correlation, derivative_correlation, integration_by_parts_check,
)
from .cli import RunConfig, Laboratory, main

__all__ = [
    'TorusLabError',
    'DomainError',
    'ConstructionError',
    'ParameterMismatchError',
    'ConfigError',
    'BigRational',
    'RealHP',
    'PrecisionPolicy',
    'DEFAULT_BITS',
    'hp_context',
    'to_real',
    'to_fraction',
    'reduce_phase',
    'sin_turns',
    'cos_turns',
    'LiouvilleSpec',
    'ResonantMode',
    'ChainReport',
    'liouville_truncation',
    'build_resonant_sequence',
    'verify_chain',
    'precision_certificate',
    'TruncatedField',
    'SmoothnessBound',
    'build_field',
    'eval_field',
    'field_gradient',
    'smoothness_bound',
    'tail_bound',
    'ClosedFormTrajectory',
    'SampleSeries',
    'ValidationReport',
    'solve_closed_form',
    'eval_trajectory',
    'x3_rate',
    'integrate_ode',
    'cross_validate',
    'CorrelationKind',
    'CorrelationEstimate',
    'DeviationReport',
    'RotationEstimate',
    'weak_rotation_estimate',
    'resonance_time',
    'deviation_at_resonance',
    'deviation_profile',
    'correlation',
    'derivative_correlation',
    'integration_by_parts_check',
    'RunConfig',
    'Laboratory',
    'main',
]
