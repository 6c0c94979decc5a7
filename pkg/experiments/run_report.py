#!/usr/bin/env python3
"""
Torus Rotation Experiment

Reproduces the headline constants of the construction:
- resonant chain (10², 11), (10⁶, 110001), (10²⁴, 110001000000000000000001)
- RK4 oracle agreement and fourth-order convergence
- weak rotation ladder, resonance deviation ladder, correlation limits

Usage:
    python run_report.py [--M M] [--output results/report.json] [--quiet]
"""

import sys
import json
import argparse
from fractions import Fraction
from pathlib import Path

# Add source to path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from torus_rotation import (
    CorrelationKind, LiouvilleSpec, build_field, correlation, cross_validate,
    deviation_at_resonance, integrate_ode, solve_closed_form, verify_chain,
    weak_rotation_estimate,
)
from torus_rotation.export import chain_records, format_real


def run_experiment(M: int = 3, verbose: bool = True) -> dict:
    """
    Run every reproduction step.

    Returns metrics dict.
    """
    spec = LiouvilleSpec(base=10, K=M + 2)
    field = build_field(spec, M)
    traj = solve_closed_form(field)
    chain = verify_chain(field.modes, field.r_K, spec.truncation_error_bound())

    if verbose:
        print(f"Chain of {field.M} modes: {'verified' if chain.passed else 'FAILED'}")
        for mode in field.modes:
            print(f"  m={mode.index}: p={mode.p}, q={mode.q}")
        print()

    # Oracle on the two-mode field
    oracle_field = field.truncate(min(M, 2))
    oracle_traj = solve_closed_form(oracle_field)
    errors = []
    for step in (Fraction(1, 100), Fraction(1, 200)):
        series = integrate_ode(oracle_field, 100, step, 256)
        report = cross_validate(oracle_traj, series, Fraction(1, 10 ** 8))
        errors.append(report.max_error)
        if verbose:
            print(f"RK4 step {step}: max error {format_real(report.max_error, 6)} "
                  f"[{'PASS' if report.passed else 'FAIL'}]")
    ratio = errors[0] / errors[1]

    weak = [weak_rotation_estimate(oracle_traj, 10 ** e) for e in (6, 9, 12)]
    deviations = [deviation_at_resonance(traj, n) for n in range(1, M + 1)]
    correlations = [
        correlation(traj, n, T, CorrelationKind.SIN)
        for n, T in ((1, 10 ** 12), (2, 10 ** 20))
        if n <= M
    ]

    if verbose:
        print(f"Halving ratio: {format_real(ratio, 6)}")
        print()
        for estimate in weak:
            print(f"T={estimate.T}: |rho_3| <= {format_real(estimate.third_component_bound, 6)}")
        for report in deviations:
            print(f"x3(t_{report.n}) = {format_real(report.x3_at_tn, 10)}")
        for estimate in correlations:
            print(f"corr n={estimate.n} T={estimate.T}: {format_real(estimate.value, 10)}")

    return {
        'M': M,
        'chain': chain_records(field.modes),
        'chain_verified': chain.passed,
        'rk4_max_error': [format_real(e) for e in errors],
        'rk4_halving_ratio': format_real(ratio, 10),
        'weak_rotation': [e.to_record() for e in weak],
        'deviation': [r.to_record() for r in deviations],
        'correlation': [e.to_record() for e in correlations],
    }


def save_results(metrics: dict, output_path: Path):
    """Save results to JSON."""
    output_path.parent.mkdir(parents=True, exist_ok=True)

    with open(output_path, 'w') as f:
        json.dump(metrics, f, indent=2)
        f.write('\n')

    print(f"\nResults saved to: {output_path}")


def main():
    parser = argparse.ArgumentParser(description='Torus Rotation Experiment')
    parser.add_argument('--M', type=int, default=3,
                        help='Number of resonant modes')
    parser.add_argument('--output', type=str, default='results/report.json',
                        help='Output file for results')
    parser.add_argument('--quiet', action='store_true',
                        help='Suppress verbose output')

    args = parser.parse_args()

    print("=" * 60)
    print("TORUS ROTATION EXPERIMENT")
    print("Weak rotation vector, no strong rotation vector")
    print("=" * 60)
    print()

    metrics = run_experiment(M=args.M, verbose=not args.quiet)

    if args.output:
        save_results(metrics, Path(args.output))

    print()
    print("=" * 60)
    print("THE AVERAGE DRIFTS. THE DEVIATION DOES NOT STAY BOUNDED.")
    print("=" * 60)


if __name__ == '__main__':
    main()
