"""
TORUS LAB

Command-line entry point.

    python -m torus_rotation <command> [flags]

Commands:
    sequence        Build and verify the resonant chain
    field-check     Smoothness majorants and periodicity of h
    simulate        RK4 oracle against the closed-form trajectory
    deviation       Resonance-time deviation ladder and profile
    correlation     Correlation ladder over the T ladder
    report          Every verification above, one aggregated report
    series          CSV series (trajectory | deviation | field) on a grid

Exit codes:
    0   every verification passed
    1   a verification failed (the report names it)
    2   usage, configuration or construction error

Data files are deterministic; run metadata goes to <command>.meta.json.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple
import argparse
import logging
import sys

from .analysis import (
    CorrelationKind, correlation, deviation_ladder, deviation_profile,
    integration_by_parts_check, resonance_time, weak_rotation_ladder,
)
from .errors import ConfigError, TorusLabError
from .export import (
    chain_records, format_rational, format_real, trajectory_descriptor,
    write_csv, write_json, write_run_metadata,
)
from .field import (
    TruncatedField, build_field, eval_field, smoothness_ladder, tail_bound,
)
from .flow import (
    ClosedFormTrajectory, cross_validate, eval_trajectory, integrate_ode, solve_closed_form,
)
from .liouville import LiouvilleSpec, build_resonant_sequence, precision_certificate, verify_chain
from .precision import GUARD_BITS, PrecisionPolicy, hp_context, warm_constants

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SERIES_KINDS = ('trajectory', 'deviation', 'field')
REPORT_SECTIONS = (
    'precision', 'chain', 'smoothness', 'cross_validation',
    'weak_rotation', 'deviation', 'correlation',
)
DEFAULT_GRIDS = {
    'trajectory': 'lin:0:100:1',
    'deviation': 'geom:1:10000:41',
    'field': 'lin:0:1:1/100',
}
GRID_DIGITS = 12
MAX_GRID_POINTS = 1_000_000


# ========== Configuration ==========

def parse_rational(text: str, name: str = 'value') -> Fraction:
    """'num/den', integer, decimal or scientific literal, exactly."""
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{name}: cannot parse {text!r} as a rational")


def parse_int(text: str, name: str) -> int:
    try:
        return int(str(text).strip())
    except ValueError:
        raise ConfigError(f"{name}: expected an integer, got {text!r}")


def parse_ladder(text: str) -> Tuple[Fraction, ...]:
    parts = [part for part in str(text).split(',') if part.strip()]
    if not parts:
        raise ConfigError("T: empty ladder")
    return tuple(parse_rational(part, 'T') for part in parts)


@dataclass
class RunConfig:
    """
    Everything a command needs. Sources, lowest priority first:
    defaults, the --config file, command-line flags.
    """
    base: int = 10
    K: Optional[int] = None
    M: int = 3
    bits: int = 512
    T: Tuple[Fraction, ...] = (Fraction(10 ** 6), Fraction(10 ** 12), Fraction(10 ** 20))
    k_max: int = 5
    out: Path = Path('results')
    format: str = 'json'
    t_end: Fraction = Fraction(100)
    step: Fraction = Fraction(1, 100)
    tol: Fraction = Fraction(1, 10 ** 8)
    ode_bits: int = 256
    what: str = 'trajectory'
    grid: Optional[str] = None

    def validate(self) -> 'RunConfig':
        if self.K is None:
            self.K = self.M + 2
        if self.M < 1:
            raise ConfigError("empty chain requested (M must be at least 1)")
        if self.K < self.M + 1:
            raise ConfigError(
                f"precondition violation: M={self.M} needs truncation order K >= {self.M + 1}, "
                f"got K={self.K}"
            )
        if self.base < 2:
            raise ConfigError(f"base must be at least 2, got {self.base}")
        if self.k_max < 0:
            raise ConfigError(f"k_max must be non-negative, got {self.k_max}")
        if self.format not in ('json', 'csv'):
            raise ConfigError(f"format must be json or csv, got {self.format!r}")
        if self.what not in SERIES_KINDS:
            raise ConfigError(f"what must be one of {', '.join(SERIES_KINDS)}, got {self.what!r}")
        if not self.T or any(T <= 0 for T in self.T):
            raise ConfigError("T ladder must be a non-empty list of positive times")
        if self.tol <= 0:
            raise ConfigError(f"tol must be positive, got {self.tol}")
        if self.ode_bits < 1:
            raise ConfigError(f"ode_bits must be positive, got {self.ode_bits}")
        try:
            PrecisionPolicy(bits=self.bits, K=self.K, M_max=self.M)
        except TorusLabError as e:
            raise ConfigError(str(e))
        self.out = Path(self.out)
        return self

    @property
    def spec(self) -> LiouvilleSpec:
        return LiouvilleSpec(base=self.base, K=self.K)

    def to_record(self) -> Dict[str, Any]:
        return {
            'base': self.base,
            'K': self.K,
            'M': self.M,
            'bits': self.bits,
            'T': [format_rational(T) for T in self.T],
            'k_max': self.k_max,
        }


# key (lower case, '-' → '_') → (field name, parser)
_CONFIG_KEYS: Dict[str, Tuple[str, Callable[[str], Any]]] = {
    'base': ('base', lambda v: parse_int(v, 'base')),
    'k': ('K', lambda v: parse_int(v, 'K')),
    'm': ('M', lambda v: parse_int(v, 'M')),
    'bits': ('bits', lambda v: parse_int(v, 'bits')),
    't': ('T', parse_ladder),
    'k_max': ('k_max', lambda v: parse_int(v, 'k_max')),
    'out': ('out', lambda v: Path(v.strip())),
    'format': ('format', lambda v: v.strip().lower()),
    't_end': ('t_end', lambda v: parse_rational(v, 't_end')),
    'step': ('step', lambda v: parse_rational(v, 'step')),
    'tol': ('tol', lambda v: parse_rational(v, 'tol')),
    'ode_bits': ('ode_bits', lambda v: parse_int(v, 'ode_bits')),
    'what': ('what', lambda v: v.strip()),
    'grid': ('grid', lambda v: v.strip()),
}


def parse_config_text(text: str) -> Dict[str, Any]:
    """Flat key=value lines; '#' starts a comment."""
    values = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigError(f"config line {number}: expected key=value, got {raw.strip()!r}")
        key, value = line.split('=', 1)
        key = key.strip().replace('-', '_')
        entry = _CONFIG_KEYS.get(key.lower())
        if entry is None:
            raise ConfigError(f"config line {number}: unknown key {key!r}")
        name, parser = entry
        values[name] = parser(value)
    return values


def load_config_file(path: Path) -> Dict[str, Any]:
    try:
        text = Path(path).read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}")
    return parse_config_text(text)


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values: Dict[str, Any] = {}
    if getattr(args, 'config', None):
        values.update(load_config_file(args.config))
    for f in fields(RunConfig):
        flag = getattr(args, f.name, None)
        if flag is not None:
            values[f.name] = _CONFIG_KEYS[f.name.lower()][1](str(flag))
    return RunConfig(**values).validate()


# ========== Grids ==========

def parse_grid(text: str) -> List[Fraction]:
    """
    lin:start:stop:step     start, start+step, ... <= stop
    geom:start:stop:count   count points, geometric, interior rounded to
                            12 significant digits, end points exact
    """
    parts = str(text).strip().split(':')
    if len(parts) != 4 or parts[0] not in ('lin', 'geom'):
        raise ConfigError(f"malformed grid {text!r} (use lin:start:stop:step or geom:start:stop:count)")
    kind = parts[0]
    start = parse_rational(parts[1], 'grid start')
    stop = parse_rational(parts[2], 'grid stop')

    if kind == 'lin':
        step = parse_rational(parts[3], 'grid step')
        if step <= 0:
            raise ConfigError(f"grid step must be positive, got {step}")
        if stop < start:
            raise ConfigError(f"empty grid {text!r}")
        count = int((stop - start) / step) + 1
        if count > MAX_GRID_POINTS:
            raise ConfigError(f"grid {text!r} has {count} points (limit {MAX_GRID_POINTS})")
        return [start + i * step for i in range(count)]

    count = parse_int(parts[3], 'grid count')
    if count < 1 or start <= 0 or stop < start:
        raise ConfigError(f"empty grid {text!r}")
    if count > MAX_GRID_POINTS:
        raise ConfigError(f"grid {text!r} has {count} points (limit {MAX_GRID_POINTS})")
    if count == 1:
        return [start]

    ctx = hp_context(128)
    ratio = ctx.mpf(stop.numerator) * start.denominator / (ctx.mpf(stop.denominator) * start.numerator)
    grid = [start]
    for i in range(1, count - 1):
        point = ctx.mpf(start.numerator) / start.denominator * ctx.power(ratio, ctx.mpf(i) / (count - 1))
        grid.append(Fraction(ctx.nstr(point, GRID_DIGITS)))
    grid.append(stop)

    for a, b in zip(grid, grid[1:]):
        if not a < b:
            raise ConfigError(f"grid {text!r} is not strictly increasing after rounding")
    return grid


# ========== Laboratory ==========

def _section(name: str, passed: bool, **content) -> Dict[str, Any]:
    return {'section': name, 'pass': bool(passed), **content}


class Laboratory:
    """
    Runs commands against one validated RunConfig.

    The chain, field and trajectory are built lazily, once.
    """

    def __init__(self, config: RunConfig, argv: Sequence[str] = ()):
        self.config = config
        self.argv = list(argv)
        self.out = Path(config.out)

        self._modes = None
        self._field: Optional[TruncatedField] = None
        self._trajectory: Optional[ClosedFormTrajectory] = None

        # Command registry
        self.commands: Dict[str, Callable[[], int]] = {
            'sequence': self.cmd_sequence,
            'field-check': self.cmd_field_check,
            'simulate': self.cmd_simulate,
            'deviation': self.cmd_deviation,
            'correlation': self.cmd_correlation,
            'report': self.cmd_report,
            'series': self.cmd_series,
        }

    # ---------- lazy construction ----------

    @property
    def modes(self):
        if self._modes is None:
            self._modes = build_resonant_sequence(self.config.spec, self.config.M)
        return self._modes

    @property
    def field(self) -> TruncatedField:
        if self._field is None:
            self._field = build_field(self.config.spec, self.config.M)
        return self._field

    @property
    def trajectory(self) -> ClosedFormTrajectory:
        if self._trajectory is None:
            self._trajectory = solve_closed_form(self.field)
        return self._trajectory

    def run(self, command: str) -> int:
        handler = self.commands.get(command)
        if handler is None:
            raise ConfigError(f"unknown command {command!r}")
        code = handler()
        write_run_metadata(self.out, command, self.argv)
        return code

    def _emit(self, name: str, payload: Dict[str, Any]):
        """payload as <name>.json, or flattened to <name>.csv."""
        if self.config.format == 'json':
            write_json(self.out / f"{name}.json", payload)
        else:
            write_csv(self.out / f"{name}.csv", ['section', 'key', 'value'], _table_rows(name, payload))

    # ---------- sections ----------

    def section_precision(self) -> Dict[str, Any]:
        cert = precision_certificate(self.modes, self.config.spec.truncation(), self.config.bits)
        return _section('precision', cert.passed, bits=cert.bits,
                        required_bits=cert.required_bits, worst_mode=cert.worst_mode)

    def section_chain(self) -> Dict[str, Any]:
        spec = self.config.spec
        r_K = spec.truncation()
        report = verify_chain(self.modes, r_K, spec.truncation_error_bound())
        cert = report.truncation_certificate
        return _section(
            'chain', report.passed,
            base=spec.base,
            K=spec.K,
            M=len(self.modes),
            r_K=format_rational(r_K),
            truncation_error_bound=format_rational(spec.truncation_error_bound()),
            modes=chain_records(self.modes),
            checks=len(report.checks),
            failures=[f"m={c.index}: {c.name} {c.detail}".strip() for c in report.failures],
            truncation_certificate=cert.passed,
        )

    def section_smoothness(self) -> Dict[str, Any]:
        ladder = smoothness_ladder(self.field, self.config.k_max, self.config.bits)
        ctx = hp_context(self.config.bits)
        rows = [{
            'k': bound.k,
            'rational_part': format_rational(bound.rational_part),
            'majorant': format_real(bound.majorant),
            'comparison': format_real(bound.comparison),
            'dominated': bound.dominated,
        } for bound in ladder]
        passed = all(bound.dominated and ctx.isfinite(bound.majorant) for bound in ladder)
        return _section('smoothness', passed, bounds=rows,
                        tail_bound=format_rational(tail_bound(self.field.M, self.field.base)))

    def _run_oracle(self):
        cfg = self.config
        series = integrate_ode(self.field, cfg.t_end, cfg.step, cfg.ode_bits)
        return series, cross_validate(self.trajectory, series, cfg.tol)

    def section_cross_validation(self, series=None, validation=None) -> Dict[str, Any]:
        if validation is None:
            series, validation = self._run_oracle()
        return _section(
            'cross_validation', validation.passed,
            method=validation.method,
            t_end=format_rational(self.config.t_end),
            step=format_rational(self.config.step),
            ode_bits=self.config.ode_bits,
            samples=validation.samples,
            max_error=format_real(validation.max_error),
            worst_time=format_rational(validation.worst_time),
            tol=format_rational(self.config.tol),
            rk4_error_bound=format_real(series.error_bound),
        )

    def section_weak_rotation(self) -> Dict[str, Any]:
        estimates = weak_rotation_ladder(self.trajectory, self.config.T, self.config.bits)
        bounds = [e.third_component_bound for e in estimates]
        decreasing = all(a > b for a, b in zip(bounds, bounds[1:]))
        passed = decreasing and all(e.passed for e in estimates)
        return _section('weak_rotation', passed, bound_decreasing=decreasing,
                        estimates=[e.to_record() for e in estimates])

    def section_deviation(self) -> Dict[str, Any]:
        reports = deviation_ladder(self.trajectory, self.config.bits)
        growth = all(b.x3_at_tn >= 10 ** 4 * a.x3_at_tn for a, b in zip(reports, reports[1:]))
        passed = growth and all(r.passed for r in reports)
        return _section('deviation', passed, ladder_growth=growth,
                        ladder=[r.to_record() for r in reports])

    def section_correlation(self) -> Dict[str, Any]:
        traj, bits = self.trajectory, self.config.bits
        estimates = [
            correlation(traj, n, T, kind, bits)
            for T in self.config.T
            for n in range(1, traj.M + 1)
            for kind in CorrelationKind
        ]
        T_max = max(self.config.T)
        checks = [integration_by_parts_check(traj, n, T_max, bits) for n in range(1, traj.M + 1)]
        return _section(
            'correlation', all(e.passed for e in estimates),
            estimates=[e.to_record() for e in estimates],
            integration_by_parts=[c.to_record() for c in checks],
        )

    # ---------- commands ----------

    def cmd_sequence(self) -> int:
        section = self.section_chain()
        self._emit('chain', section)
        self._say(f"chain of {section['M']} modes: {'PASS' if section['pass'] else 'FAIL'}")
        for failure in section['failures']:
            self._say(f"  {failure}")
        return EXIT_OK if section['pass'] else EXIT_FAILED

    def cmd_field_check(self) -> int:
        smoothness = self.section_smoothness()
        periodic = _periodicity_checks(self.field, self.config.bits)
        passed = smoothness['pass'] and all(c['pass'] for c in periodic)
        payload = _section('field_check', passed, smoothness=smoothness, periodicity=periodic)
        self._emit('field_check', payload)
        self._say(f"field check (k <= {self.config.k_max}): {'PASS' if passed else 'FAIL'}")
        return EXIT_OK if passed else EXIT_FAILED

    def cmd_simulate(self) -> int:
        series, validation = self._run_oracle()
        section = self.section_cross_validation(series, validation)
        section['trajectory'] = trajectory_descriptor(self.trajectory)
        self._emit('simulate', section)
        write_csv(self.out / 'rk4_series.csv', ['t', 'x1', 'x2', 'x3'],
                  ([t] + list(state) for t, state in series))
        self._say(f"RK4 vs closed form: max error {section['max_error']} "
                  f"({'PASS' if validation.passed else 'FAIL'})")
        return EXIT_OK if validation.passed else EXIT_FAILED

    def cmd_deviation(self) -> int:
        section = self.section_deviation()
        section['trajectory'] = trajectory_descriptor(self.trajectory)
        self._emit('deviation', section)

        traj = self.trajectory
        profile = deviation_profile(traj, _profile_grid(traj), self.config.bits)
        write_csv(self.out / 'deviation_profile.csv', ['t', 'x3', 'running_sup'],
                  ([p.t, p.x3, p.running_sup] for p in profile))
        for row in section['ladder']:
            self._say(f"  n={row['n']}: x3(t_n) = {row['x3_at_tn']}")
        return EXIT_OK if section['pass'] else EXIT_FAILED

    def cmd_correlation(self) -> int:
        section = self.section_correlation()
        self._emit('correlation', section)
        self._say(f"correlation ladder: {'PASS' if section['pass'] else 'FAIL'}")
        return EXIT_OK if section['pass'] else EXIT_FAILED

    def cmd_report(self) -> int:
        # Shared objects and the π memo are filled before the pool starts.
        _ = self.modes, self.trajectory
        warm_constants(report_warm_bits(self.config))

        builders = {
            'precision': self.section_precision,
            'chain': self.section_chain,
            'smoothness': self.section_smoothness,
            'cross_validation': self.section_cross_validation,
            'weak_rotation': self.section_weak_rotation,
            'deviation': self.section_deviation,
            'correlation': self.section_correlation,
        }
        with ThreadPoolExecutor(max_workers=len(builders)) as pool:
            futures = {name: pool.submit(builders[name]) for name in REPORT_SECTIONS}
            sections = [futures[name].result() for name in REPORT_SECTIONS]

        failing = [s['section'] for s in sections if not s['pass']]
        report = {
            'config': self.config.to_record(),
            'pass': not failing,
            'first_failure': failing[0] if failing else None,
            'sections': sections,
        }
        self._emit('report', report)

        for s in sections:
            self._say(f"  {s['section']:<18} {'PASS' if s['pass'] else 'FAIL'}")
        if failing:
            self._say(f"FAILED: {failing[0]}")
            return EXIT_FAILED
        return EXIT_OK

    def cmd_series(self) -> int:
        what = self.config.what
        grid_text = DEFAULT_GRIDS[what] if self.config.grid is None else self.config.grid
        grid = parse_grid(grid_text)
        traj, bits = self.trajectory, self.config.bits

        if what == 'trajectory':
            rows = ([t, *eval_trajectory(traj, t, bits)] for t in grid)
            header = ['t', 'x1', 'x2', 'x3']
        elif what == 'deviation':
            profile = deviation_profile(traj, grid, bits)
            rows = ([p.t, p.x3, p.running_sup] for p in profile)
            header = ['t', 'x3', 'running_sup']
        else:
            rows = ([t, *eval_field(self.field, (traj.r_K * t, t, 0), bits)] for t in grid)
            header = ['t', 'h1', 'h2', 'h3']

        path = write_csv(self.out / f"{what}_series.csv", header, rows)
        self._say(f"{len(grid)} rows -> {path}")
        return EXIT_OK

    def _say(self, text: str):
        print(text)


def report_warm_bits(config: RunConfig) -> int:
    """
    Deepest precision a report reaches.

    The integration-by-parts check nests three guard levels above `bits`;
    the RK4 oracle nests two above `ode_bits`.
    """
    return max(config.bits, config.ode_bits) + 4 * GUARD_BITS


def _flatten(node: Any, path: str = '') -> List[Tuple[str, Any]]:
    """Nested dicts and lists as (dotted key, value) pairs."""
    if isinstance(node, dict):
        items = [(f"{path}.{key}" if path else str(key), value) for key, value in node.items()]
    elif isinstance(node, list):
        items = [(f"{path}.{index}", value) for index, value in enumerate(node)]
    else:
        return [(path, '' if node is None else node)]
    rows = []
    for key, value in items:
        rows.extend(_flatten(value, key))
    return rows


def _table_rows(name: str, payload: Dict[str, Any]) -> List[Tuple[str, str, Any]]:
    """(section, key, value) rows; a report contributes one block per section."""
    head = {key: value for key, value in payload.items() if key != 'sections'}
    rows = [(payload.get('section', name), key, value)
            for key, value in _flatten(head) if key != 'section']
    for section in payload.get('sections', ()):
        rows.extend((section['section'], key, value)
                    for key, value in _flatten(section) if key != 'section')
    return rows


def _periodicity_checks(field: TruncatedField, bits: int) -> List[Dict[str, Any]]:
    """h(z + e₁) = h(z) = h(z + e₂), compared bit for bit."""
    points = [
        (Fraction(0), Fraction(0), Fraction(0)),
        (Fraction(1, 3), Fraction(2, 7), Fraction(0)),
        (Fraction(-5, 11), Fraction(13, 17), Fraction(1, 2)),
    ]
    checks = []
    for z in points:
        h = eval_field(field, z, bits)
        shifted = [eval_field(field, (z[0] + 1, z[1], z[2]), bits),
                   eval_field(field, (z[0], z[1] + 1, z[2]), bits)]
        checks.append({
            'z': [format_rational(c) for c in z],
            'h3': format_real(h[2]),
            'pass': all(s == h for s in shifted),
        })
    return checks


def _profile_grid(traj: ClosedFormTrajectory) -> List[Fraction]:
    """Decades 10^j up to the last resonance time, plus every resonance time."""
    times = {resonance_time(mode) for mode in traj.modes}
    last = max(times)
    j = 0
    while Fraction(10) ** j < last:
        times.add(Fraction(10) ** j)
        j += 1
    return sorted(times)


# ========== Entry point ==========

def configure_logging(verbose: bool = False):
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    root = logging.getLogger('torus_rotation')
    root.handlers[:] = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', type=Path, help='key=value config file')
    common.add_argument('--base', help='Liouville base (default 10)')
    common.add_argument('--K', help='Liouville truncation order (default M+2)')
    common.add_argument('--M', help='number of resonant modes (default 3)')
    common.add_argument('--bits', help='mantissa bits of reported values (default 512)')
    common.add_argument('--T', help='comma separated T ladder (default 1e6,1e12,1e20)')
    common.add_argument('--k-max', dest='k_max', help='highest derivative order (default 5)')
    common.add_argument('--out', help='output directory (default results)')
    common.add_argument('--format', help='json or csv (default json)')
    common.add_argument('--t-end', dest='t_end', help='RK4 horizon (default 100)')
    common.add_argument('--step', help='RK4 step (default 1/100)')
    common.add_argument('--tol', help='cross-validation tolerance (default 1e-8)')
    common.add_argument('--ode-bits', dest='ode_bits', help='RK4 precision (default 256)')
    common.add_argument('--verbose', '-v', action='store_true', help='debug logging on stderr')

    parser = argparse.ArgumentParser(
        prog='torus_rotation',
        description='Liouville torus flow: rotation vector verification laboratory',
    )
    commands = parser.add_subparsers(dest='command', required=True)
    for name in ('sequence', 'field-check', 'simulate', 'deviation', 'correlation', 'report'):
        commands.add_parser(name, parents=[common])
    series = commands.add_parser('series', parents=[common])
    series.add_argument('--what', help='trajectory | deviation | field')
    series.add_argument('--grid', help='lin:start:stop:step or geom:start:stop:count')
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)

    try:
        config = config_from_args(args)
        return Laboratory(config, argv).run(args.command)
    except TorusLabError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
