"""
EXPORT

Every artifact the laboratory writes goes through here.

Value encoding:
  integer        decimal string ("1000000000000000000000000")
  BigRational    "num/den", always, even for integers ("11/1")
  RealHP         decimal string, 30 significant digits
  bool           JSON true/false; "true"/"false" in CSV

Files:
  *.json         indent 2, keys in insertion order, trailing newline
  *.csv          header row, '\n' line endings
  *.meta.json    run metadata (timestamp, argv, versions), the only
                 non-deterministic file of a run
"""

from datetime import datetime, timezone
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, List, Mapping, Sequence
import csv
import json
import logging
import platform

import mpmath

from .precision import to_real

logger = logging.getLogger(__name__)

REAL_DIGITS = 30


def format_rational(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def format_real(x, digits: int = REAL_DIGITS) -> str:
    return mpmath.nstr(x, digits)


def format_cell(value: Any) -> str:
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if isinstance(value, Fraction):
        return format_rational(value)
    if hasattr(value, '_mpf_'):
        return format_real(value)
    return str(value)


def chain_records(modes) -> List[Dict[str, Any]]:
    """One record per ResonantMode; big integers as strings."""
    records = []
    for mode in modes:
        records.append({
            'm': mode.index,
            'p': str(mode.p),
            'q': str(mode.q),
            'lambda': format_rational(mode.lam),
            'lambda_approx': format_real(_approx(mode.lam)),
            'amplitude_approx': format_real(_approx(mode.amplitude)),
        })
    return records


def _approx(x: Fraction):
    return to_real(x, 128)


def trajectory_descriptor(traj) -> Dict[str, Any]:
    """{M, modes: [{m, lambda, A_times_2pi}]} of a ClosedFormTrajectory."""
    return {
        'M': traj.M,
        'r_K': format_rational(traj.r_K),
        'modes': [
            {
                'm': mode.index,
                'lambda': format_rational(mode.lam),
                'A_times_2pi': format_rational(mode.amplitude),
            }
            for mode in traj.modes
        ],
    }


# ========== Files ==========

def write_json(path: Path, payload: Mapping[str, Any]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(payload, f, indent=2)
        f.write('\n')
    logger.debug("wrote %s", path)
    return path


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(value) for value in row])
    logger.debug("wrote %s", path)
    return path


def write_run_metadata(out_dir: Path, command: str, argv: Sequence[str]) -> Path:
    """Sidecar `<command>.meta.json`; data files never carry these fields."""
    from . import __version__
    return write_json(Path(out_dir) / f"{command}.meta.json", {
        'command': command,
        'argv': list(argv),
        'timestamp_utc': datetime.now(timezone.utc).isoformat(timespec='seconds'),
        'torus_rotation': __version__,
        'mpmath': mpmath.__version__,
        'python': platform.python_version(),
    })
