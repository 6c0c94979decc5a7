"""Shared fixtures: the default construction (base 10, K = 5) at M = 1, 2, 3."""

import sys
from pathlib import Path

import pytest

# Add source to path
sys.path.insert(0, str(Path(__file__).parent.parent / 'src'))

from torus_rotation import LiouvilleSpec, build_field, solve_closed_form


@pytest.fixture(scope='session')
def spec():
    return LiouvilleSpec(base=10, K=5)


@pytest.fixture(scope='session')
def field3(spec):
    return build_field(spec, 3)


@pytest.fixture(scope='session')
def field2(field3):
    return field3.truncate(2)


@pytest.fixture(scope='session')
def field1(field3):
    return field3.truncate(1)


@pytest.fixture(scope='session')
def traj1(field1):
    return solve_closed_form(field1)


@pytest.fixture(scope='session')
def traj2(field2):
    return solve_closed_form(field2)


@pytest.fixture(scope='session')
def traj3(field3):
    return solve_closed_form(field3)
