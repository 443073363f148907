"""
Shared fixtures and hypothesis profiles
"""

import os

import pytest
from hypothesis import HealthCheck, settings

from comical import create_app
from comical.models.box_operator import identity
from comical.models.presheaf import MarkedCubicalSet
from comical.services.cubeset_service import CubeSetService
from comical.services.io_service import ObjectIOService
from comical.services.simpset_service import SimpSetService

settings.register_profile('fast', max_examples=25, deadline=None)
settings.register_profile('ci', max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get('HYPOTHESIS_PROFILE', 'fast'))


@pytest.fixture
def app():
    return create_app('testing')


@pytest.fixture
def cubes():
    return CubeSetService()


@pytest.fixture
def simplicial():
    return SimpSetService(200_000)


@pytest.fixture
def io_service():
    return ObjectIOService(200_000)


@pytest.fixture
def spine():
    """Two composable edges 0 -> 1 -> 2 with no square filling them"""
    cells = {'0': 0, '1': 0, '2': 0, 'a': 1, 'b': 1}
    faces = {
        'a': {(1, 0): (identity(0), '0'), (1, 1): (identity(0), '1')},
        'b': {(1, 0): (identity(0), '1'), (1, 1): (identity(0), '2')},
    }
    return MarkedCubicalSet(cells, faces, name='spine').validate()


@pytest.fixture
def loop():
    """A single edge from a vertex to itself"""
    cells = {'v': 0, 'e': 1}
    faces = {'e': {(1, 0): (identity(0), 'v'), (1, 1): (identity(0), 'v')}}
    return MarkedCubicalSet(cells, faces, name='loop').validate()

