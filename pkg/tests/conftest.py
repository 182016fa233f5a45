"""Shared fixtures: the named fans used throughout the test suite."""

import json

import pytest

from tests import corpus


@pytest.fixture
def tetra_fan():
    return corpus.tetra_fan()


@pytest.fixture
def orthant_fan():
    return corpus.orthant_fan(2)


@pytest.fixture
def half_plane_fan():
    return corpus.half_plane_fan()


@pytest.fixture
def opposite_quadrants_fan():
    return corpus.opposite_quadrants_fan()


@pytest.fixture
def projective_plane_fan():
    return corpus.projective_plane_fan()


@pytest.fixture
def a1_fan():
    return corpus.a1_fan(2)


@pytest.fixture
def torus_fan():
    return corpus.torus_fan(2)


@pytest.fixture
def write_json(tmp_path):
    """Write a JSON document under tmp_path and return its path as a string."""

    def _write(name, data):
        path = tmp_path / name
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    return _write
