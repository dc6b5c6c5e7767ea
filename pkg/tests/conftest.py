import os

import pytest
from hypothesis import settings

from catalog import catalog_complex
from complexes.core import build_complex

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def three_components():
    return catalog_complex("three_components")


@pytest.fixture
def ring_with_pendants():
    return catalog_complex("ring_with_pendants")


@pytest.fixture
def strip_tree():
    return catalog_complex("strip_tree")


@pytest.fixture
def fan_tree():
    return catalog_complex("fan_tree")


@pytest.fixture
def vertex_linked_triangles():
    return catalog_complex("vertex_linked_triangles")


@pytest.fixture
def linked_strips():
    return catalog_complex("linked_strips")


@pytest.fixture
def single_facet():
    return build_complex([[1, 2, 3]])
