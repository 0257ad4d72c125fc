"""Shared fixtures"""
import pytest

from hexforce.config import Settings
from hexforce.hexsystem import (
    build_auxiliary_system,
    build_cells,
    build_named,
    build_pyrene_chain,
    named_system,
    to_graph,
)
from hexforce.models import Graph


@pytest.fixture
def settings() -> Settings:
    return Settings()


@pytest.fixture
def h1():
    return build_pyrene_chain(1)


@pytest.fixture
def h2():
    return build_pyrene_chain(2)


@pytest.fixture
def h3():
    return build_pyrene_chain(3)


@pytest.fixture
def g1():
    return build_auxiliary_system(1)


@pytest.fixture
def benzene():
    return to_graph(build_cells([(0, 0)]))


@pytest.fixture
def phenanthrene():
    return named_system("phenanthrene")


@pytest.fixture
def diphenyl() -> Graph:
    return build_named("diphenyl")


@pytest.fixture
def path3() -> Graph:
    """Three vertices in a row: no perfect matching"""
    return Graph(coords=((0, 0), (1, 0), (2, 0)), edges=((0, 1), (1, 2)), colors=(0, 1, 0), name="path3")
