# tests/conftest.py

from pathlib import Path

import pytest

from cli.parser import parse_algebra

DATA = Path(__file__).resolve().parent.parent / "data"

LIE_FIXTURES = ["sl2", "gl2", "heis3", "abelian3", "sl2_semidirect_c2", "sl2xsl2", "solvable2"]


def fixture_path(name: str) -> Path:
    return DATA / f"{name}.json"


def load(name: str):
    return parse_algebra(fixture_path(name))


@pytest.fixture(scope="session")
def sl2():
    return load("sl2").algebra


@pytest.fixture(scope="session")
def gl2_file():
    return load("gl2")


@pytest.fixture(scope="session")
def semidirect_file():
    return load("sl2_semidirect_c2")


@pytest.fixture(scope="session")
def heis3():
    return load("heis3").algebra


@pytest.fixture(scope="session")
def abelian3():
    return load("abelian3").algebra


@pytest.fixture(scope="session")
def load_fixture():
    return load


@pytest.fixture(scope="session")
def data_dir():
    return DATA
