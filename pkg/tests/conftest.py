import pathlib

import pytest

from landau.catalog import parse_catalog

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


@pytest.fixture(scope="session")
def cat12_path():
    return DATA / "groups_upto_12.catalog"


@pytest.fixture(scope="session")
def cat56_path():
    return DATA / "groups_upto_56.catalog"


@pytest.fixture(scope="session")
def cat12(cat12_path):
    return parse_catalog(cat12_path)


@pytest.fixture(scope="session")
def cat56(cat56_path):
    return parse_catalog(cat56_path)
