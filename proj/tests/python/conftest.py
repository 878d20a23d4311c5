import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def data_dir():
    return pathlib.Path(os.environ.get("SYMREF_TEST_DATA", ROOT / "tests" / "data"))


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("SYMREF_CLI")
    if not path:
        pytest.skip("SYMREF_CLI is not set")
    return path
