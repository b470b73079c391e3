import os

import pytest

TEST_DIR = os.path.dirname(os.path.abspath(__file__))


@pytest.fixture(autouse=True)
def _run_from_test_dir(monkeypatch):
    # Test data is referenced relative to this directory (e.g. "files/single.json").
    monkeypatch.chdir(TEST_DIR)
