from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from saphir.sample import seed_sample
from saphir.store import Repository, open_repository


@pytest.fixture
def repo(tmp_path) -> Repository:
    return open_repository(str(tmp_path / "repo"))


@pytest.fixture(scope="session")
def seeded_repo(tmp_path_factory) -> Repository:
    repo = open_repository(str(tmp_path_factory.mktemp("seeded") / "repo"))
    seed_sample(repo)
    return repo
