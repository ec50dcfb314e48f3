import sys
from pathlib import Path

import pytest

HERE = Path(__file__).parent
sys.path.insert(0, str(HERE))  # makes ``oracles`` importable

FIXTURES = HERE / "fixtures"
JAVA = FIXTURES / "java"
PROJECTS = FIXTURES / "projects"


@pytest.fixture
def java_dir():
    return JAVA


@pytest.fixture
def projects_dir():
    return PROJECTS
