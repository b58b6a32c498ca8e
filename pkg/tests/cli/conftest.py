import os

import pytest
from click.testing import CliRunner


@pytest.fixture
def runner() -> CliRunner:
    """Provide a Click CLI test runner."""
    return CliRunner()


def get_file_path(file_name: str) -> str:
    """Absolute path of a file under tests/cli/mocks."""
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), "mocks", file_name)
