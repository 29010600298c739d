import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from chungfeller import parse_path  # noqa: E402

# properties enumerate whole classes per example; no per-example deadline
settings.register_profile("repo", deadline=None)
settings.load_profile("repo")

# (n, m) pairs small enough to enumerate in well under a second each
SMALL_GRID = [(n, m) for n in range(1, 5) for m in range(n + 1, n + 5)]

EXAMPLE_22 = "(1,1)(1,-2)(2,1)(1,1)(1,-1)(1,-1)(1,1)(1,1)(2,0)"
EXAMPLE_34 = "(1,1)(1,-2)(1,1)(2,1)"


@pytest.fixture
def example_22():
    return parse_path(EXAMPLE_22)


@pytest.fixture
def example_34():
    return parse_path(EXAMPLE_34)
