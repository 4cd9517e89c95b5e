import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mustafin import configuration


@pytest.fixture
def collinear_triple():
    """Three points on one tropical line; fully generic, six components."""
    return configuration(3, [(0, -1, -2), (0, -2, -4), (0, -3, -6)])


@pytest.fixture
def degenerate_pair():
    """Two points whose difference has a repeated coordinate; not generic."""
    return configuration(3, [(0, 0, 0), (0, 1, 1)])
