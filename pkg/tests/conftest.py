"""Pytest configuration and fixtures."""
import sys
from pathlib import Path

import pytest

# Add project root to path for imports
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from reslat.models import Orientation  # noqa: E402
from reslat.services import construct  # noqa: E402


@pytest.fixture
def boolean2():
    """The 2-element Boolean algebra."""
    return construct.godel_chain(2)


@pytest.fixture
def godel3():
    """The 3-element Heyting chain 0 < m < 1."""
    return construct.godel_chain(3)


@pytest.fixture
def mz2():
    """M_{Z_2}: ⊥ < {1, a} < ⊤ with a² = 1."""
    return construct.make_mg([2])


@pytest.fixture
def cyclic22():
    """Compact URL on the cyclic monoid with a⁴ = a², up orientation."""
    return construct.make_cyclic_url(2, 2, Orientation.UP)


@pytest.fixture
def heyting_square():
    """Heyting algebra on ⊥ < a, b < c < ⊤."""
    le = [
        [True, True, True, True, True],
        [False, True, False, True, True],
        [False, False, True, True, True],
        [False, False, False, True, True],
        [False, False, False, False, True],
    ]
    return construct.heyting_algebra(le, names=["bot", "a", "b", "c", "top"])
