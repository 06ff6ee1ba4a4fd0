import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT))

from hallforge.partition import Partition  # noqa: E402

GOLDEN = Path(__file__).resolve().parent / "golden"


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-range checks (deselect with -m 'not slow')")


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN


# Strategies shared by the property tests

def partitions(max_part: int = 12, max_length: int = 8):
    return st.lists(st.integers(1, max_part), max_size=max_length).map(Partition.from_parts)


def odd_partitions(N: int, max_length: int = 12):
    return st.lists(st.integers(1, N).map(lambda k: 2 * k - 1), max_size=max_length).map(
        Partition.from_parts
    )


def integer_vectors(max_length: int = 8):
    return st.lists(st.integers(-20, 20), max_size=max_length).map(tuple)
