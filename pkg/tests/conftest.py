import pytest

from cutjoin.hodge import build_series_pair


@pytest.fixture(scope="session")
def series_pair_small():
    """Disconnected/connected pair at a size big enough for every unit check
    (weight 4, lambda order 10) but much cheaper than the acceptance size."""
    return build_series_pair(4, 10)
