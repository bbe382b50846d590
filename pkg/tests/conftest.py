import numpy as np
import pytest

from qtlattice import biorthogonal_system


@pytest.fixture(scope="session")
def system_cache():
    """Memoized biorthogonal systems, shared across the suite."""
    cache = {}

    def get(N):
        if N not in cache:
            cache[N] = biorthogonal_system(N)
        return cache[N]

    return get


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)
