import numpy as np
import pytest

from conal.basis import build_basis


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


@pytest.fixture(scope="session")
def bases():
    """One basis per dimension used across the suite."""
    return {d: build_basis(d) for d in range(2, 6)}
