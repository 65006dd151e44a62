import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "det",
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
    deadline=None,
)
settings.load_profile("det")

from strata import ReducedShapeSubspace, fourbar, quad  # noqa: E402


@pytest.fixture(scope="session")
def fourbar_model():
    return fourbar()


@pytest.fixture(scope="session")
def quad_model():
    return quad()


@pytest.fixture(scope="session")
def fourbar_sub(fourbar_model):
    return ReducedShapeSubspace(fourbar_model, (0, 1))


@pytest.fixture(scope="session")
def quad_sub13(quad_model):
    return ReducedShapeSubspace(quad_model, (0, 2))


@pytest.fixture(scope="session")
def quad_sub24(quad_model):
    return ReducedShapeSubspace(quad_model, (1, 3))


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240811)
