import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def complexes(radius=2.0):
    """Complex numbers with modulus at most ``radius``, built from polar form."""
    return st.builds(
        lambda r, t: complex(r * np.cos(t), r * np.sin(t)),
        st.floats(0.0, radius),
        st.floats(0.0, 2 * np.pi),
    )


def points(n, radius=2.0):
    return st.lists(complexes(radius), min_size=n, max_size=n).map(lambda v: np.array(v, dtype=complex))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
