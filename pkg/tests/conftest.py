import mpmath
import pytest
from hypothesis import settings

settings.register_profile("zetaprod", deadline=None, max_examples=40, derandomize=True)
settings.load_profile("zetaprod")

mpmath.mp.dps = 30


def close(x, y, tol, rel=True):
    """|x - y| <= tol * max(1, |y|) (or plain absolute when rel is False)."""
    scale = max(1.0, abs(complex(y))) if rel else 1.0
    return abs(complex(x) - complex(y)) <= tol * scale


@pytest.fixture
def mp():
    return mpmath
