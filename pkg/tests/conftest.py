import numpy as np
import pytest

from urbounds import ExampleParams


def draw_example_params(rng, d_floor=0.05):
    """Random two-mode Gaussian parameters with D above a floor."""
    while True:
        a = rng.uniform(0.4, 2.2)
        c = rng.uniform(0.4, 2.2)
        re_b = rng.uniform(-1.2, 1.2)
        im_b = rng.uniform(-1.2, 1.2)
        if a * c - re_b**2 > d_floor:
            return ExampleParams(a=a, c=c, b=complex(re_b, im_b))


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
