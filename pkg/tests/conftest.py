import numpy as np
import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.load_profile("suite")


@pytest.fixture
def rng():
    return np.random.default_rng(20240822)


def random_spectrum(rng, d, beta=None):
    from thermocone import EnergySpectrum

    energies = np.sort(rng.uniform(0.0, 2.0, d))
    if beta is None:
        beta = float(rng.uniform(0.0, 2.0))
    return EnergySpectrum(tuple(energies), beta)


def random_dist(rng, d):
    return rng.dirichlet(np.ones(d))
