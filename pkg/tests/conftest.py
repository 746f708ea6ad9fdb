import numpy as np

from cocircular import TAU, AngleConfiguration, MassVector


def ordered_angles(rng, n, min_gap=0.05):
    """Random pinned configuration whose circular gaps all stay >= min_gap."""
    w = rng.dirichlet(np.ones(n))
    gaps = min_gap + (TAU - n * min_gap) * w
    cum = np.cumsum(gaps)
    return AngleConfiguration(np.append(cum[:-1], TAU))


def random_masses(rng, n, lo=0.5, hi=2.0):
    return MassVector(rng.uniform(lo, hi, n))
