"""Seeded navigation knowledge errors."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy

# local imports
from sbsim.navigation.state import NavState


def inject_state_error(x, sigma_position, sigma_velocity, seed=None,
                       rng=None):
    """
    Copy of `x` perturbed by zero-mean Gaussian errors.

    The input state is left untouched. A generator passed as `rng` takes
    precedence over `seed`.
    """
    if sigma_position < 0 or sigma_velocity < 0:
        raise ValueError('Error standard deviations must be non-negative.')
    rng = rng if rng is not None else numpy.random.default_rng(seed)
    noise = rng.standard_normal(6)
    return NavState(x.position + sigma_position * noise[:3],
                    x.velocity + sigma_velocity * noise[3:], x.center)
