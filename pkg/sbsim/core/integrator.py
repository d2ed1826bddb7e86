"""Fixed-step classical Runge-Kutta integration."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy

# local imports
from sbsim.errors import NonFiniteDerivative, StepSizeError


def _checked(f, t, values, layout):
    derivative = numpy.asarray(f(t, values), dtype=float)
    bad = numpy.flatnonzero(~numpy.isfinite(derivative))
    if bad.size:
        raise NonFiniteDerivative(layout.slot_name(int(bad[0])), t)
    return derivative


def rk4_step(f, x, t, dt):
    """
    Advance a StateVector by one classical fourth-order step.

    Parameters
    ----------
    f : callable
        Derivative f(t, values) -> array of the same length as values.
    x : sbsim.core.state_vector.StateVector
        State at time t.
    t : float
        Current time, s.
    dt : float
        Step, s. Must be positive.

    Returns
    -------
    StateVector at t + dt. f is evaluated exactly four times.

    """
    if not dt > 0:
        raise StepSizeError('Integration step must be positive, got {}.'
                            .format(dt))
    y = x.values
    half = 0.5 * dt
    k1 = _checked(f, t, y, x.layout)
    k2 = _checked(f, t + half, y + half * k1, x.layout)
    k3 = _checked(f, t + half, y + half * k2, x.layout)
    k4 = _checked(f, t + dt, y + dt * k3, x.layout)
    return x.replace(y + dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4))
