"""Navigation state and propulsion commands."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy

# local imports
from sbsim.core.state_vector import StateLayout, StateVector

NAV_LAYOUT = StateLayout([('position', 3, 'm'), ('velocity', 3, 'm/s')])


class NavState(object):
    """
    Translational state relative to a center of integration.

    Attributes
    ----------
    position : numpy.ndarray
        Position relative to the center body, inertial axes, m.
    velocity : numpy.ndarray
        Velocity relative to the center body, m/s.
    center : str
        Id of the center-of-integration body.

    """

    __slots__ = ('position', 'velocity', 'center')

    def __init__(self, position, velocity, center):
        self.position = numpy.array(position, dtype=float).reshape(3)
        self.velocity = numpy.array(velocity, dtype=float).reshape(3)
        self.center = center

    @property
    def values(self):
        return numpy.concatenate([self.position, self.velocity])

    def as_state_vector(self):
        return StateVector(self.values, NAV_LAYOUT)

    @classmethod
    def from_values(cls, values, center):
        values = numpy.asarray(values, dtype=float)
        return cls(values[:3], values[3:6], center)

    def absolute(self, env, t):
        """Position and velocity relative to the inertial origin."""
        body = env[self.center]
        return (self.position + body.position(t),
                self.velocity + body.velocity(t))

    def copy(self):
        return NavState(self.position, self.velocity, self.center)

    def __repr__(self):
        return 'NavState({}, {}, center={!r})'.format(
            list(self.position), list(self.velocity), self.center)


class PropulsionCommand(object):
    """
    Constant-thrust burn.

    Attributes
    ----------
    thrust : numpy.ndarray
        Thrust vector, inertial frame, N.
    start, stop : float
        Burn window [start, stop), s.
    mass_flow : float
        Propellant mass flow, kg/s (bookkeeping only).

    """

    def __init__(self, thrust, start, stop, mass_flow=0.0):
        if not stop > start:
            raise ValueError('Burn must stop after it starts.')
        self.thrust = numpy.asarray(thrust, dtype=float)
        self.start = float(start)
        self.stop = float(stop)
        self.mass_flow = float(mass_flow)

    @property
    def duration(self):
        return self.stop - self.start

    @property
    def magnitude(self):
        return float(numpy.linalg.norm(self.thrust))

    def overlap(self, t, dt):
        """Fraction of the step [t, t + dt) spent inside the burn window."""
        inside = min(self.stop, t + dt) - max(self.start, t)
        return max(0.0, inside) / dt

    def mean_thrust(self, t, dt):
        """Thrust averaged over the step [t, t + dt)."""
        return self.thrust * self.overlap(t, dt)

    def check_limit(self, max_thrust):
        if self.magnitude > max_thrust * (1.0 + 1e-12):
            raise ValueError('Burn thrust {:.4g} N exceeds the {:.4g} N limit.'
                             .format(self.magnitude, max_thrust))
