"""Celestial bodies, their ephemerides and the simulated environment."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import collections
import functools
import numpy
from scipy.optimize import newton
from scipy.spatial.transform import Rotation

# local imports
from sbsim.environment.sunlight import DEFAULT_CONSTANTS
from sbsim.errors import SimulationError

MU_SUN = 1.32712440018e20
CACHE_SIZE = 8


class FixedEphemeris(object):
    """Body at rest at a fixed inertial position."""

    def __init__(self, position=(0.0, 0.0, 0.0)):
        self._position = numpy.array(position, dtype=float)

    def position(self, t):
        return self._position.copy()

    def velocity(self, t):
        return numpy.zeros(3)

    def acceleration(self, t):
        return numpy.zeros(3)


class KeplerEphemeris(object):
    """
    Body on a Keplerian ellipse about the Sun at the inertial origin.

    Attributes
    ----------
    semi_major_axis : float
        m.
    eccentricity : float
        In [0, 1).
    inclination, raan, arg_periapsis, mean_anomaly : float
        rad; mean anomaly at `epoch`.
    epoch : float
        s.
    mu : float
        Gravitational parameter of the central body, m3/s2.

    """

    def __init__(self, semi_major_axis, eccentricity=0.0, inclination=0.0,
                 raan=0.0, arg_periapsis=0.0, mean_anomaly=0.0, epoch=0.0,
                 mu=MU_SUN):
        if not semi_major_axis > 0 or not 0 <= eccentricity < 1:
            raise ValueError('Kepler ephemeris needs a > 0 and 0 <= e < 1.')
        self.semi_major_axis = float(semi_major_axis)
        self.eccentricity = float(eccentricity)
        self.inclination = float(inclination)
        self.raan = float(raan)
        self.arg_periapsis = float(arg_periapsis)
        self.mean_anomaly = float(mean_anomaly)
        self.epoch = float(epoch)
        self.mu = float(mu)
        self.mean_motion = numpy.sqrt(mu / self.semi_major_axis ** 3)
        self._orientation = Rotation.from_euler(
            'ZXZ', [self.raan, self.inclination, self.arg_periapsis]
        ).as_matrix()
        # position and velocity at time t in the inertial frame
        self.state = functools.lru_cache(maxsize=CACHE_SIZE)(self._solve)

    def _solve(self, t):
        a, e = self.semi_major_axis, self.eccentricity
        mean = self.mean_anomaly + self.mean_motion * (t - self.epoch)
        try:
            eccentric = newton(lambda E: E - e * numpy.sin(E) - mean, mean,
                               fprime=lambda E: 1.0 - e * numpy.cos(E),
                               tol=1e-14, maxiter=50)
        except RuntimeError as error:
            raise SimulationError('Kepler equation did not converge at '
                                  't={} s: {}'.format(t, error))
        if not numpy.isfinite(eccentric):
            raise SimulationError('Non-finite eccentric anomaly at t={} s.'
                                  .format(t))
        cos_e, sin_e = numpy.cos(eccentric), numpy.sin(eccentric)
        root = numpy.sqrt(1.0 - e * e)
        radius = a * (1.0 - e * cos_e)
        position = numpy.array([a * (cos_e - e), a * root * sin_e, 0.0])
        velocity = (numpy.sqrt(self.mu * a) / radius
                    * numpy.array([-sin_e, root * cos_e, 0.0]))
        return (self._orientation.dot(position),
                self._orientation.dot(velocity))

    def position(self, t):
        return self.state(t)[0].copy()

    def velocity(self, t):
        return self.state(t)[1].copy()

    def acceleration(self, t):
        r = self.state(t)[0]
        return -self.mu * r / numpy.linalg.norm(r) ** 3


class CelestialBody(object):
    """
    Body with a gravitational parameter and an ephemeris.

    Attributes
    ----------
    body_id : str
    mu : float
        m3/s2.
    radius : float
        m.
    ephemeris : FixedEphemeris or KeplerEphemeris
    gravitating : bool
        Whether the body attracts the spacecraft.

    """

    def __init__(self, body_id, mu, radius, ephemeris=None, gravitating=True):
        if not mu > 0:
            raise ValueError('Body {} needs mu > 0.'.format(body_id))
        self.body_id = body_id
        self.mu = float(mu)
        self.radius = float(radius)
        self.ephemeris = ephemeris or FixedEphemeris()
        self.gravitating = gravitating

    def position(self, t=0.0):
        return self.ephemeris.position(t)

    def velocity(self, t=0.0):
        return self.ephemeris.velocity(t)

    def acceleration(self, t=0.0):
        return self.ephemeris.acceleration(t)

    def __repr__(self):
        return 'CelestialBody({!r}, mu={})'.format(self.body_id, self.mu)


class Environment(object):
    """
    Bodies, sunlight constants and disturbance model selectors.

    Attributes
    ----------
    bodies : collections.OrderedDict
        Mapping body id -> CelestialBody.
    sun_id, target_id, ground_id : str
        Roles of the bodies. `ground_id` may be None.
    constants : sbsim.environment.sunlight.SolarConstants
    srp_model : str
        'nplate', 'cannonball' or 'none'.
    gravity_torque : bool
        Whether gravity-gradient torques are evaluated.

    """

    SRP_MODELS = ('nplate', 'cannonball', 'none')

    def __init__(self, bodies, sun_id='sun', target_id=None, ground_id=None,
                 constants=DEFAULT_CONSTANTS, srp_model='nplate',
                 gravity_torque=True):
        self.bodies = collections.OrderedDict((b.body_id, b) for b in bodies)
        if srp_model not in self.SRP_MODELS:
            raise ValueError('Unknown SRP model {}. Valid models are: {}'
                             .format(srp_model, ', '.join(self.SRP_MODELS)))
        for role in (sun_id, target_id, ground_id):
            if role is not None and role not in self.bodies:
                raise KeyError(role)
        self.sun_id = sun_id
        self.target_id = target_id
        self.ground_id = ground_id
        self.constants = constants
        self.srp_model = srp_model
        self.gravity_torque = gravity_torque

    def __getitem__(self, body_id):
        return self.bodies[body_id]

    @property
    def sun(self):
        return self.bodies[self.sun_id]

    @property
    def target(self):
        return self.bodies[self.target_id]

    @property
    def ground(self):
        return self.bodies[self.ground_id] if self.ground_id else None

    def gravitating_bodies(self):
        return [b for b in self.bodies.values() if b.gravitating]
