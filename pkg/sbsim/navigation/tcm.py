"""Trajectory correction maneuver planning."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import numpy

# local imports
from sbsim.environment.bodies import MU_SUN
from sbsim.navigation.lambert import PROGRADE, lambert_solve
from sbsim.navigation.propagation import kepler_propagate
from sbsim.navigation.state import PropulsionCommand

logger = logging.getLogger(__name__)


class TcmPlan(object):
    """
    Planned correction.

    Attributes
    ----------
    delta_v : numpy.ndarray
        Impulsive velocity change actually commanded, m/s.
    required_delta_v : numpy.ndarray
        Lambert velocity minus current velocity, m/s.
    command : PropulsionCommand or None
        Finite burn at maximum thrust; None when no burn is needed.
    capped : bool
        True when the demand exceeded the maximum delta-v.

    """

    def __init__(self, delta_v, required_delta_v, command, capped=False):
        self.delta_v = numpy.asarray(delta_v, dtype=float)
        self.required_delta_v = numpy.asarray(required_delta_v, dtype=float)
        self.command = command
        self.capped = capped

    @property
    def magnitude(self):
        return float(numpy.linalg.norm(self.delta_v))

    @property
    def direction(self):
        norm = self.magnitude
        return self.delta_v / norm if norm > 0 else numpy.zeros(3)


def aim_point(target, t_arrive, offset=(0.0, 0.0, 0.0)):
    """Inertial aim position: target body at arrival plus an offset."""
    return target.position(t_arrive) + numpy.asarray(offset, dtype=float)


def predict_miss(x, env, target, t_now, t_arrive, offset=(0.0, 0.0, 0.0),
                 mu=MU_SUN):
    """
    Coasting miss distance from the aim point at `t_arrive`, m.

    The state is flown on a heliocentric two-body conic.
    """
    r_abs, v_abs = x.absolute(env, t_now)
    r_arrive, _ = kepler_propagate(r_abs, v_abs, t_arrive - t_now, mu)
    return float(numpy.linalg.norm(
        r_arrive - aim_point(target, t_arrive, offset)))


def plan_tcm(x, env, target, t_now, t_arrive, max_delta_v, max_thrust,
             mass, offset=(0.0, 0.0, 0.0), mu=MU_SUN, min_delta_v=0.0):
    """
    Lambert correction toward the aim point at `t_arrive`.

    Parameters
    ----------
    x : NavState
        Onboard navigation estimate at `t_now`.
    env : sbsim.environment.Environment
    target : CelestialBody
    t_now, t_arrive : float
        s.
    max_delta_v : float
        Delta-v cap, m/s.
    max_thrust : float
        Burn thrust, N.
    mass : float
        kg.
    offset : array
        Aim offset from the target body center, inertial frame, m.
    min_delta_v : float
        Demands below this are not burned, m/s.

    Returns
    -------
    TcmPlan

    """
    if not t_arrive > t_now:
        raise ValueError('Arrival epoch must lie in the future.')
    r_abs, v_abs = x.absolute(env, t_now)
    v_required, _ = lambert_solve(r_abs, aim_point(target, t_arrive, offset),
                                  t_arrive - t_now, mu, PROGRADE,
                                  plane_normal=numpy.cross(r_abs, v_abs))
    required = v_required - v_abs
    demand = numpy.linalg.norm(required)
    capped = demand > max_delta_v
    delta_v = required * (max_delta_v / demand) if capped else required
    if capped:
        logger.warning('TCM demand %.3f m/s capped to %.3f m/s.', demand,
                       max_delta_v)
    magnitude = numpy.linalg.norm(delta_v)
    command = None
    if magnitude > min_delta_v and magnitude > 0:
        duration = mass * magnitude / max_thrust
        command = PropulsionCommand(max_thrust * delta_v / magnitude, t_now,
                                    t_now + duration)
    return TcmPlan(delta_v, required, command, capped)
