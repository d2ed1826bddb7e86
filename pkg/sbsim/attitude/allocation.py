"""Torque allocation between reaction wheels and microthrusters."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import numpy

# local imports
from sbsim.errors import ActuatorSaturation

logger = logging.getLogger(__name__)


class Allocation(object):
    """
    Actuator commands realizing a body torque.

    Attributes
    ----------
    requested : numpy.ndarray
        Torque asked for, N m.
    wheel_accel : numpy.ndarray
        Wheel accelerations, rad/s2.
    thruster_torque : numpy.ndarray
        Thruster torque, spacecraft frame, N m.
    delivered : numpy.ndarray
        Torque on the body: thruster_torque - sum I_rw a domega_rw.
    rate_limited : bool
        True when a wheel already sits at its rate limit.

    """

    def __init__(self, requested, wheel_accel, thruster_torque, model,
                 rate_limited=False):
        self.requested = numpy.asarray(requested, dtype=float)
        self.wheel_accel = numpy.asarray(wheel_accel, dtype=float)
        self.thruster_torque = numpy.asarray(thruster_torque, dtype=float)
        self.delivered = (self.thruster_torque
                          - model.wheel_matrix.dot(self.wheel_accel))
        self.rate_limited = rate_limited

    @property
    def achievable_fraction(self):
        norm = self.requested.dot(self.requested)
        if norm == 0:
            return 1.0
        return float(self.delivered.dot(self.requested) / norm)


def allocate_actuators(u_desired, model, x=None):
    """
    Split a desired body torque between wheels and thrusters.

    The wheels take the least-squares solution of
    -sum I_rw,i a_i domega_rw,i = u, scaled down uniformly when a wheel
    would exceed its torque limit; the remainder goes to the thrusters up
    to their per-axis limit.

    Parameters
    ----------
    u_desired : array
        Torque, spacecraft frame, N m.
    model : sbsim.attitude.model.AttitudeModel
    x : StateVector, optional
        Current attitude state, used to report wheels at their rate limit.

    Returns
    -------
    Allocation

    Raises
    ------
    ActuatorSaturation
        When wheels and thrusters together cannot deliver u_desired; the
        exception carries the allocation with every actuator at its limit.

    """
    u = numpy.asarray(u_desired, dtype=float)
    n_wheels = len(model.wheels)
    rate_limited = False
    if x is not None and n_wheels:
        rate_limited = bool(numpy.any(
            numpy.abs(x['omega_rw']) >= model.wheel_max_rate))
    if not numpy.any(u):
        return Allocation(u, numpy.zeros(n_wheels), numpy.zeros(3), model,
                          rate_limited)
    wheel_accel = numpy.zeros(n_wheels)
    if n_wheels:
        wheel_accel = -model.wheel_pinv.dot(u)
        torques = numpy.abs(model.wheel_spin * wheel_accel)
        loaded = torques > 0
        if numpy.any(loaded):
            scale = min(1.0, numpy.min(model.wheel_max_torque[loaded]
                                       / torques[loaded]))
            wheel_accel = scale * wheel_accel
    residual = u + model.wheel_matrix.dot(wheel_accel)
    limit = model.thrusters.max_axis_torque
    thruster_torque = numpy.clip(residual, -limit, limit)
    allocation = Allocation(u, wheel_accel, thruster_torque, model,
                            rate_limited)
    if numpy.any(numpy.abs(residual) > limit * (1.0 + 1e-12) + 1e-15):
        logger.debug('Torque %s exceeds actuator authority.', u)
        raise ActuatorSaturation(allocation.achievable_fraction, allocation)
    return allocation
