"""Quaternion-feedback tracking controller."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy

# local imports
from sbsim.attitude.dynamics import angular_momentum
from sbsim.core.quaternion import (conjugate, properize, quat_multiply,
                                   rotation_matrix)


class ControlGains(object):
    """
    Proportional and derivative gain matrices.

    Attributes
    ----------
    kp, kd : numpy.ndarray
        3x3 positive-definite gains.

    """

    def __init__(self, kp, kd):
        kp = numpy.asarray(kp, dtype=float)
        kd = numpy.asarray(kd, dtype=float)
        kp = numpy.diag(kp) if kp.ndim == 1 else kp
        kd = numpy.diag(kd) if kd.ndim == 1 else kd
        for gain in (kp, kd):
            if gain.shape != (3, 3) or numpy.any(
                    numpy.linalg.eigvalsh(0.5 * (gain + gain.T)) <= 0):
                raise ValueError('Controller gains must be 3x3 and '
                                 'positive-definite.')
        self.kp = kp
        self.kd = kd

    @classmethod
    def from_bandwidth(cls, j_cm, bandwidth, damping=1.0):
        """
        Gains placing each axis at natural frequency `bandwidth` (rad/s).

        The attitude error enters through the quaternion vector part, half
        the small rotation angle, hence kp = 2 J wn^2; kd = 2 zeta wn J.
        Damping 1 gives critically damped axes.
        """
        inertia = numpy.diag(numpy.asarray(j_cm, dtype=float))
        return cls(2.0 * inertia * bandwidth ** 2,
                   2.0 * damping * bandwidth * inertia)


def attitude_error(q, q_command):
    """Properized error q * q_command^-1 of the body from the command."""
    return properize(quat_multiply(q, conjugate(q_command)))


def tracking_controller(x, command, gains, model):
    """
    Torque tracking an AttitudeCommand.

    u = -Kp dq_v - Kd (omega - omega_ref) + omega x (J_cm omega + h_omega),
    with dq the error of the body from the command and omega_ref the
    commanded rate expressed in the body frame.

    Returns
    -------
    numpy.ndarray
        Desired torque, spacecraft frame, N m.

    """
    q = x['q']
    omega = x['omega']
    error = attitude_error(q, command.quaternion)
    omega_ref = rotation_matrix(error).T.dot(command.rate)
    feedforward = numpy.cross(omega, angular_momentum(x, model))
    return (-gains.kp.dot(error[:3]) - gains.kd.dot(omega - omega_ref)
            + feedforward)
