"""Eigen-axis slew guidance and pointing attitudes."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import math
import numpy

# local imports
from sbsim.attitude.model import AttitudeCommand, Mode
from sbsim.core.quaternion import (axis_angle, error_quaternion,
                                   from_axis_angle, from_rotation_matrix,
                                   properize, quat_multiply, rotation_matrix)
from sbsim.errors import GeometryError


def _unit(vector, name):
    vector = numpy.asarray(vector, dtype=float)
    norm = numpy.linalg.norm(vector)
    if norm == 0:
        raise GeometryError('Zero-norm {}.'.format(name))
    return vector / norm


def _perpendicular(vector):
    helper = numpy.eye(3)[numpy.argmin(numpy.abs(vector))]
    return _unit(numpy.cross(vector, helper), 'perpendicular')


def pointing_attitude(boresight, direction, secondary_axis,
                      secondary_direction):
    """
    Attitude aligning a body boresight with an inertial direction.

    The body `secondary_axis` is brought as close as possible to the
    inertial `secondary_direction` (two-vector alignment).

    Returns
    -------
    numpy.ndarray
        Properized quaternion q^{i}_{sc}.

    """
    b1 = _unit(boresight, 'boresight')
    i1 = _unit(direction, 'pointing direction')
    b2 = numpy.cross(b1, _unit(secondary_axis, 'secondary axis'))
    i2 = numpy.cross(i1, _unit(secondary_direction, 'secondary direction'))
    b2 = _unit(b2, 'secondary') if numpy.linalg.norm(b2) > 1e-9 \
        else _perpendicular(b1)
    i2 = _unit(i2, 'secondary') if numpy.linalg.norm(i2) > 1e-9 \
        else _perpendicular(i1)
    body = numpy.column_stack([b1, b2, numpy.cross(b1, b2)])
    inertial = numpy.column_stack([i1, i2, numpy.cross(i1, i2)])
    return from_rotation_matrix(inertial.dot(body.T))


def pointing_error(quaternion, boresight, direction):
    """Angle between the rotated body boresight and an inertial direction."""
    axis = rotation_matrix(quaternion).dot(_unit(boresight, 'boresight'))
    cosine = axis.dot(_unit(direction, 'pointing direction'))
    return float(numpy.arccos(numpy.clip(cosine, -1.0, 1.0)))


def _trapezoid(angle, rate_limit, accel_limit):
    """Ramp duration, cruise duration and peak rate of the profile."""
    ramp_angle = rate_limit ** 2 / accel_limit
    if angle >= ramp_angle:
        return rate_limit / accel_limit, (angle - ramp_angle) / rate_limit, \
            rate_limit
    peak = math.sqrt(angle * accel_limit)
    return peak / accel_limit, 0.0, peak


def eigen_axis_guidance(q_current, q_target, rate_limit, dt,
                        accel_limit=None, mode=Mode.SMALL_BODY_POINTING):
    """
    Slew about the fixed eigen-axis with a trapezoidal rate profile.

    Parameters
    ----------
    q_current, q_target : array
        Unit quaternions.
    rate_limit : float
        Slew rate limit, rad/s.
    dt : float
        Command spacing, s.
    accel_limit : float, optional
        Slew acceleration limit, rad/s2; defaults to reaching the rate
        limit in ten steps.
    mode : Mode

    Returns
    -------
    list of AttitudeCommand
        One command per step; the last equals q_target at zero rate.

    """
    if not rate_limit > 0 or not dt > 0:
        raise ValueError('Guidance needs a positive rate limit and step.')
    accel_limit = accel_limit or rate_limit / (10.0 * dt)
    q_current = properize(numpy.asarray(q_current, dtype=float))
    q_target = properize(numpy.asarray(q_target, dtype=float))
    axis, angle = axis_angle(error_quaternion(q_target, q_current))
    final = AttitudeCommand(q_target, numpy.zeros(3), mode)
    if angle < 1e-12:
        return [final]
    ramp, cruise, peak = _trapezoid(angle, rate_limit, accel_limit)
    total = 2.0 * ramp + cruise
    commands = []
    for k in range(1, int(math.ceil(total / dt - 1e-9))):
        t = k * dt
        if t < ramp:
            swept, rate = 0.5 * accel_limit * t * t, accel_limit * t
        elif t < ramp + cruise:
            swept = 0.5 * peak * ramp + peak * (t - ramp)
            rate = peak
        else:
            remaining = total - t
            swept = angle - 0.5 * accel_limit * remaining ** 2
            rate = accel_limit * remaining
        q = properize(quat_multiply(from_axis_angle(axis, swept), q_current))
        commands.append(AttitudeCommand(q, rate * axis, mode))
    commands.append(final)
    return commands
