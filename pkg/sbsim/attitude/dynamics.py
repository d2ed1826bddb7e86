"""Rigid-body attitude kinematics and dynamics with wheels and wings."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy

# local imports
from sbsim.core.integrator import rk4_step
from sbsim.core.quaternion import (normalize, omega_matrix, properize,
                                   rotation_matrix)
from sbsim.core.state_vector import StateVector
from sbsim.errors import StepSizeError

DEFAULT_MAX_ROTATION = 0.01


def _values(x):
    return x.values if isinstance(x, StateVector) else numpy.asarray(x)


def angular_momentum(x, model):
    """
    Total angular momentum J_cm omega + h_omega in the spacecraft frame.

    h_omega is the absolute rotor momentum sum I_r (a omega_r + omega), so
    the total equals I_cm omega + sum I_r a omega_r.
    """
    y = _values(x)
    layout = model.layout
    return (model.inertia.dot(y[layout['omega']])
            + model.wheel_matrix.dot(y[layout['omega_rw']])
            + model.wing_matrix.dot(y[layout['omega_sw']]))


def inertial_momentum(x, model):
    """Total angular momentum rotated into the inertial frame."""
    y = _values(x)
    q = normalize(y[model.layout['q']])
    return rotation_matrix(q).dot(angular_momentum(y, model))


def attitude_derivative(x, u, disturbance, model, wheel_accel=None):
    """
    Time derivative of the attitude state.

    Parameters
    ----------
    x : StateVector or array
        Attitude state [q, omega, omega_rw, omega_sw].
    u : array
        Total actuator torque on the body (thrusters plus wheel reaction),
        spacecraft frame, N m.
    disturbance : array
        Disturbance torque T_d, spacecraft frame, N m.
    model : sbsim.attitude.model.AttitudeModel
    wheel_accel : array, optional
        Wheel accelerations. Defaults to the minimum-norm solution of
        -sum I_rw a domega_rw = u, i.e. the wheels carry all of u.

    Returns
    -------
    numpy.ndarray
        dq = 0.5 Omega(omega) q, domega = I_cm^-1 (T_d + u - omega x H),
        wheel accelerations, wing accelerations (zero).

    """
    y = _values(x)
    layout = model.layout
    q = y[layout['q']]
    omega = y[layout['omega']]
    u = numpy.asarray(u, dtype=float)
    if wheel_accel is None:
        wheel_accel = -model.wheel_pinv.dot(u)
    momentum = (model.inertia.dot(omega)
                + model.wheel_matrix.dot(y[layout['omega_rw']])
                + model.wing_matrix.dot(y[layout['omega_sw']]))
    result = numpy.zeros_like(y)
    result[layout['q']] = 0.5 * omega_matrix(omega).dot(q)
    result[layout['omega']] = model.inertia_inverse.dot(
        disturbance + u - numpy.cross(omega, momentum))
    result[layout['omega_rw']] = wheel_accel
    return result


def step_attitude(x, u, disturbance, model, dt, wheel_accel=None,
                  max_rotation=DEFAULT_MAX_ROTATION, t=0.0):
    """
    One RK4 attitude step followed by normalization and properization.

    Torques and wheel accelerations are held constant over the step.

    Raises
    ------
    StepSizeError
        When |omega| dt exceeds `max_rotation`.

    """
    omega = x['omega'] if isinstance(x, StateVector) else None
    if omega is None:
        raise TypeError('step_attitude expects a StateVector.')
    if numpy.linalg.norm(omega) * dt > max_rotation:
        raise StepSizeError(
            'Body rotates {:.4g} rad per step, above the {:.4g} rad limit; '
            'use a smaller time step.'.format(numpy.linalg.norm(omega) * dt,
                                              max_rotation))
    u = numpy.asarray(u, dtype=float)
    disturbance = numpy.asarray(disturbance, dtype=float)
    if wheel_accel is None:
        wheel_accel = -model.wheel_pinv.dot(u)

    def derivative(_, y):
        return attitude_derivative(y, u, disturbance, model, wheel_accel)

    result = rk4_step(derivative, x, t, dt)
    part = model.layout['q']
    result.values[part] = properize(normalize(result.values[part]))
    return result
