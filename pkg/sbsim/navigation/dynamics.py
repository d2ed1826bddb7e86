"""Translational equations of motion."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy

# local imports
from sbsim.core.frames import Pose
from sbsim.core.quaternion import IDENTITY
from sbsim.environment.gravity import gravity_force
from sbsim.environment.srp import srp_force_cannonball, srp_force_torque


def disturbance_force(env, vehicle, r_abs, quaternion, t):
    """
    Non-gravitational environment force, N, inertial frame.

    Only solar radiation pressure is modelled; drag and electromagnetic
    forces are zero in deep cruise.
    """
    if env.srp_model == 'none':
        return numpy.zeros(3)
    pose = Pose(r_abs, quaternion)
    if env.srp_model == 'cannonball':
        return srp_force_cannonball(vehicle.cannonball_area,
                                    vehicle.cannonball_coefficient, pose,
                                    env.sun, env.constants, t)
    return srp_force_torque(vehicle.plates, pose, env.sun, env.constants,
                            t)[0]


def nav_acceleration(x, thrust, env, vehicle, t, quaternion=IDENTITY):
    """
    Acceleration relative to the center of integration, m/s2.

    (sum F_g + F_srp + u) / m minus the acceleration of the center body.

    Parameters
    ----------
    x : NavState
    thrust : array
        Propulsion force u, inertial frame, N.
    env : sbsim.environment.Environment
    vehicle : object
        Provides `mass` (kg), `plates`, `cannonball_area` and
        `cannonball_coefficient`.
    t : float
        s.
    quaternion : array
        Attitude, used by the N-plate radiation pressure.

    """
    if not vehicle.mass > 0:
        raise ValueError('Spacecraft mass must be positive.')
    center = env[x.center]
    r_abs = x.position + center.position(t)
    force = numpy.asarray(thrust, dtype=float) + disturbance_force(
        env, vehicle, r_abs, quaternion, t)
    for body in env.gravitating_bodies():
        force = force + gravity_force(body, r_abs, vehicle.mass, t)
    return force / vehicle.mass - center.acceleration(t)


def nav_derivative(x, thrust, env, vehicle, t, quaternion=IDENTITY):
    """Time derivative [velocity, acceleration] of a NavState."""
    return numpy.concatenate([
        x.velocity, nav_acceleration(x, thrust, env, vehicle, t, quaternion)])
