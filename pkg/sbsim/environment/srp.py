"""Solar radiation pressure: N-plate and cannonball models."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy

# local imports
from sbsim.core.frames import FrameId, FrameVector
from sbsim.environment.sunlight import DEFAULT_CONSTANTS, srp_pressure
from sbsim.errors import GeometryError


class Plate(object):
    """
    Flat surface exposed to sunlight.

    Attributes
    ----------
    area : float
        m2.
    reflectivity : float
        In [0, 1].
    normal : FrameVector
        Outward unit normal, spacecraft frame.
    center : FrameVector
        Center of pressure relative to the CM, spacecraft frame, m.

    """

    def __init__(self, area, reflectivity, normal, center, plate_id=None):
        normal = FrameVector(normal, FrameId.SPACECRAFT)
        if abs(normal.norm() - 1.0) > 1e-9:
            raise ValueError('Plate normal must be unit-norm.')
        if not area > 0 or not 0 <= reflectivity <= 1:
            raise ValueError('Plate needs area > 0 and reflectivity in '
                             '[0, 1].')
        self.plate_id = plate_id
        self.area = float(area)
        self.reflectivity = float(reflectivity)
        self.normal = normal
        self.center = FrameVector(center, FrameId.SPACECRAFT)


def _sun_offset(pose, sun, t):
    sun_position = sun.position(t)
    offset = pose.position.values - sun_position
    distance = numpy.linalg.norm(offset)
    if distance == 0:
        raise GeometryError('Spacecraft coincides with the Sun.')
    return sun_position, offset, distance


def srp_force_torque(plates, pose, sun, constants=DEFAULT_CONSTANTS, t=0.0):
    """
    N-plate radiation pressure force and torque.

    Each plate pushes along the unit Sun-to-plate direction with magnitude
    rho(d) a (1 + r) cos(theta); plates lit from behind contribute nothing.

    Returns
    -------
    (force, torque) : (numpy.ndarray, numpy.ndarray)
        Force in the inertial frame (N) and torque about the CM in the
        spacecraft frame (N m).

    """
    if not plates:
        raise ValueError('SRP model needs at least one plate.')
    sun_position, _, distance = _sun_offset(pose, sun, t)
    pressure = srp_pressure(distance, constants)
    rotation = pose.rotation
    centers = numpy.array([p.center.values for p in plates])
    normals = numpy.array([p.normal.values for p in plates]).dot(rotation.T)
    scale = numpy.array([p.area * (1.0 + p.reflectivity) for p in plates])
    directions = pose.position.values + centers.dot(rotation.T) - sun_position
    directions /= numpy.linalg.norm(directions, axis=1)[:, None]
    cosines = numpy.maximum(-numpy.sum(normals * directions, axis=1), 0.0)
    forces = (pressure * scale * cosines)[:, None] * directions
    torque = numpy.cross(centers, forces.dot(rotation)).sum(axis=0)
    return forces.sum(axis=0), torque


def srp_force_cannonball(area, reflectivity_coefficient, pose, sun,
                         constants=DEFAULT_CONSTANTS, t=0.0):
    """
    Sphere-equivalent radiation pressure force, N, inertial frame.

    No torque is produced by a cannonball.
    """
    _, offset, distance = _sun_offset(pose, sun, t)
    pressure = srp_pressure(distance, constants)
    return pressure * reflectivity_coefficient * area * offset / distance
