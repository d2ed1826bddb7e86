"""Point-mass gravity force and cuboid-discretized gravity-gradient torque."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import itertools
import numpy

# local imports
from sbsim.errors import GeometryError


def gravity_force(body, r_cm, m_sc, t=0.0):
    """
    Point-mass attraction of `body` on the spacecraft.

    Parameters
    ----------
    body : sbsim.environment.bodies.CelestialBody
    r_cm : array
        Spacecraft CM position in the inertial frame, m.
    m_sc : float
        Spacecraft mass, kg.
    t : float
        Ephemeris time, s.

    Returns
    -------
    numpy.ndarray
        Force in the inertial frame, N, pointing toward the body.

    """
    r = numpy.asarray(r_cm, dtype=float) - body.position(t)
    distance = numpy.linalg.norm(r)
    if distance == 0 or distance <= body.radius:
        raise GeometryError('Spacecraft at {:.3f} m from the center of {} '
                            '(radius {} m).'.format(distance, body.body_id,
                                                    body.radius))
    return -body.mu * m_sc * r / distance ** 3


class MassGrid(object):
    """
    Spacecraft mass split evenly over K^3 cuboid partitions.

    Attributes
    ----------
    mass : float
        Total mass, kg.
    half_extents : numpy.ndarray
        Half-lengths of the bounding cuboid along the spacecraft axes, m.
    partitions : int
        K, partitions per axis.
    centers : numpy.ndarray
        (K^3, 3) partition centers relative to the CM, spacecraft frame.
    masses : numpy.ndarray
        (K^3,) partition masses, each mass / K^3.

    """

    def __init__(self, mass, half_extents, partitions=1,
                 center=(0.0, 0.0, 0.0)):
        if int(partitions) < 1:
            raise ValueError('Mass grid needs at least one partition per '
                             'axis.')
        self.mass = float(mass)
        self.half_extents = numpy.asarray(half_extents, dtype=float)
        self.partitions = int(partitions)
        # partition centers are cell midpoints, symmetric about `center`
        k = self.partitions
        offsets = (2.0 * numpy.arange(k) + 1.0) / k - 1.0
        grid = numpy.array(list(itertools.product(offsets, repeat=3)))
        self.centers = grid * self.half_extents + numpy.asarray(center,
                                                                dtype=float)
        self.masses = numpy.full(k ** 3, self.mass / k ** 3)


def gravity_torque(body, grid, pose, t=0.0):
    """
    Gravity-gradient torque summed over the mass grid partitions.

    Returns the torque in the spacecraft frame, N m:
    sum_k r_k x (R^{sc}_{i} F_k), with F_k the point-mass force of `body`
    on partition k.
    """
    rotation = pose.rotation
    rel = (pose.position.values + grid.centers.dot(rotation.T)
           - body.position(t))
    distance = numpy.linalg.norm(rel, axis=1)
    if numpy.any(distance <= max(body.radius, 0.0)) or numpy.any(
            distance == 0):
        raise GeometryError('Mass grid intersects {}.'.format(body.body_id))
    forces = -body.mu * (grid.masses / distance ** 3)[:, None] * rel
    forces_body = forces.dot(rotation)
    return numpy.cross(grid.centers, forces_body).sum(axis=0)
