from __future__ import absolute_import, division, print_function

import math
import unittest.mock

import numpy
import pytest

from sbsim.core import Pose
from sbsim.core.quaternion import IDENTITY, from_axis_angle
from sbsim.environment import (CelestialBody, Environment, FixedEphemeris,
                               KeplerEphemeris, MassGrid, gravity_force,
                               gravity_torque)
from sbsim.environment.bodies import CACHE_SIZE
from sbsim.errors import GeometryError, SimulationError


def body(mu=1.0, position=(0, 0, 0), radius=0.0):
    return CelestialBody('b', mu, radius, FixedEphemeris(position))


def test_unit_point_mass():
    numpy.testing.assert_allclose(gravity_force(body(), [1, 0, 0], 1.0),
                                  [-1, 0, 0])


def test_earth_like_force():
    earth = body(3.986e14)
    force = gravity_force(earth, [7e6, 0, 0], 178.0)
    assert numpy.linalg.norm(force) == pytest.approx(1448.0, abs=0.1)


def test_zero_separation():
    with pytest.raises(GeometryError):
        gravity_force(body(), [0, 0, 0], 1.0)


def test_single_partition_at_cm_has_no_torque():
    grid = MassGrid(178.0, [0.5, 0.5, 0.5], partitions=1)
    pose = Pose([1e7, 2e6, 0], from_axis_angle([1, 1, 1], 0.4))
    assert numpy.array_equal(gravity_torque(body(3.986e14), grid, pose),
                             numpy.zeros(3))


def test_symmetric_cube_on_principal_axis():
    grid = MassGrid(100.0, [0.5, 0.5, 0.5], partitions=3)
    pose = Pose([7e6, 0, 0], IDENTITY)
    torque = gravity_torque(body(3.986e14), grid, pose)
    numpy.testing.assert_allclose(torque, 0, atol=1e-12)


def test_elongated_grid_matches_brute_force():
    mu = 3.986e14
    grid = MassGrid(178.0, [1.0, 0.5, 0.5], partitions=4)
    assert grid.centers.shape == (64, 3)
    pose = Pose([5e6, 3e6, 1e6], from_axis_angle([0.2, 1, -0.4], 0.9))
    expected = numpy.zeros(3)
    for center, mass in zip(grid.centers, grid.masses):
        rel = pose.position.values + pose.rotation.dot(center)
        force = -mu * mass * rel / numpy.linalg.norm(rel) ** 3
        expected += numpy.cross(center, pose.rotation.T.dot(force))
    torque = gravity_torque(body(mu), grid, pose)
    numpy.testing.assert_allclose(torque, expected, atol=1e-12)
    assert numpy.linalg.norm(torque) > 0


def test_grid_inside_body():
    grid = MassGrid(1.0, [1, 1, 1], partitions=2)
    with pytest.raises(GeometryError):
        gravity_torque(body(1.0, radius=10.0), grid,
                       Pose([5.0, 0, 0], IDENTITY))


def test_kepler_ephemeris_circular_orbit():
    mu = 1.32712440018e20
    a = 1.495978707e11
    ephemeris = KeplerEphemeris(a, mu=mu)
    period = 2 * math.pi * math.sqrt(a ** 3 / mu)
    numpy.testing.assert_allclose(ephemeris.position(0.0), [a, 0, 0])
    numpy.testing.assert_allclose(ephemeris.position(period / 4), [0, a, 0],
                                  atol=1e-3 * a * 1e-6)
    speed = numpy.linalg.norm(ephemeris.velocity(1e5))
    assert speed == pytest.approx(math.sqrt(mu / a), rel=1e-12)


def test_kepler_cache_is_bounded():
    ephemeris = KeplerEphemeris(1e11, 0.1)
    for t in range(3 * CACHE_SIZE):
        ephemeris.position(float(t))
    assert ephemeris.state.cache_info().currsize == CACHE_SIZE
    # returned arrays are copies
    position = ephemeris.position(0.0)
    position[0] = 0.0
    assert ephemeris.position(0.0)[0] != 0.0


def test_kepler_failure_is_a_simulation_error():
    ephemeris = KeplerEphemeris(1e11, 0.1)
    with unittest.mock.patch('sbsim.environment.bodies.newton',
                             side_effect=RuntimeError('no convergence')):
        with pytest.raises(SimulationError) as error:
            ephemeris.position(5.0)
    assert 't=5.0 s' in str(error.value)
    with pytest.raises(SimulationError):
        ephemeris.position(float('nan'))


def test_environment_roles():
    sun = CelestialBody('sun', 1.32712440018e20, 6.957e8)
    rock = CelestialBody('rock', 5.0, 2000.0, FixedEphemeris([1e11, 0, 0]))
    earth = CelestialBody('earth', 3.986e14, 6.4e6,
                          FixedEphemeris([0, 1.5e11, 0]), gravitating=False)
    env = Environment([sun, rock, earth], 'sun', 'rock', 'earth')
    assert env.target is rock
    assert env.ground is earth
    assert env.gravitating_bodies() == [sun, rock]
    with pytest.raises(KeyError):
        Environment([sun], 'sun', 'rock')
    with pytest.raises(ValueError):
        Environment([sun], 'sun', srp_model='sail')
