from __future__ import absolute_import, division, print_function

import numpy
import pytest

from sbsim.core import Pose
from sbsim.core.quaternion import IDENTITY
from sbsim.environment import (CelestialBody, Plate, SolarConstants,
                               irradiance, srp_force_cannonball,
                               srp_force_torque, srp_pressure)
from sbsim.environment.sunlight import ASTRONOMICAL_UNIT, DEFAULT_CONSTANTS
from sbsim.errors import GeometryError


@pytest.fixture
def sun():
    return CelestialBody('sun', 1.32712440018e20, 6.957e8)


def face_on_pose(distance=ASTRONOMICAL_UNIT):
    # spacecraft on +x, so a plate with normal -x faces the Sun
    return Pose([distance, 0.0, 0.0], IDENTITY)


def test_solar_constant_calibration():
    assert DEFAULT_CONSTANTS.h0 == pytest.approx(6.294e7, rel=1e-3)
    assert irradiance(ASTRONOMICAL_UNIT) == pytest.approx(1361.0)


def test_inverse_square():
    r0 = DEFAULT_CONSTANTS.r0
    assert irradiance(2 * r0) == pytest.approx(DEFAULT_CONSTANTS.h0 / 4)
    assert srp_pressure(2 * ASTRONOMICAL_UNIT) == pytest.approx(
        srp_pressure(ASTRONOMICAL_UNIT) / 4)


def test_inside_sun():
    with pytest.raises(GeometryError):
        irradiance(DEFAULT_CONSTANTS.r0)


def test_pressure_at_one_au():
    constants = SolarConstants.from_solar_constant(c=2.998e8)
    assert srp_pressure(ASTRONOMICAL_UNIT, constants) == pytest.approx(
        4.540e-6, rel=1e-3)


def test_single_plate_force(sun):
    plate = Plate(1.0, 0.0, [-1, 0, 0], [0, 0, 0])
    force, torque = srp_force_torque([plate], face_on_pose(), sun)
    assert numpy.linalg.norm(force) == pytest.approx(4.540e-6, rel=1e-3)
    # pushes away from the Sun
    assert force[0] > 0
    numpy.testing.assert_allclose(torque, 0, atol=1e-20)

    mirror = Plate(1.0, 1.0, [-1, 0, 0], [0, 0, 0])
    doubled, _ = srp_force_torque([mirror], face_on_pose(), sun)
    numpy.testing.assert_allclose(doubled, 2 * force, rtol=1e-12)


def test_back_lit_plate_contributes_nothing(sun):
    plate = Plate(1.0, 0.5, [1, 0, 0], [0, 0, 0])
    force, torque = srp_force_torque([plate], face_on_pose(), sun)
    assert numpy.array_equal(force, numpy.zeros(3))
    assert numpy.array_equal(torque, numpy.zeros(3))


def test_mirrored_plates_cancel_torque(sun):
    plates = [Plate(1.0, 0.3, [-1, 0, 0], [0, 0.5, 0]),
              Plate(1.0, 0.3, [-1, 0, 0], [0, -0.5, 0])]
    _, torque = srp_force_torque(plates, face_on_pose(), sun)
    numpy.testing.assert_allclose(torque, 0, atol=1e-15)


def test_offset_plate_produces_torque(sun):
    plate = Plate(1.0, 0.0, [-1, 0, 0], [0, 1.0, 0])
    force, torque = srp_force_torque([plate], face_on_pose(), sun)
    # r x F with r along +y and F along +x
    assert torque[2] == pytest.approx(-numpy.linalg.norm(force), rel=1e-6)


def test_force_points_away_from_sun(sun):
    rng = numpy.random.default_rng(3)
    plates = []
    for axis in numpy.vstack([numpy.eye(3), -numpy.eye(3)]):
        plates.append(Plate(rng.uniform(0.1, 2.0), rng.uniform(0, 1), axis,
                            0.3 * axis))
    pose = Pose([ASTRONOMICAL_UNIT, 2e10, -1e10],
                [0.1, 0.2, 0.3, numpy.sqrt(1 - 0.14)])
    force, _ = srp_force_torque(plates, pose, sun)
    assert force.dot(pose.position.values) >= 0


def test_no_plates(sun):
    with pytest.raises(ValueError):
        srp_force_torque([], face_on_pose(), sun)


def test_cannonball(sun):
    force = srp_force_cannonball(1.0, 1.0, face_on_pose(), sun)
    assert force[0] == pytest.approx(srp_pressure(ASTRONOMICAL_UNIT))
    assert force[1] == 0


def test_plate_validation():
    with pytest.raises(ValueError):
        Plate(1.0, 1.5, [1, 0, 0], [0, 0, 0])
    with pytest.raises(ValueError):
        Plate(1.0, 0.5, [1, 1, 0], [0, 0, 0])
