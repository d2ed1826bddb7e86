from __future__ import absolute_import, division, print_function

import math

import numpy
import pytest

from sbsim.core import Pose
from sbsim.core.quaternion import IDENTITY
from sbsim.environment import CelestialBody
from sbsim.environment.sunlight import ASTRONOMICAL_UNIT, SOLAR_CONSTANT_1AU
from sbsim.power import (IvcTable, SolarArray, incidence_angle, mppt_power,
                         solar_power_hf, solar_power_lf, solar_voltage_hf)


@pytest.fixture
def sun():
    return CelestialBody('sun', 1.32712440018e20, 6.957e8)


@pytest.fixture
def pose():
    return Pose([ASTRONOMICAL_UNIT, 0.0, 0.0], IDENTITY)


def array(normal=(-1, 0, 0), **kwargs):
    return SolarArray('a', 1.0, 0.3, 0.9, normal, **kwargs)


def test_incidence_angles(pose):
    sun_position = numpy.zeros(3)
    assert incidence_angle(array(), pose, sun_position) == 0.0
    assert incidence_angle(array((0, 1, 0)), pose, sun_position) == \
        pytest.approx(math.pi / 2)
    tilted = (-math.cos(math.pi / 3), math.sin(math.pi / 3), 0)
    assert incidence_angle(array(tilted), pose, sun_position) == \
        pytest.approx(math.pi / 3, abs=1e-12)


def test_lf_power_face_on(sun, pose):
    assert solar_power_lf([array()], pose, sun) == pytest.approx(367.47)


def test_lf_power_edge_on_and_back_lit(sun, pose):
    assert solar_power_lf([array((0, 0, 1))], pose, sun) == \
        pytest.approx(0.0, abs=1e-12)
    back = (math.cos(math.pi / 3), math.sin(math.pi / 3), 0)
    assert solar_power_lf([array(back)], pose, sun) == 0.0


def test_ivc_interpolation():
    table = IvcTable.default()
    assert table.voltage(0.0) == 34.0
    assert table.voltage(0.2) == pytest.approx(33.5)
    assert table.voltage(2.5) == 0.0


def test_ivc_validation():
    with pytest.raises(ValueError):
        IvcTable([0.0, 1.0], [10.0, 12.0])
    with pytest.raises(ValueError):
        IvcTable([0.5, 1.0], [10.0, 0.0])


def test_hf_voltage_scaling():
    hot = array(temperature_coefficient=0.01)
    reference = solar_voltage_hf(hot, SOLAR_CONSTANT_1AU, 0.0, 28.0, 0.2)
    assert reference == pytest.approx(33.5)
    warmer = solar_voltage_hf(hot, SOLAR_CONSTANT_1AU, 0.0, 38.0, 0.2)
    assert warmer == pytest.approx(0.9 * 33.5)
    assert solar_voltage_hf(hot, SOLAR_CONSTANT_1AU, math.pi / 2, 28.0,
                            0.2) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        solar_voltage_hf(hot, SOLAR_CONSTANT_1AU, 0.0, 28.0, -1.0)


def test_mppt_matches_grid_search():
    table = IvcTable.default()
    currents = numpy.linspace(0.0, table.short_circuit_current, 100000)
    grid = max(i * table.voltage(i) for i in currents)
    power = mppt_power(array(), SOLAR_CONSTANT_1AU, 0.0, 28.0)
    assert power == pytest.approx(grid, rel=1e-4)
    assert mppt_power(array(), SOLAR_CONSTANT_1AU, math.pi / 2, 28.0) == \
        pytest.approx(0.0, abs=1e-12)
    assert mppt_power(array(), SOLAR_CONSTANT_1AU, math.pi, 28.0) == 0.0


def test_hf_power_degrades_with_lifetime(sun, pose):
    fresh = solar_power_hf([array()], pose, sun, 28.0, t=1e6)
    aged = solar_power_hf([array(degradation_rate=1e-7)], pose, sun, 28.0,
                          t=1e6)
    assert aged == pytest.approx(0.9 * fresh)
