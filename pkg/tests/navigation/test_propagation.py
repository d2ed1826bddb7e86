from __future__ import absolute_import, division, print_function

import math

import numpy
import pytest

from sbsim.environment import (CelestialBody, Environment, FixedEphemeris,
                               KeplerEphemeris, Plate)
from sbsim.environment.sunlight import ASTRONOMICAL_UNIT
from sbsim.errors import GeometryError
from sbsim.navigation import (NavState, PropulsionCommand,
                              covariance_time_update, kepler_propagate,
                              nav_acceleration, propagate, select_center,
                              sphere_of_influence, state_transition_jacobian,
                              switch_center)
from sbsim.sim.scenario import VehicleConfig

MU_EARTH = 3.986e14


def earth_environment():
    earth = CelestialBody('earth', MU_EARTH, 6.371e6)
    return Environment([earth], 'earth', srp_model='none')


def test_srp_only_acceleration():
    sun = CelestialBody('sun', 1.32712440018e20, 6.957e8, gravitating=False)
    env = Environment([sun], 'sun', srp_model='nplate')
    vehicle = VehicleConfig(178.0, plates=[Plate(1.0, 0.0, [-1, 0, 0],
                                                 [0, 0, 0])])
    x = NavState([ASTRONOMICAL_UNIT, 0, 0], [0, 0, 0], 'sun')
    acceleration = nav_acceleration(x, numpy.zeros(3), env, vehicle, 0.0)
    assert numpy.linalg.norm(acceleration) == pytest.approx(2.551e-8,
                                                            rel=1e-3)


def test_coasting_without_forces():
    sun = CelestialBody('sun', 1.0, 0.0, gravitating=False)
    env = Environment([sun], 'sun', srp_model='none')
    x = NavState([5.0, 0, 0], [1.0, 0, 0], 'sun')
    trace = propagate(x, None, 1.0, 10.0, env, VehicleConfig(178.0))
    assert len(trace) == 11
    t, final = trace[-1]
    assert t == 10.0
    numpy.testing.assert_allclose(final.position - x.position, [10, 0, 0],
                                  atol=1e-12)


def test_thrust_window():
    sun = CelestialBody('sun', 1.0, 0.0, gravitating=False)
    env = Environment([sun], 'sun', srp_model='none')
    burn = PropulsionCommand([178.0, 0, 0], 0.0, 2.0)
    trace = propagate(NavState([1, 0, 0], [0, 0, 0], 'sun'), burn, 1.0, 5.0,
                      env, VehicleConfig(178.0))
    numpy.testing.assert_allclose(trace[-1][1].velocity, [2, 0, 0],
                                  atol=1e-12)
    with pytest.raises(ValueError):
        PropulsionCommand([1, 0, 0], 3.0, 3.0)


def test_sub_step_burn_is_prorated():
    sun = CelestialBody('sun', 1.0, 0.0, gravitating=False)
    env = Environment([sun], 'sun', srp_model='none')
    burn = PropulsionCommand([1.0, 0, 0], 0.0, 0.178)
    assert burn.overlap(0.0, 1.0) == pytest.approx(0.178)
    assert burn.overlap(1.0, 1.0) == 0.0
    trace = propagate(NavState([1, 0, 0], [0, 0, 0], 'sun'), burn, 1.0, 3.0,
                      env, VehicleConfig(178.0))
    numpy.testing.assert_allclose(trace[-1][1].velocity, [1e-3, 0, 0],
                                  rtol=1e-12)


def test_burn_straddling_steps():
    sun = CelestialBody('sun', 1.0, 0.0, gravitating=False)
    env = Environment([sun], 'sun', srp_model='none')
    burn = PropulsionCommand([0, 178.0, 0], 0.5, 2.25)
    numpy.testing.assert_allclose(burn.mean_thrust(0.0, 1.0), [0, 89.0, 0])
    numpy.testing.assert_allclose(burn.mean_thrust(2.0, 1.0), [0, 44.5, 0])
    trace = propagate(NavState([1, 0, 0], [0, 0, 0], 'sun'), burn, 1.0, 4.0,
                      env, VehicleConfig(178.0))
    numpy.testing.assert_allclose(trace[-1][1].velocity, [0, 1.75, 0],
                                  rtol=1e-12)


def test_circular_orbit_closure():
    env = earth_environment()
    radius = 7e6
    speed = math.sqrt(MU_EARTH / radius)
    period = 2 * math.pi * math.sqrt(radius ** 3 / MU_EARTH)
    steps = int(round(period))
    x = NavState([radius, 0, 0], [0, speed, 0], 'earth')
    trace = propagate(x, None, period / steps, period, env,
                      VehicleConfig(178.0), switch=False)
    radii = [numpy.linalg.norm(state.position) for _, state in trace]
    assert max(abs(r - radius) for r in radii) / radius < 1e-6
    assert numpy.linalg.norm(trace[-1][1].position - x.position) < 1.0


def test_center_switch_round_trip():
    sun = CelestialBody('sun', 1.32712440018e20, 6.957e8)
    rock = CelestialBody('rock', 5.0, 2000.0,
                         KeplerEphemeris(1.8e11, 0.1, mean_anomaly=0.3))
    env = Environment([sun, rock], 'sun', 'rock')
    x = NavState([1.8e11, 3e8, 1e6], [10.0, 2.0e4, -3.0], 'sun')
    there = switch_center(x, 'sun', 'rock', 1000.0, env)
    back = switch_center(there, 'rock', 'sun', 1000.0, env)
    assert back.center == 'sun'
    # one rounding of a 1e11 m coordinate
    numpy.testing.assert_allclose(back.position, x.position, atol=1e-4)
    numpy.testing.assert_allclose(back.velocity, x.velocity, atol=1e-9)


def test_center_switch_round_trip_is_exact_for_representable_offsets():
    sun = CelestialBody('sun', 1.32712440018e20, 6.957e8)
    rock = CelestialBody('rock', 5.0, 2000.0,
                         FixedEphemeris([1.5e11, -2.0e10, 0.0]))
    x = NavState([1.8e11, 3e8, 1e6], [10.0, 2.0e4, -3.0], 'sun')
    back = switch_center(switch_center(x, sun, rock), rock, sun)
    numpy.testing.assert_allclose(back.values, x.values, rtol=0, atol=1e-9)
    env = Environment([sun, rock], 'sun', 'rock')
    with pytest.raises(KeyError):
        switch_center(x, 'sun', 'comet', 0.0, env)


def test_switch_between_bodies_at_origin():
    a = CelestialBody('a', 1.0, 0.0)
    b = CelestialBody('b', 2.0, 0.0)
    x = NavState([1, 2, 3], [4, 5, 6], 'a')
    y = switch_center(x, a, b)
    assert numpy.array_equal(y.values, x.values)
    assert y.center == 'b'


def test_select_center_with_hysteresis():
    sun = CelestialBody('sun', 1.32712440018e20, 6.957e8)
    rock = CelestialBody('rock', 1e9, 2000.0,
                         FixedEphemeris([1.8e11, 0, 0]))
    env = Environment([sun, rock], 'sun', 'rock')
    radius = sphere_of_influence(rock, sun)
    inside = NavState([1.8e11 + 0.5 * radius, 0, 0], [0, 0, 0], 'sun')
    assert select_center(inside, env) == 'rock'
    # just outside the sphere but within the hysteresis band
    edge = NavState([1.02 * radius, 0, 0], [0, 0, 0], 'rock')
    assert select_center(edge, env) == 'rock'
    outside = NavState([1.2 * radius, 0, 0], [0, 0, 0], 'rock')
    assert select_center(outside, env) == 'sun'


def test_gravity_gradient_on_axis():
    env = earth_environment()
    r = 7e6
    jacobian = state_transition_jacobian(
        NavState([r, 0, 0], [0, 0, 0], 'earth'), env)
    expected = numpy.diag([2 * MU_EARTH / r ** 3, -MU_EARTH / r ** 3,
                           -MU_EARTH / r ** 3])
    numpy.testing.assert_allclose(jacobian.gravity_gradient, expected,
                                  rtol=1e-12)
    assert numpy.array_equal(jacobian.matrix[:3, 3:], numpy.eye(3))
    with pytest.raises(GeometryError):
        state_transition_jacobian(NavState([0, 0, 0], [0, 0, 0], 'earth'),
                                  env)


def test_kepler_propagation_matches_rk4():
    env = earth_environment()
    x = NavState([7e6, 1e5, 0], [-50.0, 7.6e3, 900.0], 'earth')
    trace = propagate(x, None, 1.0, 3000.0, env, VehicleConfig(178.0),
                      switch=False)
    r, v = kepler_propagate(x.position, x.velocity, 3000.0, MU_EARTH)
    numpy.testing.assert_allclose(r, trace[-1][1].position, atol=1e-2)
    numpy.testing.assert_allclose(v, trace[-1][1].velocity, atol=1e-5)
    r0, v0 = kepler_propagate(x.position, x.velocity, 0.0, MU_EARTH)
    assert numpy.array_equal(r0, x.position)


def test_covariance_time_update_without_gravity():
    sun = CelestialBody('sun', 1.0, 0.0, gravitating=False)
    env = Environment([sun], 'sun', srp_model='none')
    jacobian = state_transition_jacobian(
        NavState([1e6, 0, 0], [0, 0, 0], 'sun'), env)
    phi = jacobian.transition(10.0)
    numpy.testing.assert_allclose(phi[:3, 3:], 10.0 * numpy.eye(3),
                                  atol=1e-12)
    covariance = numpy.diag([1.0, 1.0, 1.0, 0.01, 0.01, 0.01])
    updated = covariance_time_update(covariance, phi, 0.5 * numpy.eye(6))
    assert updated[0, 0] == pytest.approx(1.0 + 100.0 * 0.01 + 0.5)
    assert updated[0, 3] == pytest.approx(10.0 * 0.01)
    numpy.testing.assert_array_equal(updated, updated.T)
