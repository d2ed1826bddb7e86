from __future__ import absolute_import, division, print_function

import math

import numpy
import pytest

from sbsim.environment import CelestialBody, Environment, FixedEphemeris
from sbsim.environment.bodies import MU_SUN
from sbsim.environment.sunlight import ASTRONOMICAL_UNIT
from sbsim.errors import GeometryError
from sbsim.navigation import (RETROGRADE, NavState, inject_state_error,
                              kepler_propagate, lambert_solve, plan_tcm,
                              predict_miss, propagate)
from sbsim.sim.scenario import VehicleConfig

DAY = 86400.0


def test_half_period_circular_transfer():
    v1, v2 = lambert_solve([1, 0, 0], [-1, 0, 0], math.pi, 1.0,
                           plane_normal=[0, 0, 1])
    numpy.testing.assert_allclose(v1, [0, 1, 0], atol=1e-9)
    numpy.testing.assert_allclose(v2, [0, -1, 0], atol=1e-9)


def test_retrograde_half_period():
    v1, _ = lambert_solve([1, 0, 0], [-1, 0, 0], math.pi, 1.0, RETROGRADE,
                          plane_normal=[0, 0, 1])
    numpy.testing.assert_allclose(v1, [0, -1, 0], atol=1e-9)


@pytest.mark.parametrize('tof', [0.3, 1.7, 4.0])
def test_lambert_recovers_propagated_velocity(tof):
    r1 = numpy.array([1.0, 0.2, 0.1])
    v1 = numpy.array([-0.1, 0.95, 0.05])
    r2, v2 = kepler_propagate(r1, v1, tof, 1.0)
    solved1, solved2 = lambert_solve(r1, r2, tof, 1.0,
                                     plane_normal=numpy.cross(r1, v1))
    numpy.testing.assert_allclose(solved1, v1, atol=1e-9)
    numpy.testing.assert_allclose(solved2, v2, atol=1e-9)


def test_degenerate_geometry():
    with pytest.raises(GeometryError):
        lambert_solve([1, 0, 0], [1, 0, 0], 0.0, 1.0)
    with pytest.raises(GeometryError):
        lambert_solve([1, 0, 0], [1, 0, 0], 1.0, 1.0)
    with pytest.raises(GeometryError):
        lambert_solve([1, 0, 0], [-1, 0, 0], math.pi, 1.0)


@pytest.fixture
def cruise():
    """Circular 1 AU orbit and a target at its 30-day position."""
    r0 = numpy.array([ASTRONOMICAL_UNIT, 0.0, 0.0])
    v0 = numpy.array([0.0, math.sqrt(MU_SUN / ASTRONOMICAL_UNIT), 0.0])
    t_arrive = 30 * DAY
    aim, _ = kepler_propagate(r0, v0, t_arrive, MU_SUN)
    sun = CelestialBody('sun', MU_SUN, 6.957e8)
    target = CelestialBody('rock', 5.0, 2000.0, FixedEphemeris(aim))
    env = Environment([sun, target], 'sun', 'rock')
    return env, NavState(r0, v0, 'sun'), t_arrive


def test_no_correction_on_transfer_orbit(cruise):
    env, x, t_arrive = cruise
    assert predict_miss(x, env, env.target, 0.0, t_arrive) < 1.0
    plan = plan_tcm(x, env, env.target, 0.0, t_arrive, 2.0, 1.0, 178.0,
                    min_delta_v=1e-3)
    assert plan.magnitude < 1e-3
    assert plan.command is None
    assert not plan.capped


def test_correction_removes_cross_track_error(cruise):
    env, x, t_arrive = cruise
    perturbed = NavState(x.position, x.velocity + [0, 0, 1.0], 'sun')
    miss = predict_miss(perturbed, env, env.target, 0.0, t_arrive)
    assert miss > 1e6
    plan = plan_tcm(perturbed, env, env.target, 0.0, t_arrive, 2.0, 1.0,
                    178.0)
    assert plan.magnitude == pytest.approx(1.0, rel=0.05)
    corrected = NavState(perturbed.position,
                         perturbed.velocity + plan.delta_v, 'sun')
    assert predict_miss(corrected, env, env.target, 0.0, t_arrive) < \
        0.1 * miss
    burn = plan.command
    assert burn.magnitude == pytest.approx(1.0)
    assert burn.duration == pytest.approx(178.0 * plan.magnitude)


def test_small_correction_delivers_planned_delta_v(cruise):
    env, x, t_arrive = cruise
    perturbed = NavState(x.position, x.velocity + [0, 0, 1e-3], 'sun')
    plan = plan_tcm(perturbed, env, env.target, 0.0, t_arrive, 2.0, 1.0,
                    178.0)
    burn = plan.command
    assert burn.duration < 1.0
    coast = Environment([CelestialBody('sun', MU_SUN, 6.957e8,
                                       gravitating=False)], 'sun',
                        srp_model='none')
    start = NavState([ASTRONOMICAL_UNIT, 0, 0], [0, 0, 0], 'sun')
    trace = propagate(start, burn, 1.0, 2.0, coast, VehicleConfig(178.0))
    delivered = trace[-1][1].velocity
    assert numpy.linalg.norm(delivered) == pytest.approx(plan.magnitude,
                                                         rel=1e-9)
    numpy.testing.assert_allclose(delivered, plan.delta_v, rtol=1e-9)


def test_correction_is_capped(cruise):
    env, x, t_arrive = cruise
    perturbed = NavState(x.position, x.velocity + [0, 0, 1.0], 'sun')
    plan = plan_tcm(perturbed, env, env.target, 0.0, t_arrive, 0.1, 1.0,
                    178.0)
    assert plan.capped
    assert plan.magnitude == pytest.approx(0.1)
    numpy.testing.assert_allclose(plan.direction,
                                  plan.required_delta_v / numpy.linalg.norm(
                                      plan.required_delta_v))


def test_arrival_in_the_past(cruise):
    env, x, _ = cruise
    with pytest.raises(ValueError):
        plan_tcm(x, env, env.target, 10.0, 10.0, 2.0, 1.0, 178.0)


def test_state_errors():
    x = NavState([1e11, 0, 0], [0, 3e4, 0], 'sun')
    same = inject_state_error(x, 0.0, 0.0, seed=1)
    assert numpy.array_equal(same.values, x.values)
    first = inject_state_error(x, 100.0, 0.01, seed=42)
    second = inject_state_error(x, 100.0, 0.01, seed=42)
    assert numpy.array_equal(first.values, second.values)
    assert not numpy.array_equal(first.values, x.values)
    # input untouched
    assert x.position[1] == 0
    with pytest.raises(ValueError):
        inject_state_error(x, -1.0, 0.0)
