from __future__ import absolute_import, division, print_function

import math

import numpy
import pytest
from scipy.spatial.transform import Rotation

from sbsim.attitude import AttitudeCommand
from sbsim.attitude.model import Mode
from sbsim.core.quaternion import IDENTITY, rotation_matrix
from sbsim.errors import GeometryError, LambertConvergenceError
from sbsim.executive import (ExecutiveSettings, SubsystemPort, Task,
                             TaskKind, TaskQueue, best_sun_direction,
                             burn_hold, charging_attitude, charging_objective,
                             dispatch, icosphere)
from sbsim.navigation import PropulsionCommand
from sbsim.navigation.tcm import TcmPlan
from sbsim.power import SolarArray

SUN = numpy.array([1.0, 0.0, 0.0])
BODY = numpy.array([0.0, 1.0, 0.0])


def angle(a, b):
    return math.degrees(math.acos(numpy.clip(numpy.dot(a, b), -1.0, 1.0)))


@pytest.fixture
def side_array():
    """Array facing +x, perpendicular to the +z boresight."""
    return [SolarArray('wing', 2.0, 0.3, 0.9, (1.0, 0.0, 0.0))]


@pytest.fixture
def top_array():
    """Array facing along the +z boresight."""
    return [SolarArray('top', 2.0, 0.3, 0.9, (0.0, 0.0, 1.0))]


def test_icosphere_vertices_are_unit():
    vertices = icosphere(1)
    assert vertices.shape == (42, 3)
    numpy.testing.assert_allclose(numpy.linalg.norm(vertices, axis=1), 1.0)


def test_best_sun_direction_of_opposed_arrays():
    arrays = [SolarArray('a', 1.0, 0.3, 0.9, (1.0, 0.0, 0.0)),
              SolarArray('b', 2.0, 0.3, 0.9, (0.0, 1.0, 0.0))]
    direction, value = best_sun_direction(arrays)
    expected = numpy.array([0.27, 0.54, 0.0])
    numpy.testing.assert_allclose(direction,
                                  expected / numpy.linalg.norm(expected),
                                  atol=1e-12)
    assert value == pytest.approx(numpy.linalg.norm(expected))


def test_full_power_weight_faces_the_sun(top_array):
    command = charging_attitude(SUN, BODY, top_array, weight=1.0)
    normal = rotation_matrix(command.quaternion).dot([0, 0, 1])
    assert angle(normal, SUN) < 0.1
    assert command.mode is Mode.RECHARGE
    assert not numpy.any(command.rate)


def test_zero_power_weight_points_at_the_body(top_array):
    command = charging_attitude(SUN, BODY, top_array, weight=0.0)
    boresight = rotation_matrix(command.quaternion).dot([0, 0, 1])
    assert angle(boresight, BODY) < 0.1


def test_compatible_goals_are_both_met(side_array):
    command = charging_attitude(SUN, BODY, side_array, weight=0.5)
    matrix = rotation_matrix(command.quaternion)
    assert angle(matrix.dot([1, 0, 0]), SUN) < 0.1
    assert angle(matrix.dot([0, 0, 1]), BODY) < 0.1


def test_half_weight_splits_the_difference(top_array):
    command = charging_attitude(SUN, BODY, top_array, weight=0.5)
    boresight = rotation_matrix(command.quaternion).dot([0, 0, 1])
    assert abs(angle(boresight, SUN) - 45.0) < 10.0
    assert abs(angle(boresight, BODY) - 45.0) < 10.0
    score = charging_objective(Rotation.from_quat(command.quaternion), SUN,
                               BODY, top_array, 0.5)
    assert score[0] > 0.70


def test_charging_validation(top_array):
    with pytest.raises(ValueError):
        charging_attitude(SUN, BODY, top_array, weight=1.5)
    with pytest.raises(GeometryError):
        charging_attitude([0, 0, 0], BODY, top_array)


class FakePort(SubsystemPort):
    """Spacecraft services with settable readings."""

    def __init__(self):
        self.arrays = [SolarArray('top', 2.0, 0.3, 0.9, (0.0, 0.0, 1.0))]
        self.charge = 0.2
        self.rates = numpy.zeros(4)
        self.fill = 0.0
        self.visible = False
        self.error = math.pi
        self.plan = None

    def soc(self):
        return self.charge

    def wheel_rates(self):
        return self.rates

    def buffer_fill(self):
        return self.fill

    def ground_visible(self, t):
        return self.visible

    def sun_direction(self, t):
        return BODY

    def target_direction(self, t):
        return SUN

    def ground_direction(self, t):
        return numpy.array([0.0, 0.0, 1.0])

    def pointing_error(self, axis, direction):
        return self.error

    def idle_command(self, t):
        return AttitudeCommand(IDENTITY)

    def plan_tcm(self, t):
        if isinstance(self.plan, Exception):
            raise self.plan
        return self.plan


@pytest.fixture
def port():
    return FakePort()


def test_idle_without_task(port):
    result = dispatch(None, port, ExecutiveSettings(), 0.0)
    assert result.mode is Mode.SMALL_BODY_POINTING
    assert not (result.done or result.rejected or result.downlink)


def test_recharge_caches_its_attitude(port):
    settings = ExecutiveSettings(retarget_period=300.0)
    task = Task(TaskKind.RECHARGE)
    first = dispatch(task, port, settings, 0.0)
    assert first.mode is Mode.RECHARGE
    assert dispatch(task, port, settings, 10.0).attitude is first.attitude
    assert dispatch(task, port, settings, 300.0).attitude is not \
        first.attitude
    port.charge = 0.95
    assert dispatch(task, port, settings, 400.0).done


def test_desaturation_until_wheels_slow_down(port):
    settings = ExecutiveSettings(wheel_threshold=400.0)
    task = Task(TaskKind.DESATURATE)
    port.rates = numpy.array([450.0, 0.0, 0.0, 0.0])
    assert dispatch(task, port, settings, 0.0).desaturate
    port.rates = numpy.array([150.0, 0.0, 0.0, 0.0])
    assert dispatch(task, port, settings, 1.0).done


def test_tcm_slews_then_burns(port):
    settings = ExecutiveSettings()
    burn = PropulsionCommand([1.0, 0.0, 0.0], 0.0, 17.8)
    port.plan = TcmPlan([0.1, 0.0, 0.0], [0.1, 0.0, 0.0], burn)
    task = Task(TaskKind.EXECUTE_TCM)
    slewing = dispatch(task, port, settings, 0.0)
    assert slewing.mode is Mode.TCM
    assert slewing.propulsion is None
    assert task.phase == 'slew'
    port.error = 0.0
    burning = dispatch(task, port, settings, 1.0)
    assert burning.propulsion is burn
    assert task.phase == 'burn'
    assert dispatch(task, port, settings, 10.0).propulsion is burn
    assert dispatch(task, port, settings, 17.8).done


def test_interrupted_burn_is_replanned(port):
    settings = ExecutiveSettings()
    queue = TaskQueue()
    first = PropulsionCommand([1.0, 0.0, 0.0], 0.0, 17.8)
    port.plan = TcmPlan([0.1, 0.0, 0.0], [0.1, 0.0, 0.0], first)
    port.error = 0.0
    task = queue.push(Task(TaskKind.EXECUTE_TCM))
    assert queue.schedule(0.0) is task
    assert dispatch(task, port, settings, 0.0).propulsion is first
    assert burn_hold(task)
    queue.reject(task, 5.0, 60.0)
    assert not burn_hold(task)
    second = PropulsionCommand([1.0, 0.0, 0.0], 65.0, 77.8)
    port.plan = TcmPlan([0.07, 0.0, 0.0], [0.07, 0.0, 0.0], second)
    port.error = math.pi
    assert queue.schedule(65.0) is task
    resumed = dispatch(task, port, settings, 65.0)
    assert resumed.propulsion is None
    assert not resumed.done
    assert task.phase == 'slew'
    assert task.payload[0] is port.plan
    port.error = 0.0
    assert dispatch(task, port, settings, 70.0).propulsion is second


def test_tcm_without_correction_is_done(port):
    port.plan = TcmPlan([0.0, 0.0, 0.0], [0.0, 0.0, 0.0], None)
    result = dispatch(Task(TaskKind.EXECUTE_TCM), port, ExecutiveSettings(),
                      0.0)
    assert result.done
    assert result.propulsion is None


def test_failed_planning_rejects_the_task(port):
    port.plan = LambertConvergenceError('No convergence.', 1.0)
    task = Task(TaskKind.EXECUTE_TCM)
    result = dispatch(task, port, ExecutiveSettings(), 0.0)
    assert result.rejected
    assert task.phase is None and task.payload is None


def test_downlink_while_ground_is_visible(port):
    task = Task(TaskKind.DOWNLINK)
    port.fill = 1e6
    port.visible = True
    result = dispatch(task, port, ExecutiveSettings(), 0.0)
    assert result.downlink
    assert result.mode is Mode.DOWNLINK
    port.visible = False
    assert dispatch(task, port, ExecutiveSettings(), 1.0).done


def test_settings_priorities_override():
    settings = ExecutiveSettings(priorities={TaskKind.DOWNLINK: 0})
    assert settings.priorities[TaskKind.DOWNLINK] == 0
    assert settings.priorities[TaskKind.RECHARGE] == 0
    assert len(settings.events()) == 4
