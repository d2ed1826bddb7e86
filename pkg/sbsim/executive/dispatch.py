"""Translate the Active task into attitude, propulsion and comms commands."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import math
import numpy

# local imports
from sbsim.attitude.guidance import pointing_attitude
from sbsim.attitude.model import AttitudeCommand, Mode
from sbsim.errors import SimulationError
from sbsim.executive.charging import charging_attitude
from sbsim.executive.events import default_events
from sbsim.executive.tasks import DEFAULT_PRIORITIES, TaskKind

logger = logging.getLogger(__name__)


class ExecutiveSettings(object):
    """
    Thresholds and pointing conventions of the executive.

    Attributes
    ----------
    soc_threshold, soc_band : float
        Recharge trigger and its hysteresis band.
    recharge_complete : float
        SoC ending a Recharge task.
    charging_weight : float
        w of the charging-attitude heuristic.
    wheel_threshold : float
        Wheel rate triggering a desaturation, rad/s.
    miss_threshold, miss_band : float
        TCM trigger on the predicted miss and its band, m.
    miss_holdoff : float
        Time after which the TCM event re-arms regardless of the miss, s.
    tcm_check_period : float
        Period of the miss prediction, s.
    buffer_threshold : float
        Buffer fill triggering a downlink, bytes.
    pointing_tolerance : float
        Pointing error below which a slew is complete, rad.
    retarget_period : float
        Age after which cached pointing targets are recomputed, s.
    reject_backoff : float
        Delay before a rejected task may restart, s.
    boresight, secondary_axis, thrust_axis, antenna_axis : numpy.ndarray
        Spacecraft-frame axes: instrument, axis kept toward the Sun,
        propulsion and high-gain antenna.
    priorities : dict
        TaskKind -> priority.

    """

    def __init__(self, soc_threshold=0.30, soc_band=0.05,
                 recharge_complete=0.9, charging_weight=0.5,
                 wheel_threshold=400.0, miss_threshold=5000.0,
                 miss_band=1000.0, miss_holdoff=7200.0,
                 tcm_check_period=1800.0, buffer_threshold=5e7,
                 pointing_tolerance=math.radians(1.0),
                 retarget_period=300.0, reject_backoff=60.0,
                 boresight=(0.0, 0.0, 1.0), secondary_axis=(0.0, 1.0, 0.0),
                 thrust_axis=(0.0, 0.0, 1.0), antenna_axis=(1.0, 0.0, 0.0),
                 priorities=None):
        self.soc_threshold = float(soc_threshold)
        self.soc_band = float(soc_band)
        self.recharge_complete = float(recharge_complete)
        self.charging_weight = float(charging_weight)
        self.wheel_threshold = float(wheel_threshold)
        self.miss_threshold = float(miss_threshold)
        self.miss_band = float(miss_band)
        self.miss_holdoff = float(miss_holdoff)
        self.tcm_check_period = float(tcm_check_period)
        self.buffer_threshold = float(buffer_threshold)
        self.pointing_tolerance = float(pointing_tolerance)
        self.retarget_period = float(retarget_period)
        self.reject_backoff = float(reject_backoff)
        self.boresight = numpy.asarray(boresight, dtype=float)
        self.secondary_axis = numpy.asarray(secondary_axis, dtype=float)
        self.thrust_axis = numpy.asarray(thrust_axis, dtype=float)
        self.antenna_axis = numpy.asarray(antenna_axis, dtype=float)
        self.priorities = dict(DEFAULT_PRIORITIES)
        self.priorities.update(priorities or {})

    def events(self):
        return default_events(self.soc_threshold, self.soc_band,
                              self.wheel_threshold, self.miss_threshold,
                              self.miss_band, self.miss_holdoff,
                              self.buffer_threshold)


class SubsystemPort(object):
    """
    Services the executive needs from the rest of the spacecraft.

    The simulation world implements every method.
    """

    arrays = ()

    def soc(self):
        raise NotImplementedError

    def wheel_rates(self):
        raise NotImplementedError

    def buffer_fill(self):
        raise NotImplementedError

    def ground_visible(self, t):
        raise NotImplementedError

    def sun_direction(self, t):
        raise NotImplementedError

    def target_direction(self, t):
        raise NotImplementedError

    def ground_direction(self, t):
        raise NotImplementedError

    def pointing_error(self, axis, direction):
        raise NotImplementedError

    def idle_command(self, t):
        raise NotImplementedError

    def plan_tcm(self, t):
        raise NotImplementedError


class DispatchResult(object):
    """
    Commands produced for one step.

    Attributes
    ----------
    attitude : AttitudeCommand
        Target attitude; a new object means a new slew.
    propulsion : PropulsionCommand or None
    desaturate : bool
    downlink : bool
    done : bool
        The task finished and should leave the queue.
    rejected : bool
        A subsystem refused the task.

    """

    def __init__(self, attitude=None, propulsion=None, desaturate=False,
                 downlink=False, done=False, rejected=False):
        self.attitude = attitude
        self.propulsion = propulsion
        self.desaturate = desaturate
        self.downlink = downlink
        self.done = done
        self.rejected = rejected

    @property
    def mode(self):
        if self.attitude is None:
            return Mode.SMALL_BODY_POINTING
        return self.attitude.mode


def _stale(task, t, settings):
    return (task.payload is None
            or t - task.payload[0] >= settings.retarget_period)


def _recharge(task, port, settings, t):
    if port.soc() >= settings.recharge_complete:
        return DispatchResult(port.idle_command(t), done=True)
    if _stale(task, t, settings):
        command = charging_attitude(port.sun_direction(t),
                                    port.target_direction(t), port.arrays,
                                    settings.charging_weight,
                                    settings.boresight)
        task.payload = (t, command)
    return DispatchResult(task.payload[1])


def _desaturate(task, port, settings, t):
    rates = numpy.abs(port.wheel_rates())
    if not rates.size or numpy.max(rates) < 0.5 * settings.wheel_threshold:
        return DispatchResult(port.idle_command(t), done=True)
    return DispatchResult(port.idle_command(t), desaturate=True)


def _burn_attitude(plan, port, settings, t):
    quaternion = pointing_attitude(settings.thrust_axis, plan.direction,
                                   settings.secondary_axis,
                                   port.sun_direction(t))
    return AttitudeCommand(quaternion, numpy.zeros(3), Mode.TCM)


def _execute_tcm(task, port, settings, t):
    if task.phase == 'burn':
        plan, burn, attitude = task.payload
        if t >= burn.stop:
            logger.info('TCM of %.4f m/s completed at t=%s s.',
                        plan.magnitude, t)
            return DispatchResult(port.idle_command(t), done=True)
        return DispatchResult(attitude, propulsion=burn)
    if task.phase is None:
        plan = port.plan_tcm(t)
        if plan.command is None:
            return DispatchResult(port.idle_command(t), done=True)
        task.payload = (plan, None, _burn_attitude(plan, port, settings, t))
        task.phase = 'slew'
        logger.info('TCM planned at t=%s s: %.4f m/s.', t, plan.magnitude)
    plan, _, attitude = task.payload
    if port.pointing_error(settings.thrust_axis, plan.direction) \
            >= settings.pointing_tolerance:
        return DispatchResult(attitude)
    plan = port.plan_tcm(t)
    if plan.command is None:
        return DispatchResult(port.idle_command(t), done=True)
    task.payload = (plan, plan.command, attitude)
    task.phase = 'burn'
    return DispatchResult(attitude, propulsion=plan.command)


def _downlink(task, port, settings, t):
    if not port.ground_visible(t) or port.buffer_fill() <= 0:
        return DispatchResult(port.idle_command(t), done=True)
    if _stale(task, t, settings):
        quaternion = pointing_attitude(settings.antenna_axis,
                                       port.ground_direction(t),
                                       settings.secondary_axis,
                                       port.sun_direction(t))
        task.payload = (t, AttitudeCommand(quaternion, numpy.zeros(3),
                                           Mode.DOWNLINK))
    return DispatchResult(task.payload[1], downlink=True)



def burn_hold(task):
    """Whether `task` is a TCM holding its burn attitude."""
    return (task is not None and task.kind is TaskKind.EXECUTE_TCM
            and task.phase == 'burn')

HANDLERS = {
    TaskKind.RECHARGE: _recharge,
    TaskKind.DESATURATE: _desaturate,
    TaskKind.EXECUTE_TCM: _execute_tcm,
    TaskKind.DOWNLINK: _downlink,
}


def dispatch(task, port, settings, t):
    """
    Commands realizing the Active task at time t.

    Parameters
    ----------
    task : Task or None
        Active task; None commands small-body pointing.
    port : SubsystemPort
    settings : ExecutiveSettings
    t : float
        s.

    Returns
    -------
    DispatchResult
        `rejected` is set when planning failed with a simulation error.

    """
    if task is None:
        return DispatchResult(port.idle_command(t))
    try:
        return HANDLERS[task.kind](task, port, settings, t)
    except SimulationError as error:
        logger.warning('Task %s rejected: %s', task.label, error)
        task.restart()
        return DispatchResult(port.idle_command(t), rejected=True)
