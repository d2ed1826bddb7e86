"""Simulation world and the fixed-order step."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import copy
import logging
import numpy

# local imports
from sbsim.attitude.allocation import allocate_actuators
from sbsim.attitude.control import tracking_controller
from sbsim.attitude.desaturation import desaturation_step
from sbsim.attitude.dynamics import step_attitude
from sbsim.attitude.guidance import (eigen_axis_guidance, pointing_attitude,
                                     pointing_error)
from sbsim.attitude.model import AttitudeCommand, Mode
from sbsim.comms.arq import arq_effective_rate
from sbsim.comms.buffer import DataBuffer, downlink_session
from sbsim.comms.link_budget import carrier_to_noise, supportable_data_rate
from sbsim.core.frames import Pose
from sbsim.environment.gravity import gravity_torque
from sbsim.environment.srp import srp_force_torque
from sbsim.errors import ActuatorSaturation, ZeroThroughputError
from sbsim.executive.dispatch import SubsystemPort, burn_hold, dispatch
from sbsim.executive.events import ExecutiveState, evaluate_events
from sbsim.executive.scheduler import TaskQueue
from sbsim.navigation.propagation import select_center, step_nav, \
    switch_center
from sbsim.navigation.state_errors import inject_state_error
from sbsim.navigation.tcm import TcmPlan, plan_tcm, predict_miss
from sbsim.power.battery import bus_current, soc_update_coulomb, \
    soc_update_lf
from sbsim.power.distribution import net_energy, net_power
from sbsim.power.solar import solar_power_hf, solar_power_lf
from sbsim.sim.telemetry import Telemetry, telemetry_columns

logger = logging.getLogger(__name__)


def _unit(vector):
    return vector / numpy.linalg.norm(vector)


class SpacecraftPort(SubsystemPort):
    """Executive view of a World."""

    def __init__(self, world):
        self.world = world
        self.arrays = world.vehicle.arrays
        self._idle = None

    def soc(self):
        return self.world.executive_soc

    def wheel_rates(self):
        return self.world.attitude['omega_rw']

    def buffer_fill(self):
        return self.world.buffer.fill

    def ground_visible(self, t):
        return self.world.ground_visible(t)

    def _direction(self, body, t):
        return _unit(body.position(t) - self.world.position(t))

    def sun_direction(self, t):
        return self._direction(self.world.environment.sun, t)

    def target_direction(self, t):
        return self._direction(self.world.environment.target, t)

    def ground_direction(self, t):
        return self._direction(self.world.environment.ground, t)

    def pointing_error(self, axis, direction):
        return pointing_error(self.world.attitude['q'], axis, direction)

    def idle_command(self, t):
        """Small-body pointing, re-aimed every retarget period."""
        settings = self.world.scenario.executive
        if self._idle is None or t - self._idle[0] >= \
                settings.retarget_period:
            quaternion = pointing_attitude(settings.boresight,
                                           self.target_direction(t),
                                           settings.secondary_axis,
                                           self.sun_direction(t))
            self._idle = (t, AttitudeCommand(quaternion, numpy.zeros(3),
                                             Mode.SMALL_BODY_POINTING))
        return self._idle[1]

    def plan_tcm(self, t):
        world = self.world
        navigation = world.scenario.navigation
        if t >= navigation.t_arrive:
            return TcmPlan(numpy.zeros(3), numpy.zeros(3), None)
        return plan_tcm(world.nav_estimate(), world.environment,
                        world.environment.target, t, navigation.t_arrive,
                        navigation.max_delta_v, navigation.max_thrust,
                        world.vehicle.mass, navigation.aim_offset,
                        world.environment.sun.mu, navigation.min_delta_v)


class World(object):
    """
    Ground truth, onboard estimates and executive state of one run.

    The world owns private copies of the mutable scenario parts, so a
    Scenario can be run several times with identical results.

    Attributes
    ----------
    t : float
        Current time, s.
    step_index : int
    nav : NavState
        True translational state.
    attitude : StateVector
        True attitude state.
    battery : Battery
    soc_estimate : float
        Coulomb-counting SoC.
    buffer : DataBuffer
    queue : TaskQueue
    telemetry : Telemetry

    """

    def __init__(self, scenario):
        self.scenario = scenario
        self.environment = scenario.environment
        self.vehicle = scenario.vehicle
        self.model = scenario.vehicle.attitude_model
        self.t = scenario.epoch
        self.step_index = 0
        self.rng = numpy.random.default_rng(scenario.seed)
        self.nav = scenario.navigation.initial_state.copy()
        self.battery = copy.deepcopy(scenario.vehicle.battery)
        self.soc_estimate = self.battery.soc
        self.min_soc = self.battery.soc
        self.buffer = DataBuffer(scenario.comms.buffer_capacity,
                                 scenario.comms.initial_fill)
        self.queue = TaskQueue()
        self.events = scenario.executive.events()
        self.port = SpacecraftPort(self)
        idle = self.port.idle_command(self.t)
        self.attitude = self.model.initial_state(
            idle.quaternion, wheel_rates=self.vehicle.initial_wheel_rates)
        self.target_command = idle
        self.guidance = []
        self.delta_v = 0.0
        self.downlinked = 0.0
        self.miss_distance = None
        self._last_check = None
        self.initial_distance = self.target_distance(self.t)
        self.telemetry = Telemetry(telemetry_columns(
            [w.rotor_id for w in self.model.wheels]))

    # geometry
    def position(self, t):
        return self.nav.position + self.environment[self.nav.center] \
            .position(t)

    def velocity(self, t):
        return self.nav.velocity + self.environment[self.nav.center] \
            .velocity(t)

    def target_distance(self, t):
        return float(numpy.linalg.norm(
            self.position(t) - self.environment.target.position(t)))

    def ground_visible(self, t):
        return (self.environment.ground is not None
                and self.scenario.comms.ground_visible(t))

    def pose(self, t):
        return Pose(self.position(t), self.attitude['q'])

    @property
    def executive_soc(self):
        if self.scenario.power.soc_model == 'coulomb':
            return self.soc_estimate
        return self.battery.soc

    def nav_estimate(self):
        """Onboard estimate: the true state plus a seeded knowledge error."""
        navigation = self.scenario.navigation
        return inject_state_error(self.nav, navigation.sigma_position,
                                  navigation.sigma_velocity, rng=self.rng)

    # phase 1
    def environment_torque(self, t):
        """Gravity-gradient and SRP torques, spacecraft frame, N m."""
        env = self.environment
        pose = self.pose(t)
        torque = numpy.zeros(3)
        if env.gravity_torque and self.vehicle.mass_grid is not None:
            for body in env.gravitating_bodies():
                torque = torque + gravity_torque(body, self.vehicle.mass_grid,
                                                 pose, t)
        if env.srp_model == 'nplate' and self.vehicle.plates:
            torque = torque + srp_force_torque(self.vehicle.plates, pose,
                                               env.sun, env.constants, t)[1]
        return torque

    # phase 2
    def _predict_miss(self, t):
        settings = self.scenario.executive
        navigation = self.scenario.navigation
        if not navigation.tcm_enabled or t >= navigation.t_arrive:
            return None
        if self._last_check is not None and \
                t - self._last_check < settings.tcm_check_period:
            return None
        self._last_check = t
        self.miss_distance = predict_miss(
            self.nav_estimate(), self.environment, self.environment.target,
            t, navigation.t_arrive, navigation.aim_offset,
            self.environment.sun.mu)
        logger.debug('Predicted miss %.1f m at t=%s s.', self.miss_distance,
                     t)
        return self.miss_distance

    def run_executive(self, t):
        """Evaluate events, schedule and dispatch; returns DispatchResult."""
        settings = self.scenario.executive
        state = ExecutiveState(t, self.executive_soc,
                               self.attitude['omega_rw'],
                               self._predict_miss(t), self.buffer.fill,
                               self.ground_visible(t))
        evaluate_events(state, self.events, self.queue, settings.priorities)
        task = self.queue.schedule(t)
        result = dispatch(task, self.port, settings, t)
        if task is not None and result.rejected:
            self.queue.reject(task, t, settings.reject_backoff)
        elif task is not None and result.done:
            self.queue.complete(task, t)
            task = self.queue.schedule(t)
            if task is not None:
                result = dispatch(task, self.port, settings, t)
                if result.rejected:
                    self.queue.reject(task, t, settings.reject_backoff)
        return result

    # phase 3
    def command_for_step(self, result, dt):
        """Next guidance command, re-planning a slew on a new target."""
        if result.attitude is not self.target_command:
            self.target_command = result.attitude
            settings = self.scenario.attitude
            self.guidance = eigen_axis_guidance(
                self.attitude['q'], result.attitude.quaternion,
                settings.slew_rate, dt, settings.slew_accel,
                result.attitude.mode)
        if self.guidance:
            return self.guidance.pop(0)
        return self.target_command

    def actuate(self, command, result, t, dt, flags):
        """Controller, allocation and desaturation; returns (u, accel)."""
        settings = self.scenario.attitude
        model = self.model
        u = tracking_controller(self.attitude, command, settings.gains, model)
        try:
            allocation = allocate_actuators(u, model, self.attitude)
        except ActuatorSaturation as error:
            allocation = error.allocation
            flags['saturated'] = 1
            logger.warning('t=%s s: %s', t, error)
            task = self.queue.active
            if burn_hold(task):
                self.queue.reject(task, t,
                                  self.scenario.executive.reject_backoff)
        flags['wheel_rate_limited'] = int(allocation.rate_limited)
        wheel_accel = allocation.wheel_accel
        thruster_torque = allocation.thruster_torque
        if result.desaturate and len(model.wheels):
            authority = model.thrusters.max_axis_torque - numpy.max(
                numpy.abs(thruster_torque))
            accel, torque, limited = desaturation_step(
                self.attitude['omega_rw'], model, dt,
                settings.desat_torque_fraction, authority)
            wheel_accel = wheel_accel + accel
            thruster_torque = thruster_torque + torque
            flags['desat_limited'] = int(limited)
        noise = model.thrusters.noise_fraction
        if noise > 0 and numpy.any(thruster_torque):
            thruster_torque = thruster_torque * (
                1.0 + noise * self.rng.standard_normal(3))
        body_torque = thruster_torque - model.wheel_matrix.dot(wheel_accel)
        return u, body_torque, wheel_accel

    # phase 5
    def solar_power(self, pose, t):
        env = self.environment
        if self.scenario.power.fidelity == 'hf':
            return solar_power_hf(self.vehicle.arrays, pose, env.sun,
                                  self.vehicle.temperature, env.constants, t)
        return solar_power_lf(self.vehicle.arrays, pose, env.sun,
                              env.constants, t)

    def net_power(self, pose, t, mode):
        solar = self.solar_power(pose, t)
        settings = self.scenario.executive
        on_target = pointing_error(
            pose.quaternion, settings.boresight,
            self.environment.target.position(t) - pose.position.values) \
            < settings.pointing_tolerance
        power = net_power(solar, self.vehicle.loads, t,
                          self.scenario.power.fidelity == 'hf',
                          self.scenario.power.bus_efficiency, mode.value,
                          on_target)
        return solar, power, on_target

    def update_battery(self, start_power, end_power, t, dt, flags):
        energy = net_energy([t, t + dt], [start_power, end_power])
        flags['soc_clamped'] = int(self.battery.apply(
            soc_update_lf(self.battery, energy)))
        voltage = self.battery.bus_voltage
        estimate = self.soc_estimate + soc_update_coulomb(
            self.battery, [t, t + dt],
            [bus_current(start_power, voltage),
             bus_current(end_power, voltage)], t + dt)
        self.soc_estimate = min(1.0, max(0.0, estimate))
        self.min_soc = min(self.min_soc, self.executive_soc)
        return energy

    # phase 6
    def link_rates(self, t):
        """(C/N0 dB-Hz, R_b bps, R_eff bps) toward the ground body."""
        ground = self.environment.ground
        if ground is None:
            return float('nan'), 0.0, 0.0
        comms = self.scenario.comms
        offset = ground.position(t) - self.position(t)
        error = pointing_error(self.attitude['q'],
                               self.scenario.executive.antenna_axis, offset)
        c_n0 = carrier_to_noise(comms.budget, numpy.linalg.norm(offset),
                                error)
        rate = supportable_data_rate(c_n0, comms.budget)
        try:
            effective = arq_effective_rate(rate, c_n0, comms.arq)
        except ZeroThroughputError:
            effective = 0.0
        return c_n0, rate, effective

    def step(self):
        """
        Advance one time step.

        Order: environment torques, executive, guidance/control/allocation,
        attitude and navigation integration, power, comms, telemetry.
        """
        scenario = self.scenario
        t, dt = self.t, scenario.dt
        flags = dict(soc_clamped=0, saturated=0, wheel_rate_limited=0,
                     desat_limited=0, buffer_overflow=0)
        disturbance = self.environment_torque(t)
        result = self.run_executive(t)
        mode = result.mode
        command = self.command_for_step(result, dt)
        u, body_torque, wheel_accel = self.actuate(command, result, t, dt,
                                                   flags)
        start_pose = self.pose(t)
        _, start_power, on_target = self.net_power(start_pose, t, mode)
        thrust = numpy.zeros(3)
        if result.propulsion is not None:
            result.propulsion.check_limit(scenario.navigation.max_thrust)
            thrust = result.propulsion.mean_thrust(t, dt)
        self.attitude = step_attitude(
            self.attitude, body_torque, disturbance, self.model, dt,
            wheel_accel, scenario.attitude.max_rotation, t)
        nav = step_nav(self.nav, thrust, self.environment, self.vehicle, t,
                       dt, start_pose.quaternion)
        self.delta_v += numpy.linalg.norm(thrust) / self.vehicle.mass * dt
        self.t = t_next = scenario.epoch + (self.step_index + 1) * dt
        center = select_center(nav, self.environment, t_next,
                               scenario.navigation.soi_hysteresis)
        if center != nav.center:
            logger.info('Center of integration %s -> %s at t=%s s.',
                        nav.center, center, t_next)
            nav = switch_center(nav, nav.center, center, t_next,
                                self.environment)
        self.nav = nav
        end_pose = self.pose(t_next)
        solar, end_power, _ = self.net_power(end_pose, t_next, mode)
        self.update_battery(start_power, end_power, t, dt, flags)
        c_n0, rate, effective = self.link_rates(t_next)
        generated = sum(load.data_rate for load in self.vehicle.loads
                        if load.is_active(t, mode.value, on_target)) * dt
        flags['buffer_overflow'] = int(self.buffer.ingest(generated) > 0)
        if result.downlink and self.ground_visible(t):
            self.buffer, drained = downlink_session(self.buffer, effective,
                                                    dt)
            self.downlinked += drained
        self.step_index += 1
        self.record(t_next, u, mode, solar, end_power, c_n0, rate,
                    effective, flags)

    # phase 7
    def record(self, t, u, mode, solar, power, c_n0, rate, effective, flags):
        position = self.position(t)
        velocity = self.velocity(t)
        q = self.attitude['q']
        omega = self.attitude['omega']
        active = self.queue.active
        record = dict(
            t=t, x=position[0], y=position[1], z=position[2],
            vx=velocity[0], vy=velocity[1], vz=velocity[2],
            center=self.nav.center, distance=self.target_distance(t),
            delta_v=self.delta_v, q1=q[0], q2=q[1], q3=q[2], q4=q[3],
            wx=omega[0], wy=omega[1], wz=omega[2], mode=mode.value,
            ux=u[0], uy=u[1], uz=u[2], p_solar=solar, p_net=power,
            soc=self.battery.soc, soc_estimate=self.soc_estimate,
            c_n0=c_n0, rate_b=rate, rate_eff=effective,
            buffer_fill=self.buffer.fill, downlinked=self.downlinked,
            active_task=active.label if active is not None else '',
            queue_depth=len(self.queue))
        for wheel, value in zip(self.model.wheels, self.attitude['omega_rw']):
            record['rw_{}'.format(wheel.rotor_id)] = value
        record.update(flags)
        self.telemetry.append(record)

    def summary(self):
        """Run summary figures."""
        return dict(
            name=self.scenario.name,
            steps=self.step_index,
            final_time=self.t,
            initial_distance=self.initial_distance,
            final_distance=self.target_distance(self.t),
            total_delta_v=self.delta_v,
            min_soc=self.min_soc,
            final_soc=self.battery.soc,
            bytes_downlinked=self.downlinked,
            bytes_dropped=self.buffer.dropped,
            task_counts=self.queue.counts(),
        )
