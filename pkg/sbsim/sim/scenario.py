"""Scenario description: vehicle, environment and subsystem settings."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy

# local imports
from sbsim.attitude.control import ControlGains
from sbsim.comms.arq import ArqConfig
from sbsim.comms.buffer import DEFAULT_CAPACITY
from sbsim.executive.dispatch import ExecutiveSettings


class VehicleConfig(object):
    """
    Mass properties and equipment of the spacecraft.

    Attributes
    ----------
    mass : float
        kg.
    attitude_model : sbsim.attitude.AttitudeModel
    arrays : list of sbsim.power.SolarArray
    plates : list of sbsim.environment.Plate
    loads : list of sbsim.power.PowerLoad
    battery : sbsim.power.Battery
    mass_grid : sbsim.environment.MassGrid or None
    cannonball_area, cannonball_coefficient : float
        Sphere-equivalent SRP parameters.
    temperature : float
        Array temperature for the high-fidelity model, deg C.
    initial_wheel_rates : numpy.ndarray
        rad/s.

    """

    def __init__(self, mass, attitude_model=None, arrays=(), plates=(),
                 loads=(), battery=None, mass_grid=None,
                 cannonball_area=1.0, cannonball_coefficient=1.3,
                 temperature=28.0, initial_wheel_rates=None):
        if not mass > 0:
            raise ValueError('Spacecraft mass must be positive.')
        self.mass = float(mass)
        self.attitude_model = attitude_model
        self.arrays = list(arrays)
        self.plates = list(plates)
        self.loads = list(loads)
        self.battery = battery
        self.mass_grid = mass_grid
        self.cannonball_area = float(cannonball_area)
        self.cannonball_coefficient = float(cannonball_coefficient)
        self.temperature = float(temperature)
        n_wheels = len(attitude_model.wheels) if attitude_model else 0
        self.initial_wheel_rates = (numpy.zeros(n_wheels)
                                    if initial_wheel_rates is None
                                    else numpy.asarray(initial_wheel_rates,
                                                       dtype=float))


class NavigationSettings(object):
    """
    Initial trajectory and maneuver parameters.

    Attributes
    ----------
    initial_state : sbsim.navigation.NavState
        True state at the scenario epoch.
    t_arrive : float
        Arrival epoch, s.
    aim_offset : numpy.ndarray
        Aim point relative to the target at arrival, inertial, m.
    sigma_position, sigma_velocity : float
        Onboard knowledge errors, m and m/s.
    max_thrust, max_delta_v, min_delta_v : float
        N, m/s, m/s.
    tcm_enabled : bool
    soi_hysteresis : float

    """

    def __init__(self, initial_state, t_arrive, aim_offset=(0.0, 0.0, 0.0),
                 sigma_position=0.0, sigma_velocity=0.0, max_thrust=1.0,
                 max_delta_v=2.0, min_delta_v=1e-3, tcm_enabled=True,
                 soi_hysteresis=0.05):
        self.initial_state = initial_state
        self.t_arrive = float(t_arrive)
        self.aim_offset = numpy.asarray(aim_offset, dtype=float)
        self.sigma_position = float(sigma_position)
        self.sigma_velocity = float(sigma_velocity)
        self.max_thrust = float(max_thrust)
        self.max_delta_v = float(max_delta_v)
        self.min_delta_v = float(min_delta_v)
        self.tcm_enabled = bool(tcm_enabled)
        self.soi_hysteresis = float(soi_hysteresis)


class AttitudeSettings(object):
    """Control gains, slew limits and desaturation torque fraction."""

    def __init__(self, gains, slew_rate=0.005, slew_accel=None,
                 max_rotation=0.01, desat_torque_fraction=0.5):
        if not isinstance(gains, ControlGains):
            raise TypeError('gains must be ControlGains.')
        self.gains = gains
        self.slew_rate = float(slew_rate)
        self.slew_accel = slew_accel
        self.max_rotation = float(max_rotation)
        self.desat_torque_fraction = float(desat_torque_fraction)


class PowerSettings(object):
    """Generation fidelity, bus efficiency and SoC model selection."""

    FIDELITIES = ('lf', 'hf')
    SOC_MODELS = ('lf', 'coulomb')

    def __init__(self, fidelity='lf', bus_efficiency=0.9, soc_model='lf'):
        if fidelity not in self.FIDELITIES:
            raise ValueError('Power fidelity must be lf or hf.')
        if soc_model not in self.SOC_MODELS:
            raise ValueError('SoC model must be lf or coulomb.')
        if not 0 < bus_efficiency <= 1:
            raise ValueError('Bus efficiency must lie in (0, 1].')
        self.fidelity = fidelity
        self.bus_efficiency = float(bus_efficiency)
        self.soc_model = soc_model


class CommsSettings(object):
    """
    Link budget, ARQ, buffer and ground availability.

    Attributes
    ----------
    budget : sbsim.comms.LinkBudget
    arq : sbsim.comms.ArqConfig
    buffer_capacity, initial_fill : float
        bytes.
    ground_windows : list of (float, float)
        Ground-station availability, s.

    """

    def __init__(self, budget, arq=None, buffer_capacity=DEFAULT_CAPACITY,
                 initial_fill=0.0, ground_windows=()):
        self.budget = budget
        self.arq = arq or ArqConfig()
        self.buffer_capacity = float(buffer_capacity)
        self.initial_fill = float(initial_fill)
        self.ground_windows = list(ground_windows)

    def ground_visible(self, t):
        return any(start <= t < end for start, end in self.ground_windows)


class Scenario(object):
    """
    Complete simulation setup.

    Attributes
    ----------
    name : str
    epoch, duration, dt : float
        s; the duration is a whole number of steps.
    seed : int
    vehicle : VehicleConfig
    environment : sbsim.environment.Environment
    navigation : NavigationSettings
    attitude : AttitudeSettings
    power : PowerSettings
    comms : CommsSettings
    executive : sbsim.executive.ExecutiveSettings
    float_format : str
        Telemetry number format.
    write_tasks : bool
        Whether the task lifecycle log is written.

    """

    def __init__(self, vehicle, environment, navigation, attitude, power,
                 comms, executive=None, epoch=0.0, duration=0.0, dt=1.0,
                 seed=0, name='scenario', float_format='%.17g',
                 write_tasks=True):
        if not dt > 0:
            raise ValueError('Time step must be positive.')
        steps = duration / dt
        if duration < 0 or abs(steps - round(steps)) > 1e-9 * max(1, steps):
            raise ValueError('Duration must be a non-negative multiple of '
                             'the time step.')
        self.name = name
        self.epoch = float(epoch)
        self.duration = float(duration)
        self.dt = float(dt)
        self.seed = int(seed)
        self.vehicle = vehicle
        self.environment = environment
        self.navigation = navigation
        self.attitude = attitude
        self.power = power
        self.comms = comms
        self.executive = executive or ExecutiveSettings()
        self.float_format = float_format
        self.write_tasks = write_tasks

    @property
    def steps(self):
        return int(round(self.duration / self.dt))
