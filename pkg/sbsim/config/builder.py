"""Build a Scenario from a parsed scenario file."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import os.path
import numpy

# local imports
from sbsim.attitude.control import ControlGains
from sbsim.attitude.model import (AttitudeModel, RotorSpec, ThrusterSpec,
                                  WingSpec)
from sbsim.comms.arq import ArqConfig, FerCurve
from sbsim.comms.link_budget import LinkBudget, eirp
from sbsim.config.default_data import DEGREE
from sbsim.environment.bodies import (CelestialBody, Environment,
                                      FixedEphemeris, KeplerEphemeris)
from sbsim.environment.gravity import MassGrid
from sbsim.environment.srp import Plate
from sbsim.environment.sunlight import SolarConstants
from sbsim.errors import InvalidScenario
from sbsim.executive.dispatch import ExecutiveSettings
from sbsim.executive.tasks import TaskKind
from sbsim.navigation.lambert import lambert_solve
from sbsim.navigation.propagation import select_center, switch_center
from sbsim.navigation.state import NavState
from sbsim.power.battery import Battery
from sbsim.power.distribution import PowerLoad
from sbsim.power.solar import IvcTable, SolarArray
from sbsim.sim.scenario import (AttitudeSettings, CommsSettings,
                                NavigationSettings, PowerSettings, Scenario,
                                VehicleConfig)

logger = logging.getLogger(__name__)


class _Problems(object):
    """Collects every construction failure before reporting."""

    def __init__(self):
        self.items = []

    def attempt(self, label, function, *args, **kwargs):
        try:
            return function(*args, **kwargs)
        except (InvalidScenario, ValueError, KeyError, TypeError,
                ArithmeticError) as error:
            self.items.append('{}: {}'.format(label, error))
        return None


def rtn_matrix(position, velocity):
    """Columns are the radial, transverse and normal unit vectors."""
    radial = position / numpy.linalg.norm(position)
    normal = numpy.cross(position, velocity)
    normal = normal / numpy.linalg.norm(normal)
    return numpy.column_stack([radial, numpy.cross(normal, radial), normal])


def _relative_path(config, path):
    if not path or os.path.isabs(path) or config.source == '<string>':
        return path
    return os.path.join(os.path.dirname(os.path.abspath(config.source)),
                        path)


def _body(identifier, values, sun_mu):
    if values['ephemeris'] == 'kepler':
        ephemeris = KeplerEphemeris(
            values['semi_major_axis'], values['eccentricity'],
            values['inclination_deg'] * DEGREE, values['raan_deg'] * DEGREE,
            values['arg_periapsis_deg'] * DEGREE,
            values['mean_anomaly_deg'] * DEGREE, mu=sun_mu)
    elif values['ephemeris'] == 'fixed':
        ephemeris = FixedEphemeris(values['position'])
    else:
        raise ValueError('ephemeris must be kepler or fixed')
    return CelestialBody(identifier, values['mu'], values['radius'],
                         ephemeris, values['gravitating'])


def build_environment(config, problems):
    env = config.section('environment')
    bodies = config.components('body')
    sun = [values for identifier, values in bodies
           if identifier == env['sun']]
    if not sun:
        problems.items.append('environment: sun body {!r} is not defined.'
                              .format(env['sun']))
        return None
    sun_mu = sun[0]['mu']
    built = []
    for identifier, values in bodies:
        body = problems.attempt('body.' + identifier, _body, identifier,
                                values, sun_mu)
        if body is not None:
            built.append(body)
    if env['gravity_bodies']:
        for body in built:
            body.gravitating = body.body_id in env['gravity_bodies']
    constants = problems.attempt(
        'environment', SolarConstants.from_solar_constant,
        env['solar_constant'])
    if constants is None or len(built) != len(bodies):
        return None
    return problems.attempt('environment', Environment, built, env['sun'],
                            env['target'], env['ground'] or None, constants,
                            env['srp_model'], env['gravity_torque'])


def build_attitude_model(config, problems):
    vehicle = config.section('vehicle')
    wheels, rates = [], []
    for identifier, values in config.components('wheel'):
        wheel = problems.attempt(
            'wheel.' + identifier, RotorSpec, identifier,
            values['spin_inertia'], values['axis'], values['max_torque'],
            values['max_rate'], values['transverse_inertia'])
        if wheel is not None:
            wheels.append(wheel)
            rates.append(values['initial_rate'])
    wings = [problems.attempt(
        'wing.' + identifier, WingSpec, identifier, values['spin_inertia'],
        values['axis'], values['gimbal_rate'], values['transverse_inertia'])
        for identifier, values in config.components('wing')]
    thrusters = config.section('thrusters')
    spec = problems.attempt('thrusters', ThrusterSpec, thrusters['count'],
                            thrusters['thrust'], thrusters['lever_arm'],
                            thrusters['noise_fraction'])
    if spec is None or None in wings:
        return None, rates
    model = problems.attempt('vehicle', AttitudeModel, vehicle['inertia'],
                             wheels, wings, spec)
    return model, rates


def build_vehicle(config, problems):
    vehicle = config.section('vehicle')
    model, rates = build_attitude_model(config, problems)
    arrays = []
    for identifier, values in config.components('array'):
        ivc = None
        if values['ivc_file']:
            ivc = problems.attempt('array.' + identifier, IvcTable.from_csv,
                                   _relative_path(config, values['ivc_file']))
        arrays.append(problems.attempt(
            'array.' + identifier, SolarArray, identifier, values['area'],
            values['efficiency'], values['packing'], values['normal'],
            values['centroid'], values['occlusion'],
            values['degradation_rate'], values['temperature_coefficient'],
            values['reference_temperature'], values['design_constant'],
            ivc=ivc))
    if not arrays:
        problems.items.append('vehicle: at least one [array.<id>] section '
                              'is required.')
    plates = [problems.attempt('plate.' + identifier, Plate, values['area'],
                               values['reflectivity'], values['normal'],
                               values['center'], identifier)
              for identifier, values in config.components('plate')]
    if not plates and config.get('environment', 'srp_model') == 'nplate':
        problems.items.append('vehicle: the nplate SRP model needs at least '
                              'one [plate.<id>] section.')
    loads = [problems.attempt('load.' + identifier, PowerLoad, identifier,
                              values['power'], values['active'],
                              values['data_rate'])
             for identifier, values in config.components('load')]
    battery = config.section('battery')
    pack = problems.attempt(
        'battery', Battery, battery['capacity'],
        battery['charge_efficiency'], battery['discharge_efficiency'],
        battery['initial_soc'], battery['bus_voltage'], battery['fade_rate'],
        battery['fade_floor'])
    grid = problems.attempt('vehicle', MassGrid, vehicle['mass'],
                            vehicle['grid_half_extents'],
                            vehicle['grid_partitions'])
    parts = [model, pack, grid] + arrays + plates + loads
    if any(part is None for part in parts):
        return None
    return problems.attempt(
        'vehicle', VehicleConfig, vehicle['mass'], model, arrays, plates,
        loads, pack, grid, vehicle['cannonball_area'],
        vehicle['cannonball_coefficient'], vehicle['temperature'], rates)


def initial_nav_state(environment, epoch, t_arrive, offset_rtn, aim_rtn,
                      velocity_error_rtn):
    """
    True initial state and inertial aim offset.

    The spacecraft starts at `offset_rtn` from the target, in the target's
    radial/transverse/normal axes, on the heliocentric conic reaching the
    aim point at `t_arrive`, plus `velocity_error_rtn`.
    """
    sun = environment.sun
    target = environment.target
    start = rtn_matrix(target.position(epoch) - sun.position(epoch),
                       target.velocity(epoch) - sun.velocity(epoch))
    arrive = rtn_matrix(target.position(t_arrive) - sun.position(t_arrive),
                        target.velocity(t_arrive) - sun.velocity(t_arrive))
    aim_offset = arrive.dot(aim_rtn)
    r_abs = target.position(epoch) + start.dot(offset_rtn)
    r_aim = target.position(t_arrive) + aim_offset
    v_abs, _ = lambert_solve(r_abs - sun.position(epoch),
                             r_aim - sun.position(t_arrive),
                             t_arrive - epoch, sun.mu,
                             plane_normal=start[:, 2])
    v_abs = v_abs + sun.velocity(epoch) + start.dot(velocity_error_rtn)
    state = NavState(r_abs - sun.position(epoch),
                     v_abs - sun.velocity(epoch), sun.body_id)
    center = select_center(state, environment, epoch)
    if center != state.center:
        state = switch_center(state, state.center, center, epoch, environment)
    return state, aim_offset


def build_navigation(config, environment, epoch, problems):
    values = config.section('navigation')
    if values['t_arrive'] <= epoch:
        problems.items.append('navigation: t_arrive must follow the epoch.')
        return None
    result = problems.attempt(
        'navigation', initial_nav_state, environment, epoch,
        values['t_arrive'], numpy.asarray(values['initial_offset_rtn']),
        numpy.asarray(values['aim_offset_rtn']),
        numpy.asarray(values['velocity_error_rtn']))
    if result is None:
        return None
    state, aim_offset = result
    return problems.attempt(
        'navigation', NavigationSettings, state, values['t_arrive'],
        aim_offset, values['sigma_position'], values['sigma_velocity'],
        values['max_thrust'], values['max_delta_v'], values['min_delta_v'],
        values['tcm_enabled'], values['soi_hysteresis'])


def link_budget(link):
    """LinkBudget from the typed [link] section."""
    return LinkBudget(
        eirp(link['power'], link['antenna_gain'], link['line_loss']),
        link['g_over_t'], {'other': link['other_losses']}, link['eb_n0'],
        link['coding_gain'], link['margin'], link['frequency'],
        link['beamwidth_deg'] * DEGREE, link['rate_limit'])


def build_comms(config, problems):
    link = config.section('link')
    arq = config.section('arq')
    budget = problems.attempt('link', link_budget, link)
    if arq['fer_file']:
        curve = problems.attempt('arq', FerCurve.from_csv,
                                 _relative_path(config, arq['fer_file']))
    else:
        curve = problems.attempt(
            'arq', FerCurve.waterfall, link['eb_n0'] - link['coding_gain'],
            arq['fer_at_operating'], arq['fer_slope'])
    arq_config = problems.attempt('arq', ArqConfig, arq['window'],
                                  arq['ack_error'], curve)
    buffer = config.section('buffer')
    if not 0 <= buffer['initial_fill'] <= buffer['capacity']:
        problems.items.append('buffer: initial_fill must lie in '
                              '[0, capacity].')
    if budget is None or arq_config is None:
        return None
    return CommsSettings(budget, arq_config, buffer['capacity'],
                         buffer['initial_fill'], link['ground_windows'])


def build_executive(config, problems):
    values = config.section('executive')
    if not values['soc_charge_threshold'] < values['recharge_complete'] <= 1:
        problems.items.append('executive: soc_charge_threshold < '
                              'recharge_complete <= 1 is required.')
    if not 0 <= values['charging_weight'] <= 1:
        problems.items.append('executive: charging_weight must lie in '
                              '[0, 1].')
    if not values['tcm_check_period'] > 0:
        problems.items.append('executive: tcm_check_period must be '
                              'positive.')
    priorities = {
        TaskKind.RECHARGE: values['priority_recharge'],
        TaskKind.DESATURATE: values['priority_desaturate'],
        TaskKind.EXECUTE_TCM: values['priority_tcm'],
        TaskKind.DOWNLINK: values['priority_downlink'],
    }
    if not (priorities[TaskKind.RECHARGE] < priorities[TaskKind.EXECUTE_TCM]
            < priorities[TaskKind.DOWNLINK]):
        problems.items.append('executive: priorities must order Recharge < '
                              'ExecuteTCM < Downlink.')
    return problems.attempt(
        'executive', ExecutiveSettings, values['soc_charge_threshold'],
        values['soc_band'], values['recharge_complete'],
        values['charging_weight'], values['wheel_threshold'],
        values['miss_threshold'], values['miss_band'],
        values['miss_holdoff'], values['tcm_check_period'],
        values['buffer_threshold'], values['pointing_tolerance_deg'] * DEGREE,
        values['retarget_period'], values['reject_backoff'],
        values['boresight'], values['secondary_axis'],
        values['thrust_axis'], values['antenna_axis'], priorities)


def build_scenario(config):
    """
    Scenario described by a ScenarioConfig.

    Raises
    ------
    InvalidScenario
        Listing every problem found.

    """
    problems = _Problems()
    problems.items.extend(config.unknown_keys())
    if problems.items:
        raise InvalidScenario('Invalid scenario file {}.'
                              .format(config.source), problems.items)
    scenario = problems.attempt('scenario', config.section, 'scenario')
    environment = problems.attempt('environment', build_environment, config,
                                   problems)
    vehicle = problems.attempt('vehicle', build_vehicle, config, problems)
    navigation = None
    if environment is not None and scenario is not None:
        navigation = problems.attempt('navigation', build_navigation, config,
                                      environment, scenario['epoch'],
                                      problems)
    attitude_values = problems.attempt('attitude', config.section,
                                       'attitude')
    attitude = None
    if vehicle is not None and attitude_values is not None:
        gains = problems.attempt(
            'attitude', ControlGains.from_bandwidth,
            vehicle.attitude_model.j_cm, attitude_values['bandwidth'],
            attitude_values['damping'])
        if gains is not None:
            attitude = AttitudeSettings(
                gains, attitude_values['slew_rate'],
                attitude_values['slew_accel_limit'] or None,
                attitude_values['max_rotation_per_step_rad'],
                attitude_values['desat_torque_fraction'])
    power_values = problems.attempt('power', config.section, 'power')
    battery_values = problems.attempt('battery', config.section, 'battery')
    power = None
    if power_values is not None and battery_values is not None:
        power = problems.attempt('power', PowerSettings,
                                 power_values['fidelity'],
                                 power_values['bus_efficiency'],
                                 battery_values['soc_model'])
    comms = problems.attempt('comms', build_comms, config, problems)
    executive = problems.attempt('executive', build_executive, config,
                                 problems)
    telemetry = problems.attempt('telemetry', config.section, 'telemetry')
    if not problems.items:
        parts = (scenario, environment, vehicle, navigation, attitude, power,
                 comms, executive, telemetry)
        if any(part is None for part in parts):
            problems.items.append('scenario: incomplete description.')
        else:
            result = problems.attempt(
                'scenario', Scenario, vehicle, environment, navigation,
                attitude, power, comms, executive, scenario['epoch'],
                scenario['duration'], scenario['dt'], scenario['seed'],
                scenario['name'], telemetry['float_format'],
                telemetry['write_tasks'])
            if result is not None:
                return result
    raise InvalidScenario('Invalid scenario file {}.'.format(config.source),
                          problems.items)
