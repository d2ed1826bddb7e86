"""Module holding scenario keys, their types and default values."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import collections
import math
import os.path

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'data')
DEFAULT_SCENARIO = os.path.join(DATA_DIR, 'cruise.cfg')
OUTPUT_DIR_VARIABLE = 'SBSIM_OUTPUT_DIR'

Key = collections.namedtuple('Key', ['kind', 'default'])
NO_DEFAULT = None


def _keys(*entries):
    return collections.OrderedDict(
        (name, Key(kind, default)) for name, kind, default in entries)


class DefaultSections(object):
    """Sections appearing at most once in a scenario file."""

    def __init__(self):
        self.sections = collections.OrderedDict([
            ('scenario', _keys(
                ('name', 'str', 'scenario'),
                ('epoch', 'float', 0.0),
                ('duration', 'float', 43200.0),
                ('dt', 'float', 1.0),
                ('seed', 'int', 0))),
            ('environment', _keys(
                ('sun', 'str', 'sun'),
                ('target', 'str', 'target'),
                ('ground', 'str', ''),
                ('srp_model', 'str', 'nplate'),
                ('gravity_torque', 'bool', True),
                ('gravity_bodies', 'names', ''),
                ('solar_constant', 'float', 1361.0))),
            ('vehicle', _keys(
                ('mass', 'float', 178.0),
                ('inertia', 'matrix', '18, 16, 12'),
                ('grid_half_extents', 'vector', '0.5, 0.5, 0.4'),
                ('grid_partitions', 'int', 2),
                ('cannonball_area', 'float', 1.5),
                ('cannonball_coefficient', 'float', 1.3),
                ('temperature', 'float', 28.0))),
            ('thrusters', _keys(
                ('count', 'int', 12),
                ('thrust', 'float', 0.02),
                ('lever_arm', 'float', 0.3),
                ('noise_fraction', 'float', 0.0))),
            ('battery', _keys(
                ('capacity', 'float', 80.0),
                ('charge_efficiency', 'float', 0.95),
                ('discharge_efficiency', 'float', 0.9),
                ('initial_soc', 'float', 1.0),
                ('bus_voltage', 'float', 28.0),
                ('fade_rate', 'float', 0.0),
                ('fade_floor', 'float', 0.5),
                ('soc_model', 'str', 'lf'))),
            ('power', _keys(
                ('fidelity', 'str', 'lf'),
                ('bus_efficiency', 'float', 0.9))),
            ('link', _keys(
                ('power', 'float', 50.0),
                ('antenna_gain', 'float', 28.1),
                ('line_loss', 'float', 1.0),
                ('g_over_t', 'float', 50.0),
                ('other_losses', 'float', 2.0),
                ('eb_n0', 'float', 4.2),
                ('coding_gain', 'float', 7.3),
                ('margin', 'float', 3.0),
                ('frequency', 'float', 8.45e9),
                ('beamwidth_deg', 'float', 0.1),
                ('rate_limit', 'float', 8e6),
                ('ground_windows', 'windows', ''))),
            ('arq', _keys(
                ('window', 'int', 1),
                ('ack_error', 'float', 0.0),
                ('fer_file', 'str', ''),
                ('fer_at_operating', 'float', 1e-5),
                ('fer_slope', 'float', 4.0))),
            ('buffer', _keys(
                ('capacity', 'float', 1e9),
                ('initial_fill', 'float', 0.0))),
            ('navigation', _keys(
                ('tcm_enabled', 'bool', True),
                ('t_arrive', 'float', NO_DEFAULT),
                ('initial_offset_rtn', 'vector', NO_DEFAULT),
                ('aim_offset_rtn', 'vector', '0, 0, 0'),
                ('velocity_error_rtn', 'vector', '0, 0, 0'),
                ('sigma_position', 'float', 0.0),
                ('sigma_velocity', 'float', 0.0),
                ('max_thrust', 'float', 1.0),
                ('max_delta_v', 'float', 2.0),
                ('min_delta_v', 'float', 1e-3),
                ('soi_hysteresis', 'float', 0.05))),
            ('attitude', _keys(
                ('bandwidth', 'float', 0.05),
                ('damping', 'float', 1.0),
                ('slew_rate', 'float', 0.005),
                ('slew_accel_limit', 'float', 2e-4),
                ('max_rotation_per_step_rad', 'float', 0.01),
                ('desat_torque_fraction', 'float', 0.5))),
            ('executive', _keys(
                ('soc_charge_threshold', 'float', 0.30),
                ('soc_band', 'float', 0.05),
                ('recharge_complete', 'float', 0.9),
                ('charging_weight', 'float', 0.5),
                ('wheel_threshold', 'float', 400.0),
                ('miss_threshold', 'float', 5000.0),
                ('miss_band', 'float', 1000.0),
                ('miss_holdoff', 'float', 7200.0),
                ('tcm_check_period', 'float', 1800.0),
                ('buffer_threshold', 'float', 5e7),
                ('pointing_tolerance_deg', 'float', 1.0),
                ('retarget_period', 'float', 300.0),
                ('reject_backoff', 'float', 60.0),
                ('boresight', 'vector', '0, 0, 1'),
                ('secondary_axis', 'vector', '0, 1, 0'),
                ('thrust_axis', 'vector', '0, 0, 1'),
                ('antenna_axis', 'vector', '1, 0, 0'),
                ('priority_recharge', 'int', 0),
                ('priority_desaturate', 'int', 1),
                ('priority_tcm', 'int', 2),
                ('priority_downlink', 'int', 3))),
            ('telemetry', _keys(
                ('write_tasks', 'bool', True),
                ('float_format', 'str', '%.17g'))),
        ])


class DefaultTemplates(object):
    """Sections named <prefix>.<id>, one per component."""

    def __init__(self):
        self.sections = collections.OrderedDict([
            ('body', _keys(
                ('mu', 'float', NO_DEFAULT),
                ('radius', 'float', 0.0),
                ('ephemeris', 'str', 'fixed'),
                ('position', 'vector', '0, 0, 0'),
                ('semi_major_axis', 'float', 1.495978707e11),
                ('eccentricity', 'float', 0.0),
                ('inclination_deg', 'float', 0.0),
                ('raan_deg', 'float', 0.0),
                ('arg_periapsis_deg', 'float', 0.0),
                ('mean_anomaly_deg', 'float', 0.0),
                ('gravitating', 'bool', True))),
            ('array', _keys(
                ('area', 'float', NO_DEFAULT),
                ('efficiency', 'float', 0.28),
                ('packing', 'float', 0.9),
                ('normal', 'vector', NO_DEFAULT),
                ('centroid', 'vector', '0, 0, 0'),
                ('occlusion', 'float', 1.0),
                ('degradation_rate', 'float', 0.0),
                ('temperature_coefficient', 'float', 0.004),
                ('reference_temperature', 'float', 28.0),
                ('design_constant', 'float', 1.0),
                ('ivc_file', 'str', ''))),
            ('plate', _keys(
                ('area', 'float', NO_DEFAULT),
                ('reflectivity', 'float', 0.3),
                ('normal', 'vector', NO_DEFAULT),
                ('center', 'vector', '0, 0, 0'))),
            ('wheel', _keys(
                ('spin_inertia', 'float', NO_DEFAULT),
                ('axis', 'vector', NO_DEFAULT),
                ('max_torque', 'float', 0.01),
                ('max_rate', 'float', 600.0),
                ('transverse_inertia', 'float', 0.0),
                ('initial_rate', 'float', 0.0))),
            ('wing', _keys(
                ('spin_inertia', 'float', NO_DEFAULT),
                ('axis', 'vector', NO_DEFAULT),
                ('gimbal_rate', 'float', 0.0),
                ('transverse_inertia', 'float', 0.0))),
            ('load', _keys(
                ('power', 'float', NO_DEFAULT),
                ('active', 'str', 'always'),
                ('data_rate', 'float', 0.0))),
        ])


SECTIONS = DefaultSections().sections
TEMPLATES = DefaultTemplates().sections
DEGREE = math.pi / 180.0
