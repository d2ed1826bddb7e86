"""
Attitude dynamics, guidance, control, allocation and desaturation.
"""

from .model import (AttitudeCommand, AttitudeModel, Mode, RotorSpec,
                    ThrusterSpec, WingSpec, attitude_layout)
from .dynamics import (angular_momentum, attitude_derivative,
                       inertial_momentum, step_attitude)
from .allocation import Allocation, allocate_actuators
from .guidance import eigen_axis_guidance, pointing_attitude, pointing_error
from .control import ControlGains, attitude_error, tracking_controller
from .desaturation import DesatProfile, desaturate, desaturation_step

__all__ = ['AttitudeCommand', 'AttitudeModel', 'Mode', 'RotorSpec',
           'ThrusterSpec', 'WingSpec', 'attitude_layout', 'angular_momentum',
           'attitude_derivative', 'inertial_momentum', 'step_attitude',
           'Allocation', 'allocate_actuators', 'eigen_axis_guidance',
           'pointing_attitude', 'pointing_error', 'ControlGains',
           'attitude_error', 'tracking_controller', 'DesatProfile',
           'desaturate', 'desaturation_step']
