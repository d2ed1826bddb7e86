"""
Scenario description, simulation world, run loop and telemetry.
"""

from .scenario import (AttitudeSettings, CommsSettings, NavigationSettings,
                       PowerSettings, Scenario, VehicleConfig)
from .telemetry import (SCHEMA_VERSION, Telemetry, task_frame,
                        telemetry_columns, write_run, write_summary)
from .world import SpacecraftPort, World
from .engine import RunOutcome, run, step, sweep

__all__ = ['AttitudeSettings', 'CommsSettings', 'NavigationSettings',
           'PowerSettings', 'Scenario', 'VehicleConfig', 'SCHEMA_VERSION',
           'Telemetry', 'task_frame', 'telemetry_columns', 'write_run',
           'write_summary', 'SpacecraftPort', 'World', 'RunOutcome', 'run',
           'step', 'sweep']
