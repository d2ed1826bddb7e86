"""
Celestial bodies, sunlight and disturbance force/torque models.
"""

from .sunlight import SolarConstants, irradiance, srp_pressure
from .bodies import (CelestialBody, Environment, FixedEphemeris,
                     KeplerEphemeris)
from .gravity import MassGrid, gravity_force, gravity_torque
from .srp import Plate, srp_force_cannonball, srp_force_torque

__all__ = ['SolarConstants', 'irradiance', 'srp_pressure', 'CelestialBody',
           'Environment', 'FixedEphemeris', 'KeplerEphemeris', 'MassGrid',
           'gravity_force', 'gravity_torque', 'Plate',
           'srp_force_cannonball', 'srp_force_torque']
