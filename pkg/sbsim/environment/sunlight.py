"""Sunlight irradiance and solar radiation pressure versus Sun distance."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# local imports
from sbsim.errors import GeometryError

ASTRONOMICAL_UNIT = 1.495978707e11
SOLAR_RADIUS = 6.957e8
SPEED_OF_LIGHT = 299792458.0
SOLAR_CONSTANT_1AU = 1361.0


class SolarConstants(object):
    """
    Constants of the inverse-square sunlight model.

    Attributes
    ----------
    h0 : float
        Power density at the solar surface, W/m2.
    r0 : float
        Solar radius, m.
    c : float
        Speed of light, m/s.

    """

    def __init__(self, h0, r0=SOLAR_RADIUS, c=SPEED_OF_LIGHT):
        if not (h0 > 0 and r0 > 0 and c > 0):
            raise ValueError('Solar constants must be strictly positive.')
        self.h0 = float(h0)
        self.r0 = float(r0)
        self.c = float(c)

    @classmethod
    def from_solar_constant(cls, flux=SOLAR_CONSTANT_1AU,
                            distance=ASTRONOMICAL_UNIT, r0=SOLAR_RADIUS,
                            c=SPEED_OF_LIGHT):
        """Calibrate h0 so that the irradiance at `distance` is `flux`."""
        return cls(flux * (distance / r0) ** 2, r0, c)


DEFAULT_CONSTANTS = SolarConstants.from_solar_constant()


def irradiance(distance, constants=DEFAULT_CONSTANTS):
    """
    Power density of sunlight at `distance` from the Sun center.

    Parameters
    ----------
    distance : float
        Sun distance, m. Must exceed the solar radius.
    constants : SolarConstants

    Returns
    -------
    float
        H = h0 (r0 / d)^2, W/m2.

    """
    if not distance > constants.r0:
        raise GeometryError('Distance {} m lies inside the Sun.'
                            .format(distance))
    return constants.h0 * (constants.r0 / distance) ** 2


def srp_pressure(distance, constants=DEFAULT_CONSTANTS):
    """Solar radiation pressure H(d)/c, N/m2."""
    return irradiance(distance, constants) / constants.c
