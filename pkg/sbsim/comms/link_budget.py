"""Deep-space link budget and supportable data rate."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import collections
import math
import numpy

# local imports
from sbsim.environment.sunlight import SPEED_OF_LIGHT
from sbsim.errors import GeometryError

BOLTZMANN_DB = -228.6
DEFAULT_FREQUENCY = 8.45e9
DEFAULT_BEAMWIDTH = math.radians(0.1)
RATE_LIMIT = 8e6


def to_db(value):
    return 10.0 * math.log10(value)


def from_db(value):
    return 10.0 ** (value / 10.0)


def eirp(power, antenna_gain, line_loss=0.0):
    """Effective isotropic radiated power, dBW, from watts and dB terms."""
    if not power > 0:
        raise ValueError('Transmit power must be positive.')
    return to_db(power) + antenna_gain - line_loss


def free_space_loss(range_m, frequency=DEFAULT_FREQUENCY):
    """20 log10(4 pi d / lambda), dB."""
    if not range_m > 0:
        raise GeometryError('Link range must be positive.')
    wavelength = SPEED_OF_LIGHT / frequency
    return 20.0 * math.log10(4.0 * math.pi * range_m / wavelength)


def pointing_loss(error, beamwidth=DEFAULT_BEAMWIDTH):
    """Gaussian-beam loss 12 (theta / theta_3dB)^2, dB."""
    return 12.0 * (error / beamwidth) ** 2


class LinkBudget(object):
    """
    Downlink budget terms.

    Attributes
    ----------
    eirp : float
        dBW.
    g_over_t : float
        Receiver figure of merit, dB/K.
    losses : collections.OrderedDict
        Named loss contributors, dB; `free_space` and `pointing` are
        recomputed from the geometry when a range is supplied.
    eb_n0 : float
        Required Eb/N0, dB.
    coding_gain : float
        dB.
    margin : float
        dB.
    frequency : float
        Hz.
    beamwidth : float
        Half-power beamwidth, rad.
    rate_limit : float
        Data-rate ceiling, bps.

    """

    def __init__(self, eirp, g_over_t, losses=None, eb_n0=4.2,
                 coding_gain=0.0, margin=3.0, frequency=DEFAULT_FREQUENCY,
                 beamwidth=DEFAULT_BEAMWIDTH, rate_limit=RATE_LIMIT):
        if margin < 0:
            raise ValueError('Link margin must be non-negative.')
        self.eirp = float(eirp)
        self.g_over_t = float(g_over_t)
        self.losses = collections.OrderedDict(losses or {})
        self.eb_n0 = float(eb_n0)
        self.coding_gain = float(coding_gain)
        self.margin = float(margin)
        self.frequency = float(frequency)
        self.beamwidth = float(beamwidth)
        self.rate_limit = float(rate_limit)

    def line_items(self, range_m=None, pointing_error=0.0):
        """Loss contributors for a geometry, dB."""
        items = collections.OrderedDict(self.losses)
        if range_m is not None:
            items['free_space'] = free_space_loss(range_m, self.frequency)
            items['pointing'] = pointing_loss(pointing_error, self.beamwidth)
        elif pointing_error:
            items['pointing'] = (items.get('pointing', 0.0)
                                 + pointing_loss(pointing_error,
                                                 self.beamwidth))
        return items

    def total_loss(self, range_m=None, pointing_error=0.0):
        return sum(self.line_items(range_m, pointing_error).values())


def carrier_to_noise(budget, range_m=None, pointing_error=0.0):
    """
    Received carrier-to-noise density C/N0 = EIRP + G/T - L - k, dB-Hz.

    Without a range the stored losses are used as they are.
    """
    if range_m is not None and not range_m > 0:
        raise GeometryError('Link range must be positive.')
    return (budget.eirp + budget.g_over_t
            - budget.total_loss(range_m, pointing_error) - BOLTZMANN_DB)


def supportable_data_rate(c_n0, budget):
    """
    Data rate R_b = C/N0 - Eb/N0 + coding gain - margin, in bps.

    The linear rate is clamped to the budget rate limit.
    """
    if not numpy.isfinite(c_n0):
        raise ValueError('C/N0 must be finite.')
    rate_db = c_n0 - budget.eb_n0 + budget.coding_gain - budget.margin
    return min(from_db(rate_db), budget.rate_limit)
