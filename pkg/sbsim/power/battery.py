"""Battery model and state-of-charge updates."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import numpy
from scipy.integrate import trapezoid

logger = logging.getLogger(__name__)


class Battery(object):
    """
    Battery pack.

    Attributes
    ----------
    capacity : float
        Max capacity E_max(0), Wh.
    charge_efficiency, discharge_efficiency : float
        e_b+ and e_b-, in (0, 1].
    soc : float
        State of charge Q_b in [0, 1].
    bus_voltage : float
        Bus voltage used to express capacity in Ah, V.
    fade_rate : float
        Linear capacity fade of E_max(t), 1/s.
    fade_floor : float
        Lowest fraction E_max(t) / E_max(0).

    """

    def __init__(self, capacity, charge_efficiency=0.95,
                 discharge_efficiency=0.9, soc=1.0, bus_voltage=28.0,
                 fade_rate=0.0, fade_floor=0.5):
        if not capacity > 0:
            raise ValueError('Battery capacity must be positive.')
        for value in (charge_efficiency, discharge_efficiency):
            if not 0 < value <= 1:
                raise ValueError('Battery efficiencies must lie in (0, 1].')
        if not 0 <= soc <= 1:
            raise ValueError('Battery SoC must lie in [0, 1].')
        self.capacity = float(capacity)
        self.charge_efficiency = float(charge_efficiency)
        self.discharge_efficiency = float(discharge_efficiency)
        self.soc = float(soc)
        self.bus_voltage = float(bus_voltage)
        self.fade_rate = float(fade_rate)
        self.fade_floor = float(fade_floor)

    def capacity_at(self, t):
        """E_max(t), Wh; never above E_max(0)."""
        return self.capacity * max(self.fade_floor, 1.0 - self.fade_rate * t)

    @property
    def energy(self):
        """Stored energy for the LF model, Wh."""
        return self.soc * self.capacity

    def apply(self, delta):
        """
        Add `delta` to the SoC, clamping to [0, 1].

        Returns
        -------
        bool
            True when the result had to be clamped.

        """
        value = self.soc + delta
        clamped = value < 0.0 or value > 1.0
        if clamped:
            logger.warning('Battery SoC %.4f clamped to [0, 1].', value)
        self.soc = min(1.0, max(0.0, value))
        return clamped


def branch_energy(battery, net_energy):
    """Energy reaching the cells after the charge/discharge efficiency, Wh."""
    if net_energy > 0:
        return battery.charge_efficiency * net_energy
    return net_energy / battery.discharge_efficiency


def soc_update_lf(battery, net_energy):
    """
    LF change of SoC for an energy surplus (or deficit) in Wh.

    Surplus: e_b+ E_net / E_max; deficit: E_net / (e_b- E_max).
    """
    return branch_energy(battery, net_energy) / battery.capacity


def soc_update_coulomb(battery, times, currents, t=None, bus_voltage=None):
    """
    Coulomb-counting change of SoC.

    Parameters
    ----------
    battery : Battery
    times : array
        Sample times of the current trace, s.
    currents : array
        Battery current, A, positive when charging.
    t : float, optional
        Time at which E_max(t) is evaluated; defaults to the last sample.
    bus_voltage : float, optional
        Voltage converting E_max from Wh to Ah; defaults to the battery's.

    """
    times = numpy.asarray(times, dtype=float)
    currents = numpy.asarray(currents, dtype=float)
    t = times[-1] if t is None else t
    voltage = bus_voltage or battery.bus_voltage
    capacity_ah = battery.capacity_at(t) / voltage
    if not capacity_ah > 0:
        raise ValueError('Battery capacity has faded to zero.')
    if currents.size < 2:
        return 0.0
    return float(trapezoid(currents, times)) / (3600.0 * capacity_ah)


def bus_current(net_power, bus_voltage):
    """Battery current surrogate P_net / V_bus, A."""
    return net_power / bus_voltage
