"""Power loads, net power and net energy."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import numpy
from scipy.integrate import trapezoid

logger = logging.getLogger(__name__)


class LoadSchedule(object):
    """
    Activity rule of a load.

    Valid specifications:

    - ``always`` / ``never``
    - ``modes:<mode>,<mode>``: active in the listed attitude modes
    - ``windows:<t0>-<t1>,<t2>-<t3>``: active inside the time windows, s
    - ``pointing``: active while the instrument is on target

    """

    KINDS = ('always', 'never', 'modes', 'windows', 'pointing')

    def __init__(self, spec='always'):
        spec = spec.strip()
        kind, _, arguments = spec.partition(':')
        kind = kind.strip().lower()
        if kind not in self.KINDS:
            raise ValueError('Unknown load schedule {}. Valid schedules are: '
                             '{}'.format(spec, ', '.join(self.KINDS)))
        self.kind = kind
        self.spec = spec
        self.modes = set()
        self.windows = []
        if kind == 'modes':
            self.modes = set(m.strip() for m in arguments.split(',')
                             if m.strip())
        elif kind == 'windows':
            for window in arguments.split(','):
                start, end = [float(v) for v in window.split('-')]
                if end <= start:
                    raise ValueError('Empty load window: ' + window)
                self.windows.append((start, end))

    def is_active(self, t, mode=None, on_target=False):
        if self.kind == 'always':
            return True
        if self.kind == 'never':
            return False
        if self.kind == 'modes':
            return mode in self.modes
        if self.kind == 'windows':
            return any(start <= t < end for start, end in self.windows)
        return bool(on_target)


class PowerLoad(object):
    """
    Spacecraft component drawing constant power while active.

    Attributes
    ----------
    load_id : str
    power : float
        Rated power P_c, W.
    schedule : LoadSchedule
    data_rate : float
        Data generated while active, bytes/s.

    """

    def __init__(self, load_id, power, schedule='always', data_rate=0.0):
        if power < 0:
            raise ValueError('Load {} has negative power.'.format(load_id))
        self.load_id = load_id
        self.power = float(power)
        if not isinstance(schedule, LoadSchedule):
            schedule = LoadSchedule(schedule)
        self.schedule = schedule
        self.data_rate = float(data_rate)

    def is_active(self, t, mode=None, on_target=False):
        return self.schedule.is_active(t, mode, on_target)


def consumed_power(loads, t, mode=None, on_target=False):
    """Sum of rated powers of the active loads, W."""
    return sum(load.power for load in loads
               if load.is_active(t, mode, on_target))


def net_power(solar_power, loads, t, hf=False, bus_efficiency=1.0, mode=None,
              on_target=False):
    """
    Net instantaneous power, W.

    LF: P_solar - sum P_c; HF: mu P*_solar - sum P_c with mu the bus
    conversion efficiency.
    """
    if hf:
        if not 0 < bus_efficiency <= 1:
            raise ValueError('Bus efficiency must lie in (0, 1].')
        solar_power = bus_efficiency * solar_power
    return solar_power - consumed_power(loads, t, mode, on_target)


def net_energy(times, powers):
    """
    Energy surplus over a net power trace, Wh (trapezoidal rule).

    Parameters
    ----------
    times : array
        Sample times spanning [t - dt, t], s.
    powers : array
        Net power at each sample, W.

    """
    times = numpy.asarray(times, dtype=float)
    powers = numpy.asarray(powers, dtype=float)
    if powers.size == 0:
        raise ValueError('Net energy needs a non-empty power trace.')
    if powers.size == 1:
        return 0.0
    if numpy.any(numpy.diff(times) <= 0):
        raise ValueError('Power trace times must increase.')
    return float(trapezoid(powers, times)) / 3600.0
