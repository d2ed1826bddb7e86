"""Solar array generation: incidence, LF power, tabular IVC and MPPT."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import os.path
import numpy
import pandas
from scipy.optimize import minimize_scalar

# local imports
from sbsim.core.frames import FrameId, FrameVector
from sbsim.environment.sunlight import (DEFAULT_CONSTANTS,
                                        SOLAR_CONSTANT_1AU, irradiance)
from sbsim.errors import GeometryError

DATA_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), 'data')


class IvcTable(object):
    """
    Current-voltage characteristic at reference conditions.

    Attributes
    ----------
    currents : numpy.ndarray
        Increasing load currents starting at 0, A.
    voltages : numpy.ndarray
        Non-increasing voltages, V; the last entry is the short circuit.

    """

    def __init__(self, currents, voltages):
        currents = numpy.asarray(currents, dtype=float)
        voltages = numpy.asarray(voltages, dtype=float)
        if currents.size < 2 or currents.shape != voltages.shape:
            raise ValueError('IVC table needs at least two (I, V) rows.')
        if currents[0] != 0 or numpy.any(numpy.diff(currents) <= 0):
            raise ValueError('IVC currents must start at 0 and increase.')
        if numpy.any(numpy.diff(voltages) > 0) or numpy.any(voltages < 0):
            raise ValueError('IVC voltages must be non-negative and '
                             'non-increasing in current.')
        self.currents = currents
        self.voltages = voltages

    @classmethod
    def from_csv(cls, path):
        """Read a table with `current_a` and `voltage_v` columns."""
        data = pandas.read_csv(path)
        return cls(data['current_a'].values, data['voltage_v'].values)

    @classmethod
    def default(cls):
        return cls.from_csv(os.path.join(DATA_DIR, 'ivc_default.csv'))

    @property
    def short_circuit_current(self):
        return self.currents[-1]

    def voltage(self, current):
        """Reference voltage at `current`, zero beyond short circuit."""
        if current > self.currents[-1]:
            return 0.0
        return float(numpy.interp(current, self.currents, self.voltages))


class SolarArray(object):
    """
    Body-fixed solar array.

    Attributes
    ----------
    array_id : str
    area : float
        m2.
    efficiency, packing : float
        Cell efficiency and packing fraction, in (0, 1].
    normal : FrameVector
        Unit normal, spacecraft frame.
    centroid : FrameVector
        Array centroid relative to the CM, spacecraft frame, m.
    occlusion : float
        O in (0, 1].
    degradation_rate : float
        Linear lifetime fade of L_d, 1/s.
    temperature_coefficient : float
        k_T of xi(T) = 1 - k_T (T - T_ref), 1/K.
    reference_temperature : float
        T_ref, deg C.
    design_constant : float
        eta, lumps area and cell count of the IVC table.
    reference_irradiance : float
        Irradiance of the IVC table, W/m2.
    ivc : IvcTable

    """

    def __init__(self, array_id, area, efficiency, packing, normal,
                 centroid=(0.0, 0.0, 0.0), occlusion=1.0,
                 degradation_rate=0.0, temperature_coefficient=0.004,
                 reference_temperature=28.0, design_constant=1.0,
                 reference_irradiance=SOLAR_CONSTANT_1AU, ivc=None):
        for name, value in (('efficiency', efficiency),
                            ('packing', packing), ('occlusion', occlusion)):
            if not 0 < value <= 1:
                raise ValueError('Array {}: {} must lie in (0, 1].'
                                 .format(array_id, name))
        normal = FrameVector(normal, FrameId.SPACECRAFT)
        if abs(normal.norm() - 1.0) > 1e-9:
            raise ValueError('Array {}: normal must be unit-norm.'
                             .format(array_id))
        self.array_id = array_id
        self.area = float(area)
        self.efficiency = float(efficiency)
        self.packing = float(packing)
        self.normal = normal
        self.centroid = FrameVector(centroid, FrameId.SPACECRAFT)
        self.occlusion = float(occlusion)
        self.degradation_rate = float(degradation_rate)
        self.temperature_coefficient = float(temperature_coefficient)
        self.reference_temperature = float(reference_temperature)
        self.design_constant = float(design_constant)
        self.reference_irradiance = float(reference_irradiance)
        self.ivc = ivc if ivc is not None else IvcTable.default()

    def lifetime_degradation(self, t):
        """L_d(t), non-increasing, floored at zero."""
        return max(0.0, 1.0 - self.degradation_rate * t)

    def temperature_factor(self, temperature):
        """xi(T), floored at zero."""
        return max(0.0, 1.0 - self.temperature_coefficient
                   * (temperature - self.reference_temperature))


def incidence_angle(array, pose, sun_position):
    """
    Angle between the array normal and the array-to-Sun direction, rad.

    A normal facing the Sun gives zero, a normal perpendicular to the
    sunline gives pi/2.
    """
    to_sun = (numpy.asarray(sun_position, dtype=float)
              - pose.position.values - pose.to_inertial(array.centroid.values))
    distance = numpy.linalg.norm(to_sun)
    if distance == 0:
        raise GeometryError('Array {} coincides with the Sun.'
                            .format(array.array_id))
    cosine = pose.to_inertial(array.normal.values).dot(to_sun) / distance
    return float(numpy.arccos(numpy.clip(cosine, -1.0, 1.0)))


def _sun_irradiance(pose, sun, constants, t):
    sun_position = sun.position(t)
    distance = numpy.linalg.norm(pose.position.values - sun_position)
    return sun_position, irradiance(distance, constants)


def solar_power_lf(arrays, pose, sun, constants=DEFAULT_CONSTANTS, t=0.0):
    """
    Low-fidelity generated power, W.

    Sum over arrays of H a e p cos(theta), arrays lit from behind
    contributing zero.
    """
    sun_position, flux = _sun_irradiance(pose, sun, constants, t)
    total = 0.0
    for array in arrays:
        cosine = numpy.cos(incidence_angle(array, pose, sun_position))
        total += (flux * array.area * array.efficiency * array.packing
                  * max(cosine, 0.0))
    return total


def _scale(array, flux, theta, temperature, t):
    illumination = (flux * max(numpy.cos(theta), 0.0)
                    / array.reference_irradiance)
    return (array.temperature_factor(temperature) * array.occlusion
            * array.lifetime_degradation(t) * array.design_constant
            * illumination)


def solar_voltage_hf(array, flux, theta, temperature, current, t=0.0):
    """
    Array output voltage for a given load current, V.

    The reference IVC is scaled by xi(T) O L_d(t) eta and by the
    illumination H cos(theta) / H_ref.
    """
    if current < 0:
        raise ValueError('Load current must be non-negative.')
    return (_scale(array, flux, theta, temperature, t)
            * array.ivc.voltage(current))


def mppt_operating_point(array, flux, theta, temperature, t=0.0):
    """
    Maximum power point (current A, voltage V, power W).

    The best table knot seeds a golden-section search over the two
    neighbouring segments; equal powers resolve to the lower current.
    """
    scale = _scale(array, flux, theta, temperature, t)
    if scale <= 0:
        return 0.0, 0.0, 0.0
    table = array.ivc
    knot_powers = table.currents * table.voltages
    best = int(numpy.argmax(knot_powers))
    current = table.currents[best]
    power = knot_powers[best]
    low = table.currents[max(best - 1, 0)]
    high = table.currents[min(best + 1, table.currents.size - 1)]
    if high > low:
        try:
            result = minimize_scalar(lambda i: -i * table.voltage(i),
                                     bracket=(low, high), method='golden',
                                     tol=1e-10)
        except (RuntimeError, ValueError):
            result = None
        if (result is not None and low <= result.x <= high
                and -result.fun > power + 1e-12):
            current, power = float(result.x), float(-result.fun)
    return current, scale * table.voltage(current), scale * power


def mppt_power(array, flux, theta, temperature, t=0.0):
    """Maximum power P* the array delivers, W."""
    return mppt_operating_point(array, flux, theta, temperature, t)[2]


def solar_power_hf(arrays, pose, sun, temperature,
                   constants=DEFAULT_CONSTANTS, t=0.0):
    """High-fidelity generated power with per-array MPPT, W."""
    sun_position, flux = _sun_irradiance(pose, sun, constants, t)
    return sum(mppt_power(array, flux,
                          incidence_angle(array, pose, sun_position),
                          temperature, t)
               for array in arrays)
