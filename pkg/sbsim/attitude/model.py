"""Attitude state layout, actuator specifications and inertia model."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import enum
import numpy

# local imports
from sbsim.core.quaternion import normalize
from sbsim.core.state_vector import StateLayout, StateVector


class Mode(enum.Enum):
    """Attitude modes set by the executive."""

    RECHARGE = 'Recharge'
    SMALL_BODY_POINTING = 'SmallBodyPointing'
    TCM = 'TCM'
    DOWNLINK = 'Downlink'


def _unit_axis(axis, owner):
    axis = numpy.asarray(axis, dtype=float)
    if abs(numpy.linalg.norm(axis) - 1.0) > 1e-9:
        raise ValueError('{}: axis must be unit-norm.'.format(owner))
    return axis


class RotorSpec(object):
    """
    Reaction wheel.

    Attributes
    ----------
    rotor_id : str
    spin_inertia : float
        Inertia about the spin axis, kg m2.
    axis : numpy.ndarray
        Unit spin axis, spacecraft frame.
    max_torque : float
        N m.
    max_rate : float
        rad/s.
    inertia : numpy.ndarray
        Full 3x3 rotor inertia I_rw.

    """

    def __init__(self, rotor_id, spin_inertia, axis, max_torque, max_rate,
                 transverse_inertia=0.0):
        if not spin_inertia > 0 or transverse_inertia < 0:
            raise ValueError('Rotor {}: inertias must be positive.'
                             .format(rotor_id))
        self.rotor_id = rotor_id
        self.axis = _unit_axis(axis, 'Rotor ' + str(rotor_id))
        self.spin_inertia = float(spin_inertia)
        self.transverse_inertia = float(transverse_inertia)
        self.max_torque = float(max_torque)
        self.max_rate = float(max_rate)
        along = numpy.outer(self.axis, self.axis)
        self.inertia = (self.spin_inertia * along
                        + self.transverse_inertia * (numpy.eye(3) - along))


class WingSpec(RotorSpec):
    """
    Gimballed solar wing, a momentum term only.

    The wing turns at the constant `gimbal_rate` (rad/s) about its axis.
    """

    def __init__(self, rotor_id, spin_inertia, axis, gimbal_rate=0.0,
                 transverse_inertia=0.0):
        super(WingSpec, self).__init__(rotor_id, spin_inertia, axis,
                                       max_torque=0.0, max_rate=numpy.inf,
                                       transverse_inertia=transverse_inertia)
        self.gimbal_rate = float(gimbal_rate)


class ThrusterSpec(object):
    """
    Microthruster set fired as couples, count / 6 couples per axis sign.

    Attributes
    ----------
    count : int
    thrust : float
        Per thruster, N.
    lever_arm : float
        Couple half-separation, m.
    noise_fraction : float
        Standard deviation of multiplicative thrust noise.

    """

    def __init__(self, count=12, thrust=0.01, lever_arm=0.3,
                 noise_fraction=0.0):
        if count < 0 or thrust < 0 or lever_arm < 0 or noise_fraction < 0:
            raise ValueError('Thruster parameters must be non-negative.')
        self.count = int(count)
        self.thrust = float(thrust)
        self.lever_arm = float(lever_arm)
        self.noise_fraction = float(noise_fraction)

    @property
    def max_axis_torque(self):
        """Torque limit about each body axis, N m."""
        return 2.0 * (self.count // 6) * self.thrust * self.lever_arm


class AttitudeModel(object):
    """
    Inertia model and actuator complement.

    Attributes
    ----------
    inertia : numpy.ndarray
        I_cm, kg m2.
    j_cm : numpy.ndarray
        I_cm minus the rotor and wing inertias.
    wheels : list of RotorSpec
    wings : list of WingSpec
    thrusters : ThrusterSpec
    wheel_matrix : numpy.ndarray
        3 x n matrix whose columns are I_rw,i a_i.
    wing_matrix : numpy.ndarray
        3 x m matrix whose columns are I_sw,j a_j.
    layout : sbsim.core.state_vector.StateLayout

    """

    def __init__(self, inertia, wheels=(), wings=(), thrusters=None):
        inertia = numpy.asarray(inertia, dtype=float)
        if inertia.shape != (3, 3) or not numpy.allclose(inertia, inertia.T):
            raise ValueError('I_cm must be a symmetric 3x3 matrix.')
        if numpy.any(numpy.linalg.eigvalsh(inertia) <= 0):
            raise ValueError('I_cm must be positive-definite.')
        self.inertia = inertia
        self.wheels = list(wheels)
        self.wings = list(wings)
        self.thrusters = thrusters or ThrusterSpec()
        rotors = self.wheels + self.wings
        self.j_cm = inertia - sum((r.inertia for r in rotors),
                                  numpy.zeros((3, 3)))
        if numpy.any(numpy.linalg.eigvalsh(self.j_cm) <= 0):
            raise ValueError('J_cm = I_cm - rotor inertias is not '
                             'positive-definite.')
        self.inertia_inverse = numpy.linalg.inv(inertia)
        self.wheel_matrix = self._columns(self.wheels)
        self.wing_matrix = self._columns(self.wings)
        self.wheel_pinv = numpy.linalg.pinv(self.wheel_matrix)
        self.wheel_spin = numpy.array([w.spin_inertia for w in self.wheels])
        self.wheel_max_torque = numpy.array(
            [w.max_torque for w in self.wheels])
        self.wheel_max_rate = numpy.array([w.max_rate for w in self.wheels])
        self.wing_rates = numpy.array([w.gimbal_rate for w in self.wings])
        rank = (numpy.linalg.matrix_rank(self.wheel_matrix)
                if self.wheels else 0)
        if rank < 3 and self.thrusters.max_axis_torque <= 0:
            raise ValueError('Fewer than three independent actuation '
                             'directions.')
        self.layout = attitude_layout(len(self.wheels), len(self.wings))

    @staticmethod
    def _columns(rotors):
        if not rotors:
            return numpy.zeros((3, 0))
        return numpy.column_stack([r.inertia.dot(r.axis) for r in rotors])

    def initial_state(self, quaternion, omega=(0.0, 0.0, 0.0),
                      wheel_rates=None):
        """Pack an AttitudeState with wings at their gimbal rate."""
        if wheel_rates is None:
            wheel_rates = numpy.zeros(len(self.wheels))
        return StateVector.pack(self.layout, q=normalize(quaternion),
                                omega=omega, omega_rw=wheel_rates,
                                omega_sw=self.wing_rates)


def attitude_layout(n_wheels, n_wings):
    """Slot layout [q, omega, omega_rw, omega_sw]."""
    return StateLayout([('q', 4, '-'), ('omega', 3, 'rad/s'),
                        ('omega_rw', n_wheels, 'rad/s'),
                        ('omega_sw', n_wings, 'rad/s')])


class AttitudeCommand(object):
    """
    Commanded attitude, body rate and mode.

    Attributes
    ----------
    quaternion : numpy.ndarray
        Unit target quaternion.
    rate : numpy.ndarray
        Commanded body rate in the commanded frame, rad/s.
    mode : Mode

    """

    __slots__ = ('quaternion', 'rate', 'mode')

    def __init__(self, quaternion, rate=(0.0, 0.0, 0.0),
                 mode=Mode.SMALL_BODY_POINTING):
        self.quaternion = normalize(quaternion)
        self.rate = numpy.asarray(rate, dtype=float)
        self.mode = Mode(mode)

    def __repr__(self):
        return 'AttitudeCommand({}, {}, {})'.format(
            list(self.quaternion), list(self.rate), self.mode.value)
