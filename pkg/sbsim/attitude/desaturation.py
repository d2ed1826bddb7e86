"""Reaction wheel momentum dumping with thruster counter-torque."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import numpy

logger = logging.getLogger(__name__)


class DesatProfile(object):
    """
    Step-by-step desaturation commands.

    Attributes
    ----------
    wheel_accels : numpy.ndarray
        (K, n) wheel accelerations, rad/s2.
    thruster_torques : numpy.ndarray
        (K, 3) thruster torques, N m.
    dt : float
        Step, s.
    authority_limited : bool
        True when the thrusters forced a slower than nominal dump.

    """

    def __init__(self, wheel_accels, thruster_torques, dt,
                 authority_limited=False):
        self.wheel_accels = numpy.asarray(wheel_accels, dtype=float)
        self.thruster_torques = numpy.asarray(thruster_torques, dtype=float)
        self.dt = dt
        self.authority_limited = authority_limited

    def __len__(self):
        return len(self.thruster_torques)

    @property
    def thruster_impulse(self):
        """Angular impulse delivered by the thrusters, N m s."""
        return self.thruster_torques.sum(axis=0) * self.dt


def desaturation_step(wheel_rates, model, dt, torque_fraction=0.5,
                      authority=None):
    """
    Commands for one desaturation step.

    Each wheel decelerates toward zero at `torque_fraction` of its torque
    limit without overshooting zero; thrusters cancel the reaction torque
    so the net body torque vanishes. `authority` caps the per-axis thruster
    torque, by default the full thruster limit.

    Returns
    -------
    (wheel_accel, thruster_torque, authority_limited)

    """
    rates = numpy.asarray(wheel_rates, dtype=float)
    nominal = torque_fraction * model.wheel_max_torque / model.wheel_spin
    accel = -numpy.sign(rates) * numpy.minimum(nominal, numpy.abs(rates) / dt)
    thruster_torque = model.wheel_matrix.dot(accel)
    limit = (model.thrusters.max_axis_torque if authority is None
             else max(authority, 0.0))
    peak = numpy.max(numpy.abs(thruster_torque)) if rates.size else 0.0
    limited = peak > limit
    if limited:
        scale = limit / peak if peak > 0 else 0.0
        accel = scale * accel
        thruster_torque = scale * thruster_torque
    return accel, thruster_torque, limited


def desaturate(x, model, dt, threshold, torque_fraction=0.5,
               max_steps=1000000):
    """
    Full desaturation profile from the current wheel rates.

    Parameters
    ----------
    x : StateVector
        Attitude state.
    model : sbsim.attitude.model.AttitudeModel
    dt : float
        Step, s.
    threshold : float
        Wheel rate above which a dump is needed, rad/s.

    Returns
    -------
    DesatProfile
        Empty when every wheel is at or below `threshold`; otherwise the
        wheels are driven to rest, below the threshold / 2 release level.

    """
    rates = numpy.array(x['omega_rw'], dtype=float)
    if not rates.size or numpy.all(numpy.abs(rates) <= threshold):
        return DesatProfile(numpy.zeros((0, rates.size)),
                            numpy.zeros((0, 3)), dt)
    accels, torques = [], []
    limited = False
    for _ in range(max_steps):
        if not numpy.any(rates):
            break
        accel, torque, step_limited = desaturation_step(
            rates, model, dt, torque_fraction)
        if not numpy.any(accel):
            limited = True
            break
        limited = limited or step_limited
        accels.append(accel)
        torques.append(torque)
        rates = rates + accel * dt
        # steps sized |rate| / dt land exactly on zero
        rates[numpy.abs(rates) < 1e-12 * model.wheel_max_rate] = 0.0
    if limited:
        logger.warning('Desaturation limited by thruster authority.')
    return DesatProfile(accels, torques, dt, limited)
