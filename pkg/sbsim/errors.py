"""Exception hierarchy shared by all sbsim subsystems."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

__all__ = ['InvalidScenario', 'SimulationError', 'GeometryError',
           'NonFiniteDerivative', 'StepSizeError', 'ActuatorSaturation',
           'LambertConvergenceError', 'ZeroThroughputError', 'StepFailure']


class InvalidScenario(UserWarning):
    """
    Raised when a scenario file or an override cannot be accepted.

    Attributes
    ----------
    problems : list of str
        One entry per detected problem.

    """

    def __init__(self, message, problems=None):
        super(InvalidScenario, self).__init__(message)
        self.problems = list(problems or [])

    def __str__(self):
        text = super(InvalidScenario, self).__str__()
        if self.problems:
            text += '\n  - ' + '\n  - '.join(self.problems)
        return text


class SimulationError(ValueError):
    """Base class for numerical failures raised while simulating."""


class GeometryError(SimulationError):
    """Degenerate geometry: zero separation, non-unit quaternion..."""


class NonFiniteDerivative(SimulationError):
    """A derivative evaluation produced NaN or inf."""

    def __init__(self, slot, time):
        super(NonFiniteDerivative, self).__init__(
            'Non-finite derivative in slot {} at t={} s.'.format(slot, time)
        )
        self.slot = slot
        self.time = time


class StepSizeError(SimulationError):
    """Integration step too coarse for the requested accuracy."""


class ActuatorSaturation(SimulationError):
    """
    Requested torque exceeds the combined actuator authority.

    Attributes
    ----------
    achievable_fraction : float
        Fraction of the requested torque that the limited allocation
        delivers along the requested direction.
    allocation : sbsim.attitude.allocation.Allocation
        Allocation with every actuator held at its limit.

    """

    def __init__(self, achievable_fraction, allocation):
        super(ActuatorSaturation, self).__init__(
            'Actuators saturated: only {:.3f} of requested torque '
            'achievable.'.format(achievable_fraction)
        )
        self.achievable_fraction = achievable_fraction
        self.allocation = allocation


class LambertConvergenceError(SimulationError):
    """Lambert iteration failed; carries the time-of-flight residual."""

    def __init__(self, message, residual):
        super(LambertConvergenceError, self).__init__(
            '{} (residual {:.3e})'.format(message, residual)
        )
        self.residual = residual


class ZeroThroughputError(SimulationError):
    """Link unusable: no frame survives the retransmission protocol."""


class StepFailure(SimulationError):
    """Subsystem failure wrapped with the step where it happened."""

    def __init__(self, step_index, time, cause):
        super(StepFailure, self).__init__(
            'Step {} (t={} s) failed: {}'.format(step_index, time, cause)
        )
        self.step_index = step_index
        self.time = time
        self.cause = cause
