"""Linearized navigation dynamics and covariance time update."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy
from scipy.linalg import expm

# local imports
from sbsim.errors import GeometryError


class StateTransition(object):
    """
    Jacobian of the navigation derivative.

    Attributes
    ----------
    gravity_gradient : numpy.ndarray
        3x3 partial of the acceleration with respect to position.
    matrix : numpy.ndarray
        6x6 [[0, I], [G, 0]].

    """

    def __init__(self, gravity_gradient):
        self.gravity_gradient = numpy.asarray(gravity_gradient, dtype=float)
        self.matrix = numpy.zeros((6, 6))
        self.matrix[:3, 3:] = numpy.eye(3)
        self.matrix[3:, :3] = self.gravity_gradient

    def transition(self, dt):
        """State transition matrix exp(F dt) over a step."""
        return expm(self.matrix * dt)


def state_transition_jacobian(x, env, t=0.0):
    """
    Jacobian of the point-mass gravity terms of the navigation derivative.

    G = sum_k 3 mu_k r r^T / |r|^5 - mu_k I / |r|^3, with r the position
    relative to body k.
    """
    r_abs = x.position + env[x.center].position(t)
    gradient = numpy.zeros((3, 3))
    for body in env.gravitating_bodies():
        r = r_abs - body.position(t)
        distance = numpy.linalg.norm(r)
        if distance == 0:
            raise GeometryError('Jacobian evaluated at the center of {}.'
                                .format(body.body_id))
        gradient += (3.0 * body.mu * numpy.outer(r, r) / distance ** 5
                     - body.mu * numpy.eye(3) / distance ** 3)
    return StateTransition(gradient)


def covariance_time_update(covariance, transition, process_noise=None):
    """
    Propagate a 6x6 covariance: P' = Phi P Phi^T + Q.

    The result is symmetrized.
    """
    covariance = numpy.asarray(covariance, dtype=float)
    transition = numpy.asarray(transition, dtype=float)
    result = transition.dot(covariance).dot(transition.T)
    if process_noise is not None:
        result = result + numpy.asarray(process_noise, dtype=float)
    return 0.5 * (result + result.T)
