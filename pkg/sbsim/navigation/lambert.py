"""
Single-revolution Lambert solver.

The transfer is parametrized by the universal variable x of the
Lancaster-Blanchard formulation (x < 1 ellipses, x = 1 parabola, x > 1
hyperbolas); the non-dimensional time of flight is monotone in x and its
root is bracketed and refined with Brent's method.
"""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import math
import numpy
from scipy.optimize import brentq
from scipy.special import hyp2f1

# local imports
from sbsim.errors import GeometryError, LambertConvergenceError

logger = logging.getLogger(__name__)

PROGRADE = 'prograde'
RETROGRADE = 'retrograde'
BATTIN_ZONE = 0.01
COLLINEAR_TOLERANCE = 1e-12
RESIDUAL_TOLERANCE = 1e-9


def _unit(vector):
    return vector / numpy.linalg.norm(vector)


def time_of_flight(x, lam):
    """Non-dimensional time of flight of the single-revolution transfer."""
    y = math.sqrt(1.0 - lam * lam * (1.0 - x * x))
    if abs(x - 1.0) < BATTIN_ZONE:
        eta = y - lam * x
        s1 = 0.5 * (1.0 - lam - x * eta)
        q = 4.0 / 3.0 * hyp2f1(3.0, 1.0, 2.5, s1)
        return 0.5 * (eta ** 3 * q + 4.0 * lam * eta)
    a = 1.0 / (1.0 - x * x)
    if a > 0:
        alpha = 2.0 * math.acos(x)
        beta = 2.0 * math.asin(math.sqrt(lam * lam / a))
        if lam < 0:
            beta = -beta
        return 0.5 * a * math.sqrt(a) * ((alpha - math.sin(alpha))
                                         - (beta - math.sin(beta)))
    alpha = 2.0 * math.acosh(x)
    beta = 2.0 * math.asinh(math.sqrt(-lam * lam / a))
    if lam < 0:
        beta = -beta
    return -0.5 * a * math.sqrt(-a) * ((beta - math.sinh(beta))
                                       - (alpha - math.sinh(alpha)))


def _geometry(r1, r2, direction, plane_normal):
    n1 = numpy.linalg.norm(r1)
    n2 = numpy.linalg.norm(r2)
    if n1 == 0 or n2 == 0:
        raise GeometryError('Lambert endpoints must differ from the center.')
    i_r1 = r1 / n1
    i_r2 = r2 / n2
    normal = numpy.cross(i_r1, i_r2)
    reference = (numpy.array([0.0, 0.0, 1.0]) if plane_normal is None
                 else numpy.asarray(plane_normal, dtype=float))
    if numpy.linalg.norm(normal) < COLLINEAR_TOLERANCE:
        if i_r1.dot(i_r2) > 0:
            raise GeometryError('Lambert endpoints are aligned on the same '
                                'side of the center.')
        if plane_normal is None:
            raise GeometryError('Collinear Lambert geometry needs a '
                                'transfer-plane hint.')
        normal = reference - reference.dot(i_r1) * i_r1
        if numpy.linalg.norm(normal) < COLLINEAR_TOLERANCE:
            raise GeometryError('Transfer-plane hint is parallel to r1.')
    i_h = _unit(normal)
    flip = i_h.dot(reference) < 0
    if flip:
        i_t1 = numpy.cross(i_r1, i_h)
        i_t2 = numpy.cross(i_r2, i_h)
    else:
        i_t1 = numpy.cross(i_h, i_r1)
        i_t2 = numpy.cross(i_h, i_r2)
    if direction == RETROGRADE:
        flip = not flip
        i_t1, i_t2 = -i_t1, -i_t2
    elif direction != PROGRADE:
        raise ValueError('Lambert direction must be prograde or retrograde.')
    return n1, n2, i_r1, i_r2, i_t1, i_t2, flip


def lambert_solve(r1, r2, tof, mu, direction=PROGRADE, plane_normal=None,
                  max_expansions=60):
    """
    Velocities of the zero-revolution conic from r1 to r2 in `tof`.

    Parameters
    ----------
    r1, r2 : array
        Positions relative to the attracting center, m.
    tof : float
        Time of flight, s.
    mu : float
        Gravitational parameter, m3/s2.
    direction : str
        'prograde' (angular momentum along `plane_normal`, or +z) or
        'retrograde'.
    plane_normal : array, optional
        Reference normal of the transfer plane; mandatory when r1 and r2
        are collinear.

    Returns
    -------
    (v1, v2) : (numpy.ndarray, numpy.ndarray)

    Raises
    ------
    GeometryError
        Degenerate geometry (coincident or aligned endpoints, collinear
        endpoints without plane hint).
    LambertConvergenceError
        The time-of-flight equation could not be solved.

    """
    r1 = numpy.asarray(r1, dtype=float)
    r2 = numpy.asarray(r2, dtype=float)
    if not tof > 0:
        raise GeometryError('Lambert time of flight must be positive.')
    if not mu > 0:
        raise ValueError('Gravitational parameter must be positive.')
    chord = numpy.linalg.norm(r2 - r1)
    if chord == 0:
        raise GeometryError('Lambert endpoints coincide.')
    n1, n2, i_r1, i_r2, i_t1, i_t2, flip = _geometry(r1, r2, direction,
                                                     plane_normal)
    semiperimeter = 0.5 * (n1 + n2 + chord)
    lam = math.sqrt(max(0.0, 1.0 - chord / semiperimeter))
    if flip:
        lam = -lam
    target = math.sqrt(2.0 * mu / semiperimeter ** 3) * tof

    def residual(x):
        return time_of_flight(x, lam) - target

    low = -1.0 + 1e-12
    high = 1.0
    for _ in range(max_expansions):
        if residual(high) <= 0:
            break
        high *= 2.0
    else:
        raise LambertConvergenceError('Time of flight too short to bracket.',
                                      residual(high) / target)
    try:
        x = brentq(residual, low, high, xtol=1e-15,
                   rtol=4 * numpy.finfo(float).eps, maxiter=500)
    except (RuntimeError, ValueError) as error:
        raise LambertConvergenceError('Lambert iteration failed: {}'
                                      .format(error), float('nan'))
    error = abs(residual(x)) / target
    if error > RESIDUAL_TOLERANCE:
        raise LambertConvergenceError('Lambert iteration did not converge.',
                                      error)

    y = math.sqrt(1.0 - lam * lam * (1.0 - x * x))
    gamma = math.sqrt(0.5 * mu * semiperimeter)
    rho = (n1 - n2) / chord
    sigma = math.sqrt(max(0.0, 1.0 - rho * rho))
    radial1 = gamma * ((lam * y - x) - rho * (lam * y + x)) / n1
    radial2 = -gamma * ((lam * y - x) + rho * (lam * y + x)) / n2
    tangential = gamma * sigma * (y + lam * x)
    v1 = radial1 * i_r1 + tangential / n1 * i_t1
    v2 = radial2 * i_r2 + tangential / n2 * i_t2
    logger.debug('Lambert solved: x=%.12g, residual %.2e.', x, error)
    return v1, v2
