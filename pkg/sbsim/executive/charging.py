"""Charging-attitude heuristic balancing array power and body pointing."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import numpy
from scipy.optimize import minimize_scalar
from scipy.spatial.transform import Rotation

# local imports
from sbsim.attitude.model import AttitudeCommand, Mode
from sbsim.core.quaternion import properize
from sbsim.errors import GeometryError

logger = logging.getLogger(__name__)

REFINE_STEPS = (0.05, 0.01, 0.002)
IMPROVEMENT = 1e-12


def _unit(vector, name):
    vector = numpy.asarray(vector, dtype=float)
    norm = numpy.linalg.norm(vector)
    if norm == 0:
        raise GeometryError('Zero-norm {}.'.format(name))
    return vector / norm


def icosphere(level=3):
    """Unit vertices of an icosahedron subdivided `level` times."""
    phi = 0.5 * (1.0 + numpy.sqrt(5.0))
    vertices = [(-1, phi, 0), (1, phi, 0), (-1, -phi, 0), (1, -phi, 0),
                (0, -1, phi), (0, 1, phi), (0, -1, -phi), (0, 1, -phi),
                (phi, 0, -1), (phi, 0, 1), (-phi, 0, -1), (-phi, 0, 1)]
    vertices = [numpy.array(v, dtype=float) / numpy.linalg.norm(v)
                for v in vertices]
    faces = [(0, 11, 5), (0, 5, 1), (0, 1, 7), (0, 7, 10), (0, 10, 11),
             (1, 5, 9), (5, 11, 4), (11, 10, 2), (10, 7, 6), (7, 1, 8),
             (3, 9, 4), (3, 4, 2), (3, 2, 6), (3, 6, 8), (3, 8, 9),
             (4, 9, 5), (2, 4, 11), (6, 2, 10), (8, 6, 7), (9, 8, 1)]
    for _ in range(level):
        cache = {}

        def midpoint(i, j):
            key = (min(i, j), max(i, j))
            if key not in cache:
                vertex = vertices[i] + vertices[j]
                vertices.append(vertex / numpy.linalg.norm(vertex))
                cache[key] = len(vertices) - 1
            return cache[key]

        refined = []
        for a, b, c in faces:
            ab, bc, ca = midpoint(a, b), midpoint(b, c), midpoint(c, a)
            refined += [(a, ab, ca), (b, bc, ab), (c, ca, bc), (ab, bc, ca)]
        faces = refined
    return numpy.array(vertices)


def _array_weights(arrays):
    normals = numpy.array([a.normal.values for a in arrays])
    weights = numpy.array([a.area * a.efficiency * a.packing for a in arrays])
    return normals, weights


def relative_power(arrays, sun_body):
    """
    Sum of a e p max(cos theta, 0) for body-frame Sun directions.

    Parameters
    ----------
    sun_body : numpy.ndarray
        (N, 3) unit Sun directions in the spacecraft frame.

    """
    normals, weights = _array_weights(arrays)
    cosines = numpy.atleast_2d(sun_body).dot(normals.T)
    return numpy.maximum(cosines, 0.0).dot(weights)


def best_sun_direction(arrays, iterations=20):
    """
    Body-frame Sun direction maximizing array power and that maximum.

    On the sphere the optimum is parallel to the sum of the weighted
    normals of the arrays it lights; this fixed point is sought from
    every array normal and from their weighted sum.
    """
    normals, weights = _array_weights(arrays)
    best, best_value = normals[0], -1.0
    seeds = list(normals)
    combined = (weights[:, None] * normals).sum(axis=0)
    if numpy.linalg.norm(combined) > 1e-12:
        seeds.append(combined / numpy.linalg.norm(combined))
    for seed in seeds:
        direction = seed
        for _ in range(iterations):
            lit = normals.dot(direction) > 0
            total = (weights[lit, None] * normals[lit]).sum(axis=0)
            if not numpy.any(total):
                break
            direction = total / numpy.linalg.norm(total)
        value = float(relative_power(arrays, direction)[0])
        if value > best_value + IMPROVEMENT:
            best, best_value = direction, value
    return best, best_value


def _align(source, target):
    """Shortest-arc rotation taking unit `source` onto unit `target`."""
    axis = numpy.cross(source, target)
    sine = numpy.linalg.norm(axis)
    cosine = source.dot(target)
    if sine < 1e-12:
        if cosine > 0:
            return Rotation.identity()
        helper = numpy.eye(3)[numpy.argmin(numpy.abs(source))]
        axis = numpy.cross(source, helper)
        return Rotation.from_rotvec(numpy.pi * axis / numpy.linalg.norm(axis))
    return Rotation.from_rotvec(axis / sine * numpy.arctan2(sine, cosine))


def _rolled(source, target, rolls):
    """Rotations taking `source` to `target`, rolled about `target`."""
    base = _align(source, target)
    angles = numpy.arange(rolls) * 2.0 * numpy.pi / rolls
    return Rotation.from_rotvec(angles[:, None] * target) * base


def charging_objective(rotations, sun_direction, body_direction, arrays,
                       weight, boresight=(0.0, 0.0, 1.0), peak=None):
    """
    Score w P/P_max + (1 - w) cos(pointing error) of candidate attitudes.

    Parameters
    ----------
    rotations : scipy.spatial.transform.Rotation
        Candidate attitudes R^{i}_{sc} (one or many).
    sun_direction, body_direction : array
        Inertial unit directions to the Sun and to the small body.

    """
    sun = _unit(sun_direction, 'Sun direction')
    target = _unit(body_direction, 'small-body direction')
    if peak is None:
        peak = best_sun_direction(arrays)[1]
    inverse = rotations.inv()
    power = relative_power(arrays, numpy.atleast_2d(inverse.apply(sun)))
    pointing = numpy.atleast_2d(inverse.apply(target)).dot(
        _unit(boresight, 'boresight'))
    return weight * power / peak + (1.0 - weight) * pointing


def charging_attitude(sun_direction, body_direction, arrays, weight=0.5,
                      boresight=(0.0, 0.0, 1.0), level=3, rolls=36):
    """
    Attitude balancing generated power against small-body pointing.

    Candidates aim the boresight at every icosphere direction and
    exactly at the Sun and the body, or put the best body-frame Sun
    direction exactly on the Sun, each rolled `rolls` times; the best
    few are refined by golden-section search along the three rotation
    axes.

    Returns
    -------
    AttitudeCommand
        Recharge-mode command at zero rate.

    """
    if not 0 <= weight <= 1:
        raise ValueError('Charging weight must lie in [0, 1].')
    sun = _unit(sun_direction, 'Sun direction')
    target = _unit(body_direction, 'small-body direction')
    axis = _unit(boresight, 'boresight')
    sun_body, peak = best_sun_direction(arrays)
    if not peak > 0:
        raise GeometryError('Solar arrays cannot generate power.')
    candidates = [_rolled(sun_body, sun, rolls), _rolled(axis, target, rolls),
                  _rolled(axis, sun, rolls)]
    for direction in icosphere(level):
        candidates.append(_rolled(axis, direction, rolls))
    rotations = Rotation.concatenate(candidates)
    scores = charging_objective(rotations, sun, target, arrays, weight, axis,
                                peak)
    order = numpy.argsort(-scores, kind='stable')

    def score(rotation):
        return float(charging_objective(rotation, sun, target, arrays,
                                        weight, axis, peak)[0])

    best_rotation = rotations[int(order[0])]
    best_score = float(scores[order[0]])
    for index in order[:3]:
        rotation, value = _refine(rotations[int(index)],
                                  float(scores[index]), score)
        if value > best_score + IMPROVEMENT:
            best_rotation, best_score = rotation, value
    logger.debug('Charging attitude score %.6f (w=%.2f).', best_score,
                 weight)
    return AttitudeCommand(properize(best_rotation.as_quat()),
                           numpy.zeros(3), Mode.RECHARGE)


def _refine(rotation, value, score):
    """Coordinate-wise golden-section ascent over small rotations."""
    for step in REFINE_STEPS:
        for axis in numpy.eye(3):
            def negative(angle):
                return -score(Rotation.from_rotvec(angle * axis) * rotation)
            try:
                result = minimize_scalar(negative, bracket=(-step, step),
                                         method='golden',
                                         options={'xtol': 1e-6})
            except (RuntimeError, ValueError):
                continue
            if (-result.fun > value + IMPROVEMENT
                    and abs(result.x) <= 10 * step):
                rotation = Rotation.from_rotvec(result.x * axis) * rotation
                value = -result.fun
    return rotation, value
