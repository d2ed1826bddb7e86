"""
Quaternion algebra.

Quaternions are stored scalar last, q = [q_v, q_s], and describe the
attitude q^{i}_{sc} of the spacecraft frame relative to the inertial frame.
`rotation_matrix(q)` returns R^{i}_{sc} (spacecraft -> inertial components),
which is the active rotation matrix scipy associates with the same
scalar-last quaternion. Composition follows the attitude-matrix convention
A(p * q) = A(p) A(q) with A = R^T.
"""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy
from scipy.spatial.transform import Rotation

# local imports
from sbsim.errors import GeometryError

UNIT_TOLERANCE = 1e-9
IDENTITY = numpy.array([0.0, 0.0, 0.0, 1.0])


def _finite(x, name):
    x = numpy.asarray(x, dtype=float)
    if not numpy.all(numpy.isfinite(x)):
        raise GeometryError('Non-finite {}: {}'.format(name, x))
    return x


def _unit(q):
    q = _finite(q, 'quaternion')
    if abs(numpy.linalg.norm(q) - 1.0) > UNIT_TOLERANCE:
        raise GeometryError('Quaternion is not unit-norm: {}'.format(q))
    return q


def cross_matrix(x):
    """Return the matrix x^x such that cross_matrix(x).dot(y) = x cross y."""
    x = _finite(x, 'vector')
    return numpy.array([[0.0, -x[2], x[1]],
                        [x[2], 0.0, -x[0]],
                        [-x[1], x[0], 0.0]])


def omega_matrix(omega):
    """
    Return the 4x4 kinematics matrix Omega(omega).

    Omega = [[-omega^x, omega], [-omega^T, 0]], so that
    dq/dt = 0.5 * Omega(omega) q for a body rate omega in the spacecraft
    frame.
    """
    omega = _finite(omega, 'body rate')
    result = numpy.zeros((4, 4))
    result[:3, :3] = -cross_matrix(omega)
    result[:3, 3] = omega
    result[3, :3] = -omega
    return result


def xi_matrix(q):
    """Return Xi(q) = [q_s I + q_v^x; -q_v^T], a 4x3 matrix."""
    q = _unit(q)
    result = numpy.empty((4, 3))
    result[:3, :] = q[3] * numpy.eye(3) + cross_matrix(q[:3])
    result[3, :] = -q[:3]
    return result


def normalize(q):
    """Return q scaled to unit norm."""
    q = _finite(q, 'quaternion')
    norm = numpy.linalg.norm(q)
    if norm == 0:
        raise GeometryError('Cannot normalize a zero quaternion.')
    return q / norm


def properize(q):
    """
    Return the representative of q with non-negative scalar part.

    When the scalar part vanishes (180 degree rotation) the sign is fixed
    by making the largest-magnitude vector component positive.
    """
    q = numpy.array(q, dtype=float)
    if q[3] < 0:
        return -q
    if q[3] == 0:
        largest = numpy.argmax(numpy.abs(q[:3]))
        if q[largest] < 0:
            return -q
    return q


def conjugate(q):
    """Inverse of a unit quaternion."""
    q = numpy.asarray(q, dtype=float)
    return numpy.array([-q[0], -q[1], -q[2], q[3]])


def quat_multiply(p, q):
    """Composition p * q with A(p * q) = A(p) A(q)."""
    p = numpy.asarray(p, dtype=float)
    q = numpy.asarray(q, dtype=float)
    vector = p[3] * q[:3] + q[3] * p[:3] - numpy.cross(p[:3], q[:3])
    scalar = p[3] * q[3] - p[:3].dot(q[:3])
    return numpy.array([vector[0], vector[1], vector[2], scalar])


def rotation_matrix(q):
    """Return R^{i}_{sc} for the attitude quaternion q."""
    return Rotation.from_quat(_unit(q)).as_matrix()


def from_rotation_matrix(matrix):
    """Return the properized quaternion of a rotation matrix R^{i}_{sc}."""
    matrix = _finite(matrix, 'rotation matrix')
    if (abs(numpy.linalg.det(matrix) - 1.0) > UNIT_TOLERANCE
            or not numpy.allclose(matrix.T.dot(matrix), numpy.eye(3),
                                  atol=UNIT_TOLERANCE)):
        raise GeometryError('Matrix is not a proper rotation.')
    return properize(Rotation.from_matrix(matrix).as_quat())


def from_axis_angle(axis, angle):
    """Quaternion of a rotation by `angle` (rad) about unit `axis`."""
    axis = _finite(axis, 'axis')
    norm = numpy.linalg.norm(axis)
    if norm == 0:
        raise GeometryError('Rotation axis has zero norm.')
    half = 0.5 * angle
    return numpy.append(axis / norm * numpy.sin(half), numpy.cos(half))


def axis_angle(q):
    """
    Return (axis, angle) of the properized quaternion.

    The angle lies in [0, pi]; identity returns the x axis and zero angle.
    """
    q = properize(normalize(q))
    sin_half = numpy.linalg.norm(q[:3])
    angle = 2.0 * numpy.arctan2(sin_half, q[3])
    if sin_half == 0:
        return numpy.array([1.0, 0.0, 0.0]), 0.0
    return q[:3] / sin_half, angle


def error_quaternion(q_target, q_current):
    """Properized rotation q_target * q_current^-1."""
    return properize(quat_multiply(q_target, conjugate(q_current)))


def rotation_angle(q_target, q_current):
    """Geodesic angle between two attitudes, 2 arccos(|q_err,s|)."""
    q_err = quat_multiply(q_target, conjugate(q_current))
    return 2.0 * numpy.arccos(min(1.0, abs(q_err[3])))
