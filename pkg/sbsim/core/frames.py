"""Reference frames, frame-tagged vectors and spacecraft pose."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import enum
import numpy

# local imports
from sbsim.errors import GeometryError


class FrameId(enum.Enum):
    """The five frames vectors may be expressed in."""

    INERTIAL = 'inertial'
    SPACECRAFT = 'spacecraft'
    SUN = 'sun'
    SMALL_BODY = 'small_body'
    CENTER_OF_MASS = 'center_of_mass'


class FrameVector(object):
    """
    3-vector tagged with the frame it is expressed in.

    Arithmetic between vectors of different frames raises GeometryError;
    use `transform` to change frame explicitly.

    Attributes
    ----------
    values : numpy.ndarray
        Components (3,).
    frame : FrameId
        Frame of expression.

    """

    __slots__ = ('values', 'frame')

    def __init__(self, values, frame):
        self.values = numpy.asarray(values, dtype=float).reshape(3)
        self.frame = FrameId(frame)

    def _check(self, other):
        if not isinstance(other, FrameVector):
            raise TypeError('Expected FrameVector, got {}.'
                            .format(type(other).__name__))
        if other.frame is not self.frame:
            raise GeometryError('Cannot mix frames {} and {} without a '
                                'transform.'.format(self.frame.value,
                                                    other.frame.value))

    def __add__(self, other):
        self._check(other)
        return FrameVector(self.values + other.values, self.frame)

    def __sub__(self, other):
        self._check(other)
        return FrameVector(self.values - other.values, self.frame)

    def __neg__(self):
        return FrameVector(-self.values, self.frame)

    def __mul__(self, scalar):
        return FrameVector(self.values * float(scalar), self.frame)

    __rmul__ = __mul__

    def dot(self, other):
        self._check(other)
        return float(self.values.dot(other.values))

    def cross(self, other):
        self._check(other)
        return FrameVector(numpy.cross(self.values, other.values), self.frame)

    def norm(self):
        return float(numpy.linalg.norm(self.values))

    def unit(self):
        norm = self.norm()
        if norm == 0:
            raise GeometryError('Zero-norm vector has no direction.')
        return FrameVector(self.values / norm, self.frame)

    def transform(self, matrix, to_frame):
        """Return the vector rotated by `matrix` into `to_frame`."""
        return FrameVector(numpy.dot(matrix, self.values), to_frame)

    def __repr__(self):
        return 'FrameVector({}, {})'.format(list(self.values),
                                            self.frame.value)


class Pose(object):
    """
    Position of the spacecraft CM in the inertial frame and its attitude.

    Attributes
    ----------
    position : FrameVector
        CM position in the inertial frame, m.
    quaternion : numpy.ndarray
        Attitude quaternion q^{i}_{sc}, scalar last.
    rotation : numpy.ndarray
        R^{i}_{sc}, maps spacecraft components to inertial components.

    """

    def __init__(self, position, quaternion):
        from sbsim.core.quaternion import rotation_matrix
        if not isinstance(position, FrameVector):
            position = FrameVector(position, FrameId.INERTIAL)
        if position.frame is not FrameId.INERTIAL:
            raise GeometryError('Pose position must be inertial.')
        self.position = position
        self.quaternion = numpy.asarray(quaternion, dtype=float)
        self.rotation = rotation_matrix(self.quaternion)

    def to_inertial(self, body_vector):
        """Rotate a spacecraft-frame vector into the inertial frame."""
        return numpy.dot(self.rotation, body_vector)

    def to_body(self, inertial_vector):
        """Rotate an inertial vector into the spacecraft frame."""
        return numpy.dot(self.rotation.T, inertial_vector)
