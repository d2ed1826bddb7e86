"""
Reference frames, quaternion algebra and fixed-step integration shared by
all subsystems.
"""

from .frames import FrameId, FrameVector, Pose
from .state_vector import StateLayout, StateVector
from .integrator import rk4_step
from . import quaternion

__all__ = ['FrameId', 'FrameVector', 'Pose', 'StateLayout', 'StateVector',
           'rk4_step', 'quaternion']
