from __future__ import absolute_import, division, print_function

import math

import numpy
import pytest

from sbsim.attitude import AttitudeModel, RotorSpec, ThrusterSpec, WingSpec

PYRAMID = 1.0 / math.sqrt(3.0)


@pytest.fixture
def model():
    """Four-wheel pyramid, two fixed wings and twelve thrusters."""
    axes = [(PYRAMID, PYRAMID, PYRAMID), (-PYRAMID, PYRAMID, PYRAMID),
            (-PYRAMID, -PYRAMID, PYRAMID), (PYRAMID, -PYRAMID, PYRAMID)]
    wheels = [RotorSpec('rw{}'.format(i), 2e-3, axis, 0.01, 600.0)
              for i, axis in enumerate(axes)]
    wings = [WingSpec('left', 0.4, (0, 1, 0)),
             WingSpec('right', 0.4, (0, -1, 0))]
    return AttitudeModel(numpy.diag([18.0, 16.0, 12.0]), wheels, wings,
                         ThrusterSpec(12, 0.02, 0.3))
