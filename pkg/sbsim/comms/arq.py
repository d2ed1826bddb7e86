"""Frame error rate curves and Go-Back-N ARQ throughput."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import numpy
import pandas

# local imports
from sbsim.comms.link_budget import to_db
from sbsim.errors import ZeroThroughputError


class FerCurve(object):
    """
    Frame error rate versus Eb/N0, interpolated in log10.

    Attributes
    ----------
    eb_n0 : numpy.ndarray
        Increasing Eb/N0 samples, dB.
    fer : numpy.ndarray
        Non-increasing frame error rates in [0, 1].

    """

    def __init__(self, eb_n0, fer):
        eb_n0 = numpy.asarray(eb_n0, dtype=float)
        fer = numpy.asarray(fer, dtype=float)
        if eb_n0.size < 2 or eb_n0.shape != fer.shape:
            raise ValueError('FER curve needs at least two samples.')
        if numpy.any(numpy.diff(eb_n0) <= 0):
            raise ValueError('FER curve Eb/N0 samples must increase.')
        if numpy.any(numpy.diff(fer) > 0) or numpy.any(fer < 0) or \
                numpy.any(fer > 1):
            raise ValueError('FER values must lie in [0, 1] and not '
                             'increase.')
        self.eb_n0 = eb_n0
        self.fer = fer

    @classmethod
    def waterfall(cls, operating_point, fer_at_operating=1e-5, slope=4.0,
                  span=(-10.0, 10.0), samples=81):
        """
        Sigmoid waterfall with `fer_at_operating` at `operating_point` dB.

        log10 FER falls by about `slope` decades per dB around the
        operating point.
        """
        grid = operating_point + numpy.linspace(span[0], span[1], samples)
        offset = numpy.log(1.0 / fer_at_operating - 1.0)
        logits = offset + slope * numpy.log(10.0) * (grid - operating_point)
        return cls(grid, 1.0 / (1.0 + numpy.exp(logits)))

    @classmethod
    def from_csv(cls, path):
        """Read a table with `eb_n0_db` and `fer` columns."""
        data = pandas.read_csv(path)
        return cls(data['eb_n0_db'].values, data['fer'].values)

    def __call__(self, eb_n0):
        logs = numpy.log10(numpy.maximum(self.fer, 1e-300))
        value = 10.0 ** numpy.interp(eb_n0, self.eb_n0, logs)
        return float(value) if value > 1e-299 else 0.0


class ArqConfig(object):
    """
    Go-Back-N parameters.

    Attributes
    ----------
    window : int
        N, frames sent per acknowledgment.
    ack_error : float
        Acknowledgment channel FER P_ack in [0, 1).
    fer_curve : FerCurve or None
        None models an error-free forward channel.

    """

    def __init__(self, window=1, ack_error=0.0, fer_curve=None):
        if int(window) < 1:
            raise ValueError('ARQ window must be at least one frame.')
        if not 0 <= ack_error < 1:
            raise ValueError('Acknowledgment FER must lie in [0, 1).')
        self.window = int(window)
        self.ack_error = float(ack_error)
        self.fer_curve = fer_curve

    def frame_error_rate(self, eb_n0):
        return self.fer_curve(eb_n0) if self.fer_curve is not None else 0.0


def go_back_n_rate(rate, frame_error, ack_error, window):
    """
    R_eff = R_b / (1 + N (1 - s) / s) with s = (1 - f)(1 - P_ack).

    Raises
    ------
    ZeroThroughputError
        When no frame survives (s = 0).

    """
    success = (1.0 - frame_error) * (1.0 - ack_error)
    if success <= 0:
        raise ZeroThroughputError('Link unusable: frame success probability '
                                  'is zero.')
    return rate / (1.0 + window * (1.0 - success) / success)


def arq_effective_rate(rate, c_n0, config):
    """
    Effective Go-Back-N throughput, bps.

    The FER is read at the link's actual Eb/N0 = C/N0 - R_b (dB).
    """
    if rate <= 0:
        return 0.0
    frame_error = config.frame_error_rate(c_n0 - to_db(rate))
    return go_back_n_rate(rate, frame_error, config.ack_error, config.window)
