"""Onboard data storage and downlink draining."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging

logger = logging.getLogger(__name__)

DEFAULT_CAPACITY = 1e9


class DataBuffer(object):
    """
    Onboard memory.

    Attributes
    ----------
    capacity : float
        bytes.
    fill : float
        Stored data, bytes, in [0, capacity].
    dropped : float
        Data lost to overflow since creation, bytes.

    """

    def __init__(self, capacity=DEFAULT_CAPACITY, fill=0.0):
        if not capacity > 0 or not 0 <= fill <= capacity:
            raise ValueError('Buffer needs capacity > 0 and 0 <= fill <= '
                             'capacity.')
        self.capacity = float(capacity)
        self.fill = float(fill)
        self.dropped = 0.0

    def ingest(self, amount):
        """
        Store `amount` bytes.

        Returns
        -------
        float
            Bytes dropped because the buffer was full.

        """
        if amount < 0:
            raise ValueError('Cannot ingest a negative amount of data.')
        room = self.capacity - self.fill
        stored = min(room, amount)
        self.fill += stored
        overflow = amount - stored
        if overflow > 0:
            self.dropped += overflow
            logger.warning('Data buffer full: %.0f bytes dropped.', overflow)
        return overflow

    def copy(self):
        result = DataBuffer(self.capacity, self.fill)
        result.dropped = self.dropped
        return result


def downlink_session(buffer, rate, duration):
    """
    Drain a buffer at `rate` bps for `duration` s.

    Returns
    -------
    (DataBuffer, float)
        New buffer and bytes drained; the drain never exceeds the fill.

    """
    if duration < 0:
        raise ValueError('Downlink duration must be non-negative.')
    drained = min(buffer.fill, max(rate, 0.0) * duration / 8.0)
    result = buffer.copy()
    result.fill = buffer.fill - drained
    return result, drained
