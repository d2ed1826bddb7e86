"""Threshold events with hysteresis that create executive tasks."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import numpy

# local imports
from sbsim.executive.tasks import DEFAULT_PRIORITIES, Task, TaskKind

logger = logging.getLogger(__name__)


class ExecutiveState(object):
    """
    Snapshot of the quantities the executive monitors.

    Attributes
    ----------
    t : float
        s.
    soc : float
        Battery state of charge.
    wheel_rates : numpy.ndarray
        rad/s.
    miss_distance : float or None
        Predicted arrival miss, m; None when not evaluated this step.
    buffer_fill : float
        bytes.
    ground_visible : bool
        Whether a ground window is open.

    """

    def __init__(self, t, soc, wheel_rates=(), miss_distance=None,
                 buffer_fill=0.0, ground_visible=False):
        self.t = float(t)
        self.soc = float(soc)
        self.wheel_rates = numpy.asarray(wheel_rates, dtype=float)
        self.miss_distance = miss_distance
        self.buffer_fill = float(buffer_fill)
        self.ground_visible = bool(ground_visible)

    @property
    def max_wheel_rate(self):
        if not self.wheel_rates.size:
            return 0.0
        return float(numpy.max(numpy.abs(self.wheel_rates)))


class Event(object):
    """
    Threshold crossing that enqueues a task.

    The event fires when `quantity(state)` crosses `threshold` (below it
    when `below` is True) and is then disarmed; it re-arms once the
    quantity leaves the hysteresis band on the other side of the
    threshold, or `holdoff` seconds after firing.

    Attributes
    ----------
    event_id : str
    kind : TaskKind
    quantity : callable
        state -> float or None; None skips the evaluation.
    threshold : float
    band : float
        Width of the hysteresis band, same unit as the quantity.
    below : bool
    gate : callable or None
        state -> bool, extra condition for firing.
    holdoff : float
        s; infinite by default.
    last_fired : float or None

    """

    def __init__(self, event_id, kind, quantity, threshold, band=0.0,
                 below=False, gate=None, holdoff=numpy.inf):
        if band < 0:
            raise ValueError('Hysteresis band must be non-negative.')
        self.event_id = event_id
        self.kind = TaskKind(kind)
        self.quantity = quantity
        self.threshold = float(threshold)
        self.band = float(band)
        self.below = below
        self.gate = gate
        self.holdoff = float(holdoff)
        self.armed = True
        self.last_fired = None

    def _crossed(self, value):
        if self.below:
            return value < self.threshold
        return value > self.threshold

    def _cleared(self, value):
        if self.below:
            return value > self.threshold + self.band
        return value < self.threshold - self.band

    def update(self, state):
        """
        Re-arm if allowed and report whether the predicate holds.

        Returns
        -------
        bool
            True when the event is armed and its predicate holds.

        """
        value = self.quantity(state)
        if value is None:
            return False
        if not self.armed:
            if self._cleared(value) or (
                    self.last_fired is not None
                    and state.t - self.last_fired >= self.holdoff):
                self.armed = True
        if not self.armed or not self._crossed(value):
            return False
        return self.gate is None or bool(self.gate(state))

    def fire(self, t):
        self.armed = False
        self.last_fired = t


def default_events(soc_threshold=0.30, soc_band=0.05, wheel_threshold=400.0,
                   miss_threshold=5000.0, miss_band=1000.0,
                   miss_holdoff=7200.0, buffer_threshold=5e7):
    """Recharge, desaturation, TCM and downlink events."""
    return [
        Event('low_soc', TaskKind.RECHARGE, lambda s: s.soc, soc_threshold,
              band=soc_band, below=True),
        Event('wheel_saturation', TaskKind.DESATURATE,
              lambda s: s.max_wheel_rate, wheel_threshold,
              band=0.5 * wheel_threshold),
        Event('trajectory_miss', TaskKind.EXECUTE_TCM,
              lambda s: s.miss_distance, miss_threshold, band=miss_band,
              holdoff=miss_holdoff),
        Event('buffer_full', TaskKind.DOWNLINK, lambda s: s.buffer_fill,
              buffer_threshold, band=0.5 * buffer_threshold,
              gate=lambda s: s.ground_visible),
    ]


def evaluate_events(state, events, queue=None, priorities=None):
    """
    Fire every armed event whose predicate holds.

    When a queue is given, the new tasks are pushed onto it and events
    whose task kind already has an open task are suppressed (they stay
    armed).

    Returns
    -------
    list of Task
        The tasks created at this evaluation.

    """
    priorities = priorities or DEFAULT_PRIORITIES
    created = []
    for event in events:
        if not event.update(state):
            continue
        if queue is not None and queue.has_open(event.kind):
            continue
        event.fire(state.t)
        task = Task(event.kind, priorities[event.kind], event.event_id,
                    state.t)
        if queue is not None:
            queue.push(task)
        logger.info('Event %s fired at t=%s s.', event.event_id, state.t)
        created.append(task)
    return created
