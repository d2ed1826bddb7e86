"""Executive work items."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import enum


class TaskKind(enum.Enum):
    RECHARGE = 'Recharge'
    DESATURATE = 'Desaturate'
    EXECUTE_TCM = 'ExecuteTCM'
    DOWNLINK = 'Downlink'


class TaskState(enum.Enum):
    PENDING = 'Pending'
    ACTIVE = 'Active'
    DONE = 'Done'


# lower is more urgent
DEFAULT_PRIORITIES = {
    TaskKind.RECHARGE: 0,
    TaskKind.DESATURATE: 1,
    TaskKind.EXECUTE_TCM: 2,
    TaskKind.DOWNLINK: 3,
}


class Task(object):
    """
    Work item scheduled by priority.

    Attributes
    ----------
    kind : TaskKind
    priority : int
        Lower is more urgent.
    event_id : str
        Event that created the task.
    created : float
        Creation time, s.
    seq : int
        Enqueue order, assigned by the queue.
    state : TaskState
    not_before : float
        Earliest activation time, s; moved forward after a rejection.
    payload : object
        Kind-specific working data (cached attitude command, maneuver
        plan, burn command).
    phase : str
        Progress marker used by multi-stage tasks.

    """

    def __init__(self, kind, priority=None, event_id=None, created=0.0,
                 payload=None):
        self.kind = TaskKind(kind)
        self.priority = (DEFAULT_PRIORITIES[self.kind] if priority is None
                         else int(priority))
        self.event_id = event_id
        self.created = float(created)
        self.seq = None
        self.state = TaskState.PENDING
        self.not_before = float(created)
        self.payload = payload
        self.phase = None
        self.started = None
        self.finished = None
        self.rejections = 0

    @property
    def label(self):
        return '{}#{}'.format(self.kind.value, self.seq)

    def restart(self):
        """Drop progress so the next activation starts over."""
        self.phase = None
        self.payload = None

    def __repr__(self):
        return 'Task({}, priority={}, state={})'.format(
            self.label, self.priority, self.state.value)
