"""Priority queue with immediate preemption."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import collections
import logging

# local imports
from sbsim.executive.tasks import TaskState

logger = logging.getLogger(__name__)

LifecycleRecord = collections.namedtuple(
    'LifecycleRecord', ['time', 'task', 'kind', 'priority', 'transition'])


class TaskQueue(object):
    """
    Executive task queue.

    Tasks are ordered by (priority, enqueue order); at most one task is
    Active. Every state transition is appended to `log`; Done tasks leave
    `tasks` and survive only there.
    """

    def __init__(self):
        self.tasks = []
        self.active = None
        self.log = []
        self.created = collections.OrderedDict()
        self._seq = 0

    def __len__(self):
        return len(self.tasks)

    def _record(self, t, task, transition):
        self.log.append(LifecycleRecord(t, task.label, task.kind.value,
                                        task.priority, transition))

    def push(self, task):
        task.seq = self._seq
        self._seq += 1
        self.tasks.append(task)
        kind = task.kind.value
        self.created[kind] = self.created.get(kind, 0) + 1
        self._record(task.created, task, 'enqueued')
        return task

    def has_open(self, kind):
        return any(task.kind is kind for task in self.tasks)

    def next_pending(self, t):
        """
        Most urgent Pending task allowed to start at time t.

        A task backing off after a rejection holds back every less urgent
        one until it may restart.
        """
        pending = [task for task in self.tasks
                   if task.state is TaskState.PENDING]
        if not pending:
            return None
        urgent = min(task.priority for task in pending)
        ready = [task for task in pending
                 if task.priority == urgent and task.not_before <= t]
        if not ready:
            return None
        return min(ready, key=lambda task: task.seq)

    def _activate(self, task, t):
        task.state = TaskState.ACTIVE
        if task.started is None:
            task.started = t
        self.active = task
        self._record(t, task, 'activated')
        logger.info('Task %s active at t=%s s.', task.label, t)

    def schedule(self, t=0.0):
        """
        Choose the Active task at time t.

        A Pending task strictly more urgent than the Active one preempts
        it; the preempted task returns to Pending and restarts from
        scratch.
        """
        candidate = self.next_pending(t)
        if candidate is None:
            return self.active
        if self.active is None:
            self._activate(candidate, t)
        elif candidate.priority < self.active.priority:
            preempted = self.active
            preempted.state = TaskState.PENDING
            preempted.restart()
            self._record(t, preempted, 'preempted')
            logger.info('Task %s preempted by %s at t=%s s.',
                        preempted.label, candidate.label, t)
            self._activate(candidate, t)
        return self.active

    def complete(self, task, t):
        task.state = TaskState.DONE
        task.finished = t
        if self.active is task:
            self.active = None
        self.tasks.remove(task)
        self._record(t, task, 'done')
        logger.info('Task %s done at t=%s s.', task.label, t)

    def reject(self, task, t, backoff):
        """Return a task to Pending, not to restart before t + backoff."""
        task.state = TaskState.PENDING
        task.not_before = t + backoff
        task.rejections += 1
        task.restart()
        if self.active is task:
            self.active = None
        self._record(t, task, 'rejected')
        logger.warning('Task %s rejected at t=%s s, retry after %s s.',
                       task.label, t, backoff)

    def counts(self):
        """Number of tasks created per kind."""
        return collections.OrderedDict(self.created)


def schedule(queue, t=0.0):
    """Active task of `queue` at time t, None when the queue is idle."""
    return queue.schedule(t)
