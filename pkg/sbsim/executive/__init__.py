"""
Event-triggered priority executive.
"""

from .tasks import DEFAULT_PRIORITIES, Task, TaskKind, TaskState
from .events import (Event, ExecutiveState, default_events,
                     evaluate_events)
from .scheduler import LifecycleRecord, TaskQueue, schedule
from .charging import (best_sun_direction, charging_attitude,
                       charging_objective, icosphere, relative_power)
from .dispatch import (DispatchResult, ExecutiveSettings, SubsystemPort,
                       burn_hold, dispatch)

__all__ = ['DEFAULT_PRIORITIES', 'Task', 'TaskKind', 'TaskState', 'Event',
           'ExecutiveState', 'default_events', 'evaluate_events',
           'LifecycleRecord', 'TaskQueue', 'schedule', 'best_sun_direction',
           'charging_attitude', 'charging_objective', 'icosphere',
           'relative_power', 'DispatchResult', 'ExecutiveSettings',
           'SubsystemPort', 'burn_hold', 'dispatch']
