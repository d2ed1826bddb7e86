"""Results of a mission run."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# local imports
from sbsim.sim.telemetry import task_frame, write_run


class Results(object):
    """
    Telemetry, task log and summary of a finished run.

    Attributes
    ----------
    summary : dict
        Final distance to the target, total delta-v, minimum SoC, bytes
        downlinked, task counts and run metadata.

    """

    def __init__(self, outcome):
        self._outcome = outcome
        self.summary = outcome.summary

    @property
    def telemetry(self):
        """Telemetry as a pandas.DataFrame, one row per step."""
        return self._outcome.telemetry.frame()

    @property
    def tasks(self):
        """Task lifecycle log as a pandas.DataFrame."""
        return task_frame(self._outcome.task_log)

    def column(self, name):
        return self.telemetry[name].values

    def task_activations(self, kind):
        """Times at which tasks of `kind` became Active."""
        tasks = self.tasks
        selected = tasks[(tasks['kind'] == kind)
                         & (tasks['transition'] == 'activated')]
        return list(selected['time'])

    def write(self, output_dir):
        scenario = self._outcome.scenario
        write_run(output_dir, self._outcome.telemetry, self.summary,
                  self._outcome.task_log if scenario.write_tasks else None,
                  scenario.float_format)
