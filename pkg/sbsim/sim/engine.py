"""Run loop, run outcome and parameter sweeps."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import concurrent.futures
import logging

# local imports
from sbsim.errors import SimulationError, StepFailure
from sbsim.sim.world import World

logger = logging.getLogger(__name__)


class RunOutcome(object):
    """
    Output of a finished run.

    Attributes
    ----------
    scenario : Scenario
    telemetry : Telemetry
    task_log : list of LifecycleRecord
    summary : dict

    """

    def __init__(self, scenario, telemetry, task_log, summary):
        self.scenario = scenario
        self.telemetry = telemetry
        self.task_log = task_log
        self.summary = summary


def step(world):
    """Advance `world` by one time step and return it."""
    try:
        world.step()
    except (SimulationError, ValueError, ArithmeticError) as error:
        raise StepFailure(world.step_index, world.t, error) from error
    return world


def run(scenario, verbose=False):
    """
    Simulate a scenario from its epoch for its whole duration.

    Raises
    ------
    StepFailure
        Carrying the step index, time and cause of the first failure.

    """
    world = World(scenario)
    steps = scenario.steps
    if verbose:
        print('Simulating {} steps...'.format(steps), end='', flush=True)
    for _ in range(steps):
        step(world)
    if verbose:
        print(' done')
    summary = world.summary()
    logger.info('Run %s finished: final distance %.1f m, delta-v %.4f m/s.',
                scenario.name, summary['final_distance'],
                summary['total_delta_v'])
    return RunOutcome(scenario, world.telemetry, world.queue.log, summary)


def sweep(build, values, workers=None):
    """
    Run one scenario per value on a thread pool.

    Parameters
    ----------
    build : callable
        value -> Scenario; called in the worker so every run owns its
        scenario and world.
    values : list
    workers : int, optional
        Pool size.

    Returns
    -------
    list of (value, RunOutcome)
        In the order of `values`.

    """
    def job(value):
        return run(build(value))

    with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
        outcomes = list(pool.map(job, values))
    return list(zip(values, outcomes))
