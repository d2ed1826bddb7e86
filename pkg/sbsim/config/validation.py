"""Physical consistency checks run after a scenario is built."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import logging
import numpy

# local imports
from sbsim.config.builder import build_scenario
from sbsim.errors import InvalidScenario

logger = logging.getLogger(__name__)


def consistency_problems(scenario):
    """List of problems a built Scenario still carries."""
    problems = []
    model = scenario.vehicle.attitude_model
    rates = scenario.vehicle.initial_wheel_rates
    if numpy.any(numpy.abs(rates) > model.wheel_max_rate):
        problems.append('wheel: initial_rate exceeds max_rate.')
    if scenario.executive.wheel_threshold >= numpy.min(
            model.wheel_max_rate, initial=numpy.inf):
        problems.append('executive: wheel_threshold must stay below the '
                        'smallest wheel max_rate.')
    if model.wheels and numpy.linalg.matrix_rank(model.wheel_matrix) < 3:
        problems.append('wheel: wheel axes must span three dimensions.')
    end = scenario.epoch + scenario.duration
    for start, stop in scenario.comms.ground_windows:
        if stop < scenario.epoch or start > end:
            logger.warning('Ground window %s-%s lies outside the run.',
                           start, stop)
    if scenario.comms.ground_windows and \
            scenario.environment.ground_id is None:
        problems.append('environment: ground windows need a ground body.')
    target = scenario.environment.target
    position, _ = scenario.navigation.initial_state.absolute(
        scenario.environment, scenario.epoch)
    if numpy.linalg.norm(position - target.position(scenario.epoch)) \
            <= target.radius:
        problems.append('navigation: the spacecraft starts inside the '
                        'target.')
    return problems


def validate(config):
    """
    Build and check a scenario.

    Parameters
    ----------
    config : ScenarioConfig

    Returns
    -------
    Scenario

    Raises
    ------
    InvalidScenario
        With every problem found.

    """
    scenario = build_scenario(config)
    problems = consistency_problems(scenario)
    if problems:
        raise InvalidScenario('Invalid scenario file {}.'
                              .format(config.source), problems)
    logger.info('Scenario %s is valid: %d steps of %s s.', scenario.name,
                scenario.steps, scenario.dt)
    return scenario
