"""Module defining MissionModel class."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import sys

# local imports
from sbsim.config.default_data import DEFAULT_SCENARIO
from sbsim.config.parser import ScenarioConfig, read_scenario
from sbsim.config.validation import validate
from sbsim.sim.engine import run
from sbsim.utils.results import Results


class MissionModel(object):
    """
    Class holding a mission scenario.

    Attributes:
        config: parsed scenario file with overrides applied.
        scenario: validated Scenario, built on first use.

    """

    def __init__(self, config):
        self.config = config
        self._scenario = None

    @classmethod
    def from_file(cls, path=DEFAULT_SCENARIO, overrides=None):
        """
        Make object from a scenario file.

        Parameters
        ----------
        path : str
            Path to a .cfg scenario file.
        overrides : list of str, optional
            'key=value' strings applied after parsing.

        """
        return cls(read_scenario(path, overrides))

    @classmethod
    def from_string(cls, text, overrides=None):
        return cls(ScenarioConfig.from_string(text)
                   .apply_overrides(overrides))

    def set(self, key, value):
        """Override one scenario key; the scenario is rebuilt on next use."""
        self.config.set(key, str(value))
        self._scenario = None

    def validate(self):
        """Build and check the scenario, raising InvalidScenario."""
        self._scenario = validate(self.config)
        return self._scenario

    @property
    def scenario(self):
        if self._scenario is None:
            self.validate()
        return self._scenario

    def run(self, verbose=False):
        """
        Simulate the scenario.

        Parameters
        ----------
        verbose : bool, optional
            Whether to display status information.

        Returns
        -------
        Results

        """
        if verbose:
            print('Validating scenario ...', end='')
            sys.stdout.flush()
        scenario = self.validate()
        if verbose:
            print(' done')
        return Results(run(scenario, verbose))
