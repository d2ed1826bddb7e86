"""
Scenario files: keys and defaults, parsing, overrides and validation.
"""

from .default_data import (DATA_DIR, DEFAULT_SCENARIO, OUTPUT_DIR_VARIABLE,
                           SECTIONS, TEMPLATES)
from .parser import ScenarioConfig, read_scenario
from .builder import build_scenario, initial_nav_state, rtn_matrix
from .validation import consistency_problems, validate

__all__ = ['DATA_DIR', 'DEFAULT_SCENARIO', 'OUTPUT_DIR_VARIABLE', 'SECTIONS',
           'TEMPLATES', 'ScenarioConfig', 'read_scenario', 'build_scenario',
           'initial_nav_state', 'rtn_matrix', 'consistency_problems',
           'validate']
