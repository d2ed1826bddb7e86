from __future__ import absolute_import, division, print_function

import pytest

from sbsim.config import (DEFAULT_SCENARIO, ScenarioConfig, read_scenario,
                          validate)
from sbsim.config.parser import parse_matrix, parse_windows
from sbsim.errors import InvalidScenario


def test_unknown_key_is_reported_with_suggestion():
    config = ScenarioConfig.from_string('[battery]\ncapacty = 80\n')
    assert config.unknown_keys() == [
        "Unknown key battery.capacty. Did you mean 'capacity'?"]


def test_unknown_section():
    config = ScenarioConfig.from_string('[baterry]\ncapacity = 80\n')
    problems = config.unknown_keys()
    assert len(problems) == 1
    assert 'battery' in problems[0]


def test_component_sections_are_known():
    config = ScenarioConfig.from_string(
        '[wheel.a]\nspin_inertia = 2e-3\naxis = 1, 0, 0\n')
    assert config.unknown_keys() == []
    (identifier, values), = config.components('wheel')
    assert identifier == 'a'
    assert values['axis'] == [1.0, 0.0, 0.0]
    assert values['max_rate'] == 600.0


def test_typed_access_and_defaults():
    config = ScenarioConfig.from_string('[scenario]\ndt = 0.5\n')
    assert config.get('scenario', 'dt') == 0.5
    assert config.get('battery', 'capacity') == 80.0
    assert config.get('vehicle', 'inertia')[1] == [0.0, 16.0, 0.0]
    with pytest.raises(InvalidScenario):
        config.get('navigation', 't_arrive')
    with pytest.raises(InvalidScenario):
        config.get('scenario', 'colour')


def test_invalid_values():
    config = ScenarioConfig.from_string('[scenario]\ndt = fast\n')
    with pytest.raises(InvalidScenario) as error:
        config.get('scenario', 'dt')
    assert 'scenario.dt' in str(error.value)
    with pytest.raises(InvalidScenario):
        ScenarioConfig.from_string('no section header')


def test_parse_helpers():
    assert parse_windows('10-20, 30-40') == [(10.0, 20.0), (30.0, 40.0)]
    assert parse_windows('') == []
    with pytest.raises(ValueError):
        parse_windows('30-40, 10-20')
    with pytest.raises(ValueError):
        parse_windows('20-10')
    assert parse_matrix('1, 2, 3, 4, 5, 6, 7, 8, 9')[2] == [7.0, 8.0, 9.0]
    with pytest.raises(ValueError):
        parse_matrix('1, 2')


def test_overrides():
    config = ScenarioConfig.from_string('[body.rock]\nmu = 5\n')
    config.apply_overrides(['seed=3', 'battery.capacity = 40',
                            'body.rock.mu=6'])
    assert config.get('scenario', 'seed') == 3
    assert config.get('battery', 'capacity') == 40.0
    assert config.get('body.rock', 'mu') == 6.0


def test_ambiguous_bare_key():
    config = ScenarioConfig.from_string('')
    with pytest.raises(InvalidScenario) as error:
        config.set('capacity', '40')
    assert 'battery' in str(error.value)
    assert 'buffer' in str(error.value)


def test_unknown_override_key():
    config = ScenarioConfig.from_string('')
    with pytest.raises(InvalidScenario) as error:
        config.set('sede', '3')
    assert "Did you mean 'seed'?" in str(error.value)
    with pytest.raises(InvalidScenario):
        config.set('battery.capacty', '3')
    with pytest.raises(InvalidScenario):
        config.apply_overrides(['seed'])


def test_missing_file():
    with pytest.raises(InvalidScenario) as error:
        read_scenario('/nonexistent/scenario.cfg')
    assert 'Could not find' in str(error.value)


def test_default_scenario_is_valid():
    scenario = validate(read_scenario(DEFAULT_SCENARIO,
                                      ['scenario.duration=600']))
    assert scenario.name == 'cruise'
    assert scenario.steps == 600
    assert scenario.environment.target_id == 'asteroid'
    assert len(scenario.vehicle.attitude_model.wheels) == 4
    assert scenario.comms.ground_visible(12000.0)
    assert not scenario.comms.ground_visible(20000.0)


def test_validation_lists_every_problem():
    config = read_scenario(DEFAULT_SCENARIO, [
        'executive.charging_weight=2', 'navigation.t_arrive=0'])
    with pytest.raises(InvalidScenario) as error:
        validate(config)
    problems = error.value.problems
    assert any('charging_weight' in problem for problem in problems)
    assert any('t_arrive' in problem for problem in problems)


def test_duration_must_be_whole_steps():
    config = read_scenario(DEFAULT_SCENARIO, ['scenario.duration=10.5'])
    with pytest.raises(InvalidScenario):
        validate(config)
