#!/usr/bin/env python3
"""Command-line front end of sbsim."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import argparse
import logging
import os
import os.path
import sys
import numpy
import pandas

# package imports
from sbsim.comms.arq import ArqConfig, FerCurve, arq_effective_rate, \
    go_back_n_rate
from sbsim.comms.link_budget import LinkBudget, carrier_to_noise, eirp, \
    supportable_data_rate
from sbsim.config.default_data import DEFAULT_SCENARIO, DEGREE, \
    OUTPUT_DIR_VARIABLE
from sbsim.config.parser import read_scenario
from sbsim.config.validation import validate
from sbsim.environment.bodies import MU_SUN
from sbsim.errors import (InvalidScenario, LambertConvergenceError,
                          SimulationError, ZeroThroughputError)
from sbsim.mission import MissionModel
from sbsim.navigation.lambert import PROGRADE, RETROGRADE, lambert_solve
from sbsim.navigation.propagation import kepler_propagate
from sbsim.sim.engine import sweep
from sbsim.sim.telemetry import SCHEMA_VERSION

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_FAILURE = 3
DEFAULT_OUTPUT_DIR = 'sbsim_output'


def _vector(text):
    try:
        values = [float(v) for v in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('{!r} is not a vector'.format(text))
    if len(values) != 3:
        raise argparse.ArgumentTypeError('expected 3 comma-separated values')
    return numpy.array(values)


def _integers(text):
    try:
        return [int(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError('{!r} is not a list of integers'
                                         .format(text))


def _add_scenario_arguments(parser):
    parser.add_argument('--scenario', type=str, default=DEFAULT_SCENARIO,
                        help='Scenario file; default: the bundled cruise '
                             'scenario.')
    parser.add_argument('--set', dest='overrides', action='append',
                        default=[], metavar='KEY=VALUE',
                        help='Override a scenario key (repeatable), as '
                             'section.key=value or key=value.')
    parser.add_argument('--seed', type=int, default=None,
                        help='Random seed; default: the scenario seed.')


def _add_output_argument(parser):
    parser.add_argument('--out', type=str, default=None,
                        help='Output directory; default: ${} or {}.'
                        .format(OUTPUT_DIR_VARIABLE, DEFAULT_OUTPUT_DIR))


def build_parser():
    parser = argparse.ArgumentParser(
        prog='sbsim', description='Simulate spacecraft cruise and approach '
                                  'to a small body.')
    parser.add_argument('--verbose', action='store_true',
                        help='Display progress information.')
    commands = parser.add_subparsers(dest='command')
    commands.required = True

    run = commands.add_parser('run', help='Run a scenario.')
    _add_scenario_arguments(run)
    _add_output_argument(run)

    check = commands.add_parser('validate', help='Validate a scenario.')
    _add_scenario_arguments(check)

    link = commands.add_parser('link-budget',
                               help='Evaluate a downlink budget.')
    link.add_argument('--eirp', type=float, default=None,
                      help='EIRP, dBW; replaces --power/--antenna-gain.')
    link.add_argument('--power', type=float, default=None,
                      help='Transmit power, W.')
    link.add_argument('--antenna-gain', type=float, default=None,
                      help='Antenna gain, dB.')
    link.add_argument('--line-loss', type=float, default=0.0,
                      help='Line loss, dB; default: 0.')
    link.add_argument('--g-over-t', type=float, default=None,
                      help='Receiver G/T, dB/K.')
    link.add_argument('--losses', type=float, default=0.0,
                      help='Fixed losses, dB; default: 0.')
    link.add_argument('--range', type=float, default=None,
                      help='Link range, m; adds free-space and pointing '
                           'losses.')
    link.add_argument('--pointing-error-deg', type=float, default=0.0,
                      help='Pointing error, deg; default: 0.')
    link.add_argument('--frequency', type=float, default=8.45e9,
                      help='Carrier frequency, Hz; default: 8.45e9.')
    link.add_argument('--beamwidth-deg', type=float, default=0.1,
                      help='Half-power beamwidth, deg; default: 0.1.')
    link.add_argument('--eb-n0', type=float, default=4.2,
                      help='Required Eb/N0, dB; default: 4.2.')
    link.add_argument('--coding-gain', type=float, default=0.0,
                      help='Coding gain, dB; default: 0.')
    link.add_argument('--margin', type=float, default=3.0,
                      help='Link margin, dB; default: 3.')
    link.add_argument('--fer', type=float, default=None,
                      help='Fixed frame error rate; default: waterfall curve '
                           'at the Eb/N0 operating point.')
    link.add_argument('--ack-error', type=float, default=0.0,
                      help='Acknowledgment FER; default: 0.')
    link.add_argument('--window', type=int, default=1,
                      help='Go-Back-N window; default: 1.')
    link.add_argument('--window-sweep', type=_integers, default=None,
                      metavar='N1,N2,...',
                      help='Print R_eff for each listed window size.')

    lambert = commands.add_parser('lambert', help='Solve a Lambert problem.')
    lambert.add_argument('--r1', type=_vector, required=True,
                         help='Departure position x,y,z, m.')
    lambert.add_argument('--r2', type=_vector, required=True,
                         help='Arrival position x,y,z, m.')
    lambert.add_argument('--tof', type=float, required=True,
                         help='Time of flight, s.')
    lambert.add_argument('--mu', type=float, default=MU_SUN,
                         help='Gravitational parameter, m3/s2; default: '
                              'the Sun.')
    lambert.add_argument('--retrograde', action='store_true',
                         help='Take the retrograde transfer.')
    lambert.add_argument('--plane-normal', type=_vector,
                         default=numpy.array([0.0, 0.0, 1.0]),
                         help='Transfer-plane hint x,y,z; default: 0,0,1.')

    many = commands.add_parser('sweep',
                               help='Run a scenario for several values of '
                                    'one key.')
    _add_scenario_arguments(many)
    _add_output_argument(many)
    many.add_argument('--key', type=str, required=True,
                      help='Key to vary, as for --set.')
    many.add_argument('--values', type=str, required=True,
                      help='Comma-separated values.')
    many.add_argument('--workers', type=int, default=None,
                      help='Worker threads; default: chosen by Python.')
    return parser


def _overrides(args):
    overrides = list(args.overrides)
    if args.seed is not None:
        overrides.append('scenario.seed={}'.format(args.seed))
    return overrides


def _output_dir(args):
    return (args.out or os.environ.get(OUTPUT_DIR_VARIABLE)
            or DEFAULT_OUTPUT_DIR)


def cmd_run(args):
    model = MissionModel.from_file(args.scenario, _overrides(args))
    results = model.run(args.verbose)
    output_dir = _output_dir(args)
    results.write(output_dir)
    summary = results.summary
    print('Final distance to target: {:.1f} m; total delta-v: {:.4f} m/s; '
          'min SoC: {:.3f}.'.format(summary['final_distance'],
                                    summary['total_delta_v'],
                                    summary['min_soc']))
    print('Results written to {}.'.format(output_dir))
    return EXIT_OK


def cmd_validate(args):
    scenario = validate(read_scenario(args.scenario, _overrides(args)))
    print('Scenario {} is valid: {} steps of {} s.'.format(
        scenario.name, scenario.steps, scenario.dt))
    return EXIT_OK


def cmd_link_budget(args):
    missing = []
    if args.g_over_t is None:
        missing.append('--g-over-t')
    if args.eirp is None:
        for flag, value in (('--power', args.power),
                            ('--antenna-gain', args.antenna_gain)):
            if value is None:
                missing.append('{} (or --eirp)'.format(flag))
    if missing:
        raise InvalidScenario('Missing link-budget parameters.', missing)
    try:
        level = (args.eirp if args.eirp is not None
                 else eirp(args.power, args.antenna_gain, args.line_loss))
        budget = LinkBudget(level, args.g_over_t, {'losses': args.losses},
                            args.eb_n0, args.coding_gain, args.margin,
                            args.frequency, args.beamwidth_deg * DEGREE)
    except ValueError as error:
        raise InvalidScenario('Invalid link-budget parameters.', [str(error)])
    pointing = args.pointing_error_deg * DEGREE
    c_n0 = carrier_to_noise(budget, args.range, pointing)
    rate = supportable_data_rate(c_n0, budget)

    def effective(window):
        try:
            if args.fer is not None:
                return go_back_n_rate(rate, args.fer, args.ack_error, window)
            curve = FerCurve.waterfall(args.eb_n0 - args.coding_gain)
            return arq_effective_rate(
                rate, c_n0, ArqConfig(window, args.ack_error, curve))
        except ZeroThroughputError:
            return 0.0
        except ValueError as error:
            raise InvalidScenario('Invalid ARQ parameters.', [str(error)])

    print('{:<24}{:>14}'.format('Item', 'Value'))
    print('{:<24}{:>14.2f}'.format('EIRP (dBW)', budget.eirp))
    print('{:<24}{:>14.2f}'.format('G/T (dB/K)', budget.g_over_t))
    for name, value in budget.line_items(args.range, pointing).items():
        print('{:<24}{:>14.2f}'.format('Loss {} (dB)'.format(name), value))
    print('{:<24}{:>14.2f}'.format('C/N0 (dB-Hz)', c_n0))
    print('{:<24}{:>14.2f}'.format('R_b (bps)', rate))
    print('{:<24}{:>14.2f}'.format('R_eff (bps)', effective(args.window)))
    if args.window_sweep:
        print('{:<24}{:>14}'.format('Window', 'R_eff (bps)'))
        for window in args.window_sweep:
            print('{:<24}{:>14.2f}'.format(window, effective(window)))
    return EXIT_OK


def cmd_lambert(args):
    direction = RETROGRADE if args.retrograde else PROGRADE
    try:
        v1, v2 = lambert_solve(args.r1, args.r2, args.tof, args.mu,
                               direction, args.plane_normal)
    # a ValueError too, but exits as a simulation failure
    except LambertConvergenceError:
        raise
    except ValueError as error:
        raise InvalidScenario('Degenerate Lambert problem.', [str(error)])
    arrival, _ = kepler_propagate(args.r1, v1, args.tof, args.mu)
    residual = (numpy.linalg.norm(arrival - args.r2)
                / numpy.linalg.norm(args.r2))
    print('v1 = {:.12g}, {:.12g}, {:.12g} m/s'.format(*v1))
    print('v2 = {:.12g}, {:.12g}, {:.12g} m/s'.format(*v2))
    print('relative residual = {:.3e}'.format(residual))
    return EXIT_OK


def _flatten(summary):
    row = {}
    for key, value in summary.items():
        if isinstance(value, dict):
            for kind, count in value.items():
                row['tasks_{}'.format(kind)] = count
        else:
            row[key] = value
    return row


def cmd_sweep(args):
    overrides = _overrides(args)
    values = [v.strip() for v in args.values.split(',') if v.strip()]
    # every scenario is checked before any run starts
    scenarios = [validate(read_scenario(
        args.scenario, overrides + ['{}={}'.format(args.key, value)]))
        for value in values]

    rows = []
    runs = sweep(scenarios.__getitem__, range(len(values)), args.workers)
    for index, outcome in runs:
        row = {args.key: values[index], 'schema_version': SCHEMA_VERSION}
        row.update(_flatten(outcome.summary))
        rows.append(row)
    output_dir = _output_dir(args)
    if not os.path.isdir(output_dir):
        os.makedirs(output_dir)
    table = pandas.DataFrame(rows).fillna(0)
    path = os.path.join(output_dir, 'sweep.csv')
    table.to_csv(path, index=False, float_format='%.17g',
                 lineterminator='\n')
    print('Sweep of {} runs written to {}.'.format(len(rows), path))
    return EXIT_OK


COMMANDS = {
    'run': cmd_run,
    'validate': cmd_validate,
    'link-budget': cmd_link_budget,
    'lambert': cmd_lambert,
    'sweep': cmd_sweep,
}


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose
                        else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s')
    try:
        return COMMANDS[args.command](args)
    except InvalidScenario as error:
        print('error: {}'.format(error), file=sys.stderr)
        return EXIT_INVALID
    except SimulationError as error:
        print('error: {}'.format(error), file=sys.stderr)
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
