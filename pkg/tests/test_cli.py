import io
import json
import os
import shutil
import tempfile
import unittest
import unittest.mock

import pandas

import sbsim.cli.main
from sbsim.errors import LambertConvergenceError


def run_cli(*args):
    """Exit code and standard output of one command line."""
    with unittest.mock.patch('sys.argv', ['sbsim'] + list(args)):
        with unittest.mock.patch('sys.stdout',
                                 new_callable=io.StringIO) as output:
            code = sbsim.cli.main.main()
    return code, output.getvalue()


class CliTestCase(unittest.TestCase):
    def setUp(self):
        self.tmp_dirname = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmp_dirname)

    def test_help(self):
        with unittest.mock.patch('sys.argv', ['', '--help']):
            with self.assertRaises(SystemExit):
                sbsim.cli.main.main()

        with unittest.mock.patch('sys.argv', ['', 'run', '--help']):
            with self.assertRaises(SystemExit):
                sbsim.cli.main.main()

    def test_run(self):
        code, output = run_cli('run', '--set', 'scenario.duration=5',
                               '--seed', '11', '--out', self.tmp_dirname)
        self.assertEqual(code, 0)
        self.assertIn('Results written to', output)
        for name in ('telemetry.csv', 'tasks.csv', 'summary.json'):
            self.assertTrue(os.path.isfile(
                os.path.join(self.tmp_dirname, name)))
        telemetry = pandas.read_csv(
            os.path.join(self.tmp_dirname, 'telemetry.csv'))
        self.assertEqual(len(telemetry), 5)
        with open(os.path.join(self.tmp_dirname, 'summary.json')) as stream:
            self.assertEqual(json.load(stream)['steps'], 5)

    def test_output_directory_from_environment(self):
        target = os.path.join(self.tmp_dirname, 'from_env')
        with unittest.mock.patch.dict('os.environ',
                                      {'SBSIM_OUTPUT_DIR': target}):
            code, _ = run_cli('run', '--set', 'scenario.duration=2')
        self.assertEqual(code, 0)
        self.assertTrue(os.path.isfile(os.path.join(target,
                                                    'telemetry.csv')))

    def test_validate(self):
        code, output = run_cli('validate', '--set', 'scenario.duration=600')
        self.assertEqual(code, 0)
        self.assertIn('600 steps', output)

        code, _ = run_cli('validate', '--set', 'battery.capacty=40')
        self.assertEqual(code, 2)

        code, _ = run_cli('validate', '--scenario',
                          os.path.join(self.tmp_dirname, 'missing.cfg'))
        self.assertEqual(code, 2)

    def test_sweep(self):
        code, _ = run_cli('sweep', '--set', 'scenario.duration=3',
                          '--key', 'scenario.seed', '--values', '1,2',
                          '--workers', '2', '--out', self.tmp_dirname)
        self.assertEqual(code, 0)
        table = pandas.read_csv(os.path.join(self.tmp_dirname, 'sweep.csv'))
        self.assertEqual(list(table['scenario.seed']), [1, 2])
        self.assertTrue((table['steps'] == 3).all())

    def test_link_budget(self):
        code, output = run_cli('link-budget', '--power', '50',
                               '--antenna-gain', '28.1', '--line-loss', '1',
                               '--g-over-t', '40', '--losses', '265',
                               '--window-sweep', '1,4')
        self.assertEqual(code, 0)
        self.assertIn('44.09', output)
        self.assertIn('47.69', output)
        rows = dict(line.rsplit(None, 1) for line in output.splitlines()
                    if line.startswith('R_b'))
        self.assertAlmostEqual(float(rows['R_b (bps)']), 11193.6, delta=1.0)

        code, _ = run_cli('link-budget', '--g-over-t', '40')
        self.assertEqual(code, 2)

        code, _ = run_cli('link-budget', '--eirp', '44.09', '--g-over-t',
                          '40', '--margin', '-1')
        self.assertEqual(code, 2)

    def test_lambert(self):
        code, output = run_cli('lambert', '--r1', '1,0,0', '--r2=-1,0,0',
                               '--tof', '3.141592653589793', '--mu', '1')
        self.assertEqual(code, 0)
        self.assertIn('v1 =', output)
        self.assertIn('relative residual', output)
        v1 = [float(v) for v in
              output.splitlines()[0].split('=')[1].split('m/s')[0]
              .split(',')]
        self.assertAlmostEqual(v1[1], 1.0, places=9)

        code, _ = run_cli('lambert', '--r1', '1,0,0', '--r2', '0,1,0',
                          '--tof', '0', '--mu', '1')
        self.assertEqual(code, 2)

    def test_lambert_non_convergence_is_a_failure(self):
        error = LambertConvergenceError('Lambert iteration failed.', 0.5)
        with unittest.mock.patch('sbsim.cli.main.lambert_solve',
                                 side_effect=error):
            code, _ = run_cli('lambert', '--r1', '1,0,0', '--r2', '0,1,0',
                              '--tof', '1', '--mu', '1')
        self.assertEqual(code, 3)


if __name__ == '__main__':
    unittest.main()
