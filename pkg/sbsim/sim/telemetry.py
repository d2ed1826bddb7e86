"""Per-step telemetry table and run summary files."""

# python 2/3 compatibility
from __future__ import division, print_function, absolute_import

# global imports
import collections
import json
import logging
import os.path
import pandas

logger = logging.getLogger(__name__)

SCHEMA_VERSION = '1.0'
TELEMETRY_FILE = 'telemetry.csv'
TASKS_FILE = 'tasks.csv'
SUMMARY_FILE = 'summary.json'

NAV_COLUMNS = ['x', 'y', 'z', 'vx', 'vy', 'vz', 'center', 'distance',
               'delta_v']
ATTITUDE_COLUMNS = ['q1', 'q2', 'q3', 'q4', 'wx', 'wy', 'wz']
CONTROL_COLUMNS = ['mode', 'ux', 'uy', 'uz']
POWER_COLUMNS = ['p_solar', 'p_net', 'soc', 'soc_estimate']
COMMS_COLUMNS = ['c_n0', 'rate_b', 'rate_eff', 'buffer_fill',
                 'downlinked']
EXECUTIVE_COLUMNS = ['active_task', 'queue_depth']
FLAG_COLUMNS = ['soc_clamped', 'saturated', 'wheel_rate_limited',
                'desat_limited', 'buffer_overflow']
TASK_COLUMNS = ['time', 'task', 'kind', 'priority', 'transition']


def telemetry_columns(wheel_ids):
    """
    Fixed column order of the telemetry table.

    t, inertial position and velocity (m, m/s), center of integration,
    distance to the target (m), cumulative delta-v (m/s), attitude
    quaternion (scalar last) and body rate (rad/s), one `rw_<id>` rate per
    wheel (rad/s), attitude mode, commanded torque (N m), solar and net
    power (W), SoC and its Coulomb estimate, C/N0 (dB-Hz), data rates
    (bps), buffer fill and cumulative downlinked data (bytes), active task
    and queue depth, then the 0/1 flags.
    """
    return (['t'] + NAV_COLUMNS + ATTITUDE_COLUMNS
            + ['rw_{}'.format(i) for i in wheel_ids] + CONTROL_COLUMNS
            + POWER_COLUMNS + COMMS_COLUMNS + EXECUTIVE_COLUMNS
            + FLAG_COLUMNS)


class Telemetry(object):
    """
    Rows recorded during a run, one per step.

    Attributes
    ----------
    columns : list of str
    rows : list of list

    """

    def __init__(self, columns):
        self.columns = list(columns)
        self.rows = []

    def __len__(self):
        return len(self.rows)

    def append(self, record):
        """Add a record given as a dict holding every column."""
        if len(record) != len(self.columns):
            raise ValueError('Telemetry record has {} fields, expected {}.'
                             .format(len(record), len(self.columns)))
        self.rows.append([record[name] for name in self.columns])

    def frame(self):
        return pandas.DataFrame(self.rows, columns=self.columns)

    def write(self, path, float_format='%.17g'):
        self.frame().to_csv(path, index=False, float_format=float_format,
                            lineterminator='\n')


def task_frame(log):
    """Task lifecycle log as a table."""
    return pandas.DataFrame([list(record) for record in log],
                            columns=TASK_COLUMNS)


def write_summary(path, summary):
    payload = collections.OrderedDict([('schema_version', SCHEMA_VERSION)])
    payload.update(summary)
    with open(path, 'w') as output:
        json.dump(payload, output, indent=2)
        output.write('\n')


def write_run(output_dir, telemetry, summary, task_log=None,
              float_format='%.17g'):
    """Write telemetry.csv, summary.json and optionally tasks.csv."""
    if not os.path.isdir(output_dir):
        os.makedirs(output_dir)
    telemetry.write(os.path.join(output_dir, TELEMETRY_FILE), float_format)
    if task_log is not None:
        task_frame(task_log).to_csv(os.path.join(output_dir, TASKS_FILE),
                                    index=False, float_format=float_format,
                                    lineterminator='\n')
    write_summary(os.path.join(output_dir, SUMMARY_FILE), summary)
    logger.info('Run written to %s.', output_dir)
