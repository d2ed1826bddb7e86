from __future__ import absolute_import, division, print_function

import math

import numpy
import pytest

from sbsim.comms import (ArqConfig, DataBuffer, FerCurve, LinkBudget,
                         arq_effective_rate, carrier_to_noise,
                         downlink_session, eirp, free_space_loss,
                         go_back_n_rate, pointing_loss,
                         supportable_data_rate)
from sbsim.errors import GeometryError, ZeroThroughputError


@pytest.fixture
def budget():
    return LinkBudget(eirp(50.0, 28.1, 1.0), 40.0, {'other': 265.0},
                      eb_n0=4.2, coding_gain=0.0, margin=3.0)


def test_eirp():
    assert eirp(50.0, 28.1, 1.0) == pytest.approx(44.09, abs=5e-3)
    with pytest.raises(ValueError):
        eirp(0.0, 28.1)


def test_carrier_to_noise(budget):
    assert carrier_to_noise(budget) == pytest.approx(47.69, abs=5e-3)


def test_zero_pointing_error_costs_nothing(budget):
    assert pointing_loss(0.0) == 0.0
    items = budget.line_items(1e11, 0.0)
    assert items['pointing'] == 0.0
    assert items['free_space'] == pytest.approx(
        free_space_loss(1e11, budget.frequency))


def test_range_adds_free_space_loss(budget):
    near = carrier_to_noise(budget, 1e10)
    far = carrier_to_noise(budget, 1e11)
    assert near - far == pytest.approx(20.0)
    with pytest.raises(GeometryError):
        carrier_to_noise(budget, 0.0)


def test_supportable_data_rate(budget):
    rate = supportable_data_rate(carrier_to_noise(budget), budget)
    assert rate == pytest.approx(11194, rel=1e-3)
    coded = LinkBudget(budget.eirp, budget.g_over_t, budget.losses,
                       coding_gain=7.3)
    ratio = supportable_data_rate(carrier_to_noise(coded), coded) / rate
    assert ratio == pytest.approx(10 ** 0.73)


def test_data_rate_clamp(budget):
    assert supportable_data_rate(120.0, budget) == 8e6
    with pytest.raises(ValueError):
        supportable_data_rate(float('nan'), budget)


def test_negative_margin():
    with pytest.raises(ValueError):
        LinkBudget(44.09, 40.0, margin=-1.0)


def test_go_back_n():
    assert go_back_n_rate(1000.0, 0.0, 0.0, 4) == 1000.0
    assert go_back_n_rate(1000.0, 0.0, 0.5, 1) == pytest.approx(500.0)
    assert go_back_n_rate(1000.0, 0.1, 0.0, 8) < \
        go_back_n_rate(1000.0, 0.1, 0.0, 1)
    with pytest.raises(ZeroThroughputError):
        go_back_n_rate(1000.0, 1.0, 0.0, 1)


def test_waterfall_curve():
    curve = FerCurve.waterfall(2.0, fer_at_operating=1e-5, slope=4.0)
    assert curve(2.0) == pytest.approx(1e-5, rel=1e-3)
    assert curve(1.0) > curve(2.0) > curve(3.0)
    assert curve(-20.0) == pytest.approx(1.0, rel=1e-6)
    with pytest.raises(ValueError):
        FerCurve([0.0, 1.0], [0.1, 0.2])


def test_effective_rate_reads_fer_at_link_eb_n0(budget):
    c_n0 = carrier_to_noise(budget)
    rate = supportable_data_rate(c_n0, budget)
    # the link sits 3 dB above the operating point, where FER is negligible
    curve = FerCurve.waterfall(budget.eb_n0)
    effective = arq_effective_rate(rate, c_n0, ArqConfig(1, 0.0, curve))
    assert effective == pytest.approx(rate, rel=1e-6)
    lossy = arq_effective_rate(rate, c_n0, ArqConfig(1, 0.5))
    assert lossy == pytest.approx(rate / 2)
    assert arq_effective_rate(0.0, c_n0, ArqConfig()) == 0.0
    with pytest.raises(ValueError):
        ArqConfig(0)


def test_buffer_drain():
    buffer = DataBuffer(1e9, 1e6)
    drained_buffer, drained = downlink_session(buffer, 8e5, 10.0)
    assert drained == 1e6
    assert drained_buffer.fill == 0.0
    # the original is left untouched
    assert buffer.fill == 1e6
    empty, nothing = downlink_session(DataBuffer(), 8e5, 10.0)
    assert nothing == 0.0 and empty.fill == 0.0
    partial, drained = downlink_session(buffer, 8e5, 5.0)
    assert drained == 5e5
    assert partial.fill == 5e5


def test_buffer_overflow():
    buffer = DataBuffer(100.0, 90.0)
    assert buffer.ingest(30.0) == 20.0
    assert buffer.fill == 100.0
    assert buffer.dropped == 20.0
    with pytest.raises(ValueError):
        buffer.ingest(-1.0)
    with pytest.raises(ValueError):
        DataBuffer(100.0, 200.0)


def test_fer_curve_from_csv(tmp_path):
    path = tmp_path / 'fer.csv'
    path.write_text('eb_n0_db,fer\n0,0.5\n2,0.01\n4,0.0001\n')
    curve = FerCurve.from_csv(str(path))
    assert curve(2.0) == pytest.approx(0.01)
    assert curve(3.0) == pytest.approx(1e-3)
    assert math.isclose(curve(10.0), 1e-4)
    assert numpy.all(numpy.diff(curve.fer) <= 0)
