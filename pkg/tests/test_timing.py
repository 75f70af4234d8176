#
# tests/test_timing.py
#

import pytest
from unittest import mock

from surjvcsp.timing import DelayTimer


@pytest.fixture
def clock():
    ticks = iter([0.0, 0.5, 0.75, 2.0, 2.25, 2.5])
    return mock.Mock(side_effect=lambda: next(ticks))


@pytest.fixture
def log():
    return mock.MagicMock()


def test_standard_format():
    assert DelayTimer([]).format_timediff(4.2e-2) == '42.0'


def test_rounding_format():
    timer = DelayTimer([], digits=5)
    assert timer.format_timediff(4.22384132e-2) == '42.23841'


def test_units_format():
    timer = DelayTimer([], digits=5, units='s')
    assert timer.format_timediff(4.22384132e-2) == '0.04224'


def test_bad_units():
    with pytest.raises(ValueError):
        DelayTimer([], units='h')


def test_delays(clock, log):
    timer = DelayTimer(['a', 'b'], log=log, units='s', clock=clock)
    assert list(timer) == ['a', 'b']
    assert timer.delays == [0.5, 1.25]
    assert timer.count == 2
    assert timer.max_delay == 1.25
    assert timer.elapsed == 2.5
    assert log.debug.call_count == 2
    assert log.debug.call_args_list[1][0][1] == 2


def test_empty_stream(log):
    timer = DelayTimer(iter(()), log=log)
    assert list(timer) == []
    assert timer.max_delay == 0.0
    assert not log.debug.called


def test_elapsed_before_start():
    assert DelayTimer([]).elapsed == 0.0
