#
# surjvcsp/timing.py
#
"""
Measure the delay between consecutive items of a solution stream.
"""

import time
import logging

logger = logging.getLogger(__name__)


class DelayTimer:
    """
    Iterable wrapper which records when each item of the wrapped stream
    was produced. The delay before the first item counts as well, so a
    stream of k items yields k delays.
    """

    UNIT_TO_FACTOR_MAP = {
        's': 1,
        'ms': 1000,
        'us': 1000000,
    }

    def __init__(self, stream, digits=3, log=None, units='ms', clock=time.monotonic):
        """
        Parameters:
            stream (iterable): the items to time
            digits (int): precision of formatted delays
            log (Logger or None): where each delay is reported at DEBUG
            units (str): one of the keys of UNIT_TO_FACTOR_MAP
            clock (callable): source of monotonic seconds
        """
        if units not in self.UNIT_TO_FACTOR_MAP:
            raise ValueError("unknown time unit %r" % units)
        self.stream = stream
        self.digits = digits
        self.units = units
        self.clock = clock
        self.log = log if log else logger.getChild("id=%x" % id(self))
        self.delays = []
        self.started = None
        self.finished = None

    def __iter__(self):
        self.started = last = self.clock()
        for item in self.stream:
            now = self.clock()
            self.delays.append(now - last)
            self.log.debug("-- item %d after %s%s", len(self.delays),
                           self.format_timediff(now - last), self.units)
            yield item
            last = self.clock()
        self.finished = self.clock()

    @property
    def count(self):
        return len(self.delays)

    @property
    def max_delay(self):
        return max(self.delays, default=0.0)

    @property
    def elapsed(self):
        if self.started is None:
            return 0.0
        end = self.finished if self.finished is not None else self.clock()
        return end - self.started

    def format_timediff(self, td):
        factor = self.UNIT_TO_FACTOR_MAP[self.units]
        return str(round(factor * td, self.digits))
