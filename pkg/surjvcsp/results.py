#
# surjvcsp/results.py
#
"""
The record returned by every surjective solver.
"""

import enum
from collections import namedtuple

from surjvcsp.core import INF, format_value


class SolveStatus(enum.Enum):
    OPTIMAL = 'optimal'
    INFEASIBLE = 'infeasible'


class Path(enum.Enum):
    """Which procedure produced a result."""
    EDS_LAMBDA_ZERO = 'eds-lambda-zero'
    EDS_LAMBDA_FINITE = 'eds-lambda-finite'
    EDS_LAMBDA_INFINITE = 'eds-lambda-infinite'
    NEG_EDS = 'neg-eds'
    BRUTE_FORCE = 'brute-force'


class SolveResult(namedtuple('SolveResult',
                             'status value assignment path candidates_examined')):
    """
    Outcome of a surjective solve. ``assignment`` is None unless the
    status is OPTIMAL; infeasible results carry the value INF.
    """

    __slots__ = ()

    @classmethod
    def optimal(cls, value, assignment, path, candidates_examined=0):
        return cls(SolveStatus.OPTIMAL, value, assignment, path, candidates_examined)

    @classmethod
    def infeasible(cls, path, candidates_examined=0):
        return cls(SolveStatus.INFEASIBLE, INF, None, path, candidates_examined)

    @property
    def is_optimal(self):
        return self.status is SolveStatus.OPTIMAL

    def to_record(self):
        return {
            'status': self.status.value,
            'value': format_value(self.value),
            'assignment': list(self.assignment) if self.assignment is not None else None,
            'path': self.path.value,
            'candidates_examined': self.candidates_examined,
        }
