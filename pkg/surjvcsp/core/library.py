#
# surjvcsp/core/library.py
#
"""
Named relations that recur in the theory and in the gadgets.
"""

from surjvcsp.errors import ArgumentError
from .value import INF, as_value
from .relation import Relation, WeightedRelation, soft

RHO_0 = Relation(1, [(0, )]).to_weighted('rho0')
RHO_1 = Relation(1, [(1, )]).to_weighted('rho1')
RHO_EQ = Relation(2, [(0, 0), (1, 1)]).to_weighted('eq')
RHO_NEQ = Relation(2, [(0, 1), (1, 0)]).to_weighted('neq')
RHO_LEQ = Relation(2, [(0, 0), (0, 1), (1, 1)]).to_weighted('leq')

A3 = WeightedRelation.from_function(
    3, lambda x, y, z: 0 if (x + y + z) % 2 == 0 else INF, name='A3')
A4 = WeightedRelation.from_function(
    4, lambda x, y, z, w: 0 if (x + y + z + w) % 2 == 0 else INF, name='A4')

GAMMA_0 = soft(RHO_0.feas(), name='gamma0')
GAMMA_1 = soft(RHO_1.feas(), name='gamma1')
GAMMA_EQ = soft(RHO_EQ.feas(), name='gamma_eq')
# cost 1 exactly on the tuple (0, 1)
GAMMA_CUT = WeightedRelation(2, [0, 1, 0, 0], name='gamma_cut')


def mu(w):
    """
    The ternary relation mu_w of the max-cut gadget: 2 when z = 1 and
    x = y, 1 when z = 1 and x != y, 0 on (0, 0, 0), and w otherwise.
    """
    w = as_value(w)
    if w is INF or w < 0:
        raise ArgumentError("mu needs a finite non-negative weight")

    def value(x, y, z):
        if z == 1:
            return 2 if x == y else 1
        if x == y == 0:
            return 0
        return w

    return WeightedRelation.from_function(3, value, name='mu%s' % w)


def equality_reward():
    """1 on equal pairs, 0 otherwise; a Max-VCSP building block."""
    return WeightedRelation(2, [1, 0, 0, 1], name='eq_reward')


NAMED = {
    r.name: r
    for r in (RHO_0, RHO_1, RHO_EQ, RHO_NEQ, RHO_LEQ, A3, A4,
              GAMMA_0, GAMMA_1, GAMMA_EQ, GAMMA_CUT)
}

__all__ = [
    'RHO_0', 'RHO_1', 'RHO_EQ', 'RHO_NEQ', 'RHO_LEQ', 'A3', 'A4',
    'GAMMA_0', 'GAMMA_1', 'GAMMA_EQ', 'GAMMA_CUT', 'mu', 'equality_reward',
    'NAMED',
]
