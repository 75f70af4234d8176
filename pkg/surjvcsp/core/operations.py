#
# surjvcsp/core/operations.py
#
"""
Boolean operations used as polymorphisms and multimorphisms, and their
componentwise extension to tuples.
"""

from collections import namedtuple

from surjvcsp.errors import ArgumentError


class BooleanOperation(namedtuple('BooleanOperation', 'name arity func')):
    """
    A k-ary operation on {0, 1}. Calling it on k bits applies it; use
    ``componentwise`` for k tuples of equal length.
    """

    __slots__ = ()

    def __call__(self, *bits):
        return self.func(*bits)

    def componentwise(self, *tuples):
        return apply_componentwise(self, *tuples)

    def __repr__(self):
        return self.name


def apply_componentwise(op, *tuples):
    if len(tuples) != op.arity:
        raise ArgumentError("%s takes %d tuples, got %d" % (op.name, op.arity, len(tuples)))
    lengths = {len(t) for t in tuples}
    if len(lengths) > 1:
        raise ArgumentError("tuples of unequal length %s" % sorted(lengths))
    return tuple(op(*column) for column in zip(*tuples))


C0 = BooleanOperation('c0', 1, lambda x: 0)
C1 = BooleanOperation('c1', 1, lambda x: 1)
NEG = BooleanOperation('neg', 1, lambda x: 1 - x)
MIN = BooleanOperation('min', 2, min)
MAX = BooleanOperation('max', 2, max)
# sub(x, y) = min(x, not y)
SUB = BooleanOperation('sub', 2, lambda x, y: x & (1 - y))
MNRT = BooleanOperation('mnrt', 3, lambda x, y, z: x ^ y ^ z)
MJRT = BooleanOperation('mjrt', 3, lambda x, y, z: (x & y) | (y & z) | (x & z))

OPERATIONS = {op.name: op for op in (C0, C1, NEG, MIN, MAX, SUB, MNRT, MJRT)}
