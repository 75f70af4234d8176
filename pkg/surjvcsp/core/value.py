#
# surjvcsp/core/value.py
#
"""
Exact extended rationals.

Finite values are ``fractions.Fraction`` instances (always in lowest
terms). The single value ``INF`` stands for +infinity; it absorbs
addition and non-negative scaling, including ``0 * INF == INF``. Mixed
arithmetic and comparison with ints and Fractions work in both operand
orders.
"""

import re
import numbers
from fractions import Fraction

from surjvcsp.errors import ArgumentError

VALUE_REGEX = re.compile(r'^-?\d+(/\d+)?$')


class Infinity:
    """
    Positive infinity. There is exactly one instance, ``INF``.
    """

    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'INF'

    def __str__(self):
        return 'inf'

    def __hash__(self):
        return hash(float('inf'))

    def __reduce__(self):
        return (Infinity, ())

    def __add__(self, other):
        if other is self or isinstance(other, numbers.Rational):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if other is self:
            raise ArgumentError("inf - inf is undefined")
        if isinstance(other, numbers.Rational):
            return self
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Rational):
            raise ArgumentError("cannot subtract inf from a finite value")
        return NotImplemented

    def __mul__(self, other):
        if other is self:
            return self
        if isinstance(other, numbers.Rational):
            if other < 0:
                raise ArgumentError("cannot scale inf by a negative value")
            return self
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational) and other > 0:
            return self
        raise ArgumentError("inf may only be divided by a positive value")

    def __neg__(self):
        raise ArgumentError("negative infinity is not a value")

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        if other is self or isinstance(other, numbers.Rational):
            return False
        return NotImplemented

    def __le__(self, other):
        if other is self or isinstance(other, numbers.Rational):
            return other is self
        return NotImplemented

    def __gt__(self, other):
        if other is self or isinstance(other, numbers.Rational):
            return other is not self
        return NotImplemented

    def __ge__(self, other):
        if other is self or isinstance(other, numbers.Rational):
            return True
        return NotImplemented


INF = Infinity()


def is_finite(value):
    return value is not INF


def as_value(raw):
    """
    Convert ints, Fractions, strings ('inf', 'P', 'P/Q') and INF to a
    value. Floats are rejected apart from float('inf'), as they cannot
    carry exact rationals.

    Raises:
        ArgumentError: raw cannot be represented exactly
    """
    if raw is INF:
        return raw
    if isinstance(raw, bool):
        raise ArgumentError("booleans are not values")
    if isinstance(raw, Fraction):
        return raw
    if isinstance(raw, numbers.Rational):
        return Fraction(raw)
    if isinstance(raw, float):
        if raw == float('inf'):
            return INF
        raise ArgumentError("floating point value %r is not exact" % raw)
    if isinstance(raw, str):
        return parse_value(raw)
    raise ArgumentError("cannot interpret %r as a value" % (raw, ))


def parse_value(text):
    text = text.strip()
    if text == 'inf':
        return INF
    if not VALUE_REGEX.match(text):
        raise ArgumentError("malformed value %r" % text)
    return Fraction(text)


def format_value(value):
    """Render as 'inf', 'P' or 'P/Q'."""
    if value is INF:
        return 'inf'
    return str(as_value(value))


def value_sum(values):
    total = Fraction(0)
    for value in values:
        total = total + value
        if total is INF:
            return INF
    return total
