#
# surjvcsp/gmc/setfunction.py
#
"""
Set functions over the ground set {1..n}, queried as oracles.

All realizations satisfy f(empty) = 0. ``DenseTable`` stores 2**n values
indexed by bitmask (vertex i is bit 2**(i-1)); the other classes build
new functions from existing ones and stay superadditive whenever their
inputs are.
"""

import abc
import logging
from fractions import Fraction

from surjvcsp.classify import Check, PASSED
from surjvcsp.config import settings
from surjvcsp.core import INF, as_value, value_sum
from surjvcsp.errors import ArgumentError, DataError, ResourceGuardError
from surjvcsp.utils import mask_of, subset_of

logger = logging.getLogger(__name__)


class SetFunction(abc.ABC):
    """
    Oracle interface: ``value(X)`` for a frozenset X of the ground set.
    Instances are also callable on any iterable of vertices.
    """

    def __init__(self, size):
        if not isinstance(size, int) or size < 0:
            raise ArgumentError("ground set size must be a non-negative integer")
        self.size = size

    @abc.abstractmethod
    def value(self, subset):
        """Value of the frozenset ``subset``."""

    def __call__(self, subset):
        return self.value(frozenset(subset))

    def tabulate(self):
        """Materialize as a DenseTable."""
        return DenseTable(self.size, [self.value(subset_of(m)) for m in range(1 << self.size)])


class DenseTable(SetFunction):
    """
    Explicit table of 2**n values.

    Raises:
        ArgumentError: wrong table length or f(empty) != 0
    """

    def __init__(self, size, table):
        super().__init__(size)
        table = tuple(as_value(v) for v in table)
        if len(table) != 1 << size:
            raise ArgumentError("a table over %d elements needs %d entries, got %d"
                                % (size, 1 << size, len(table)))
        if table[0] != 0:
            raise ArgumentError("a set function must vanish on the empty set")
        self.table = table

    @classmethod
    def from_mapping(cls, size, values):
        """Build from {mask: value}; unlisted masks are 0."""
        table = [Fraction(0)] * (1 << size)
        for mask, value in values.items():
            if not 0 <= mask < 1 << size:
                raise ArgumentError("mask %r outside a ground set of %d" % (mask, size))
            table[mask] = value
        return cls(size, table)

    @classmethod
    def zero(cls, size):
        return cls(size, [0] * (1 << size))

    def value(self, subset):
        return self.table[mask_of(subset)]

    def by_mask(self, mask):
        return self.table[mask]

    def tabulate(self):
        return self

    def __repr__(self):
        return "<DenseTable n=%d>" % self.size


class Scaled(SetFunction):
    """``factor * inner`` for a finite factor >= 0 (0 * inf = inf)."""

    def __init__(self, factor, inner):
        super().__init__(inner.size)
        factor = as_value(factor)
        if factor is INF or factor < 0:
            raise ArgumentError("scaling factor must be finite and non-negative")
        self.factor = factor
        self.inner = inner

    def value(self, subset):
        return self.factor * self.inner.value(subset)


class Sum(SetFunction):
    def __init__(self, parts, size=None):
        parts = tuple(parts)
        if size is None:
            if not parts:
                raise ArgumentError("an empty sum needs an explicit size")
            size = parts[0].size
        super().__init__(size)
        if any(p.size != size for p in parts):
            raise ArgumentError("summands live on different ground sets")
        self.parts = parts

    def value(self, subset):
        return value_sum(p.value(subset) for p in self.parts)


class Restricted(SetFunction):
    """
    Restriction of ``inner`` to the vertices ``keep`` (relabelled 1..k in
    the given order), with ``absorbed[i - 1]`` added whenever local vertex
    i is in the set. The absorbed weights stand in for the edges that left
    the ground set.
    """

    def __init__(self, inner, keep, absorbed):
        keep = tuple(keep)
        absorbed = tuple(as_value(a) for a in absorbed)
        super().__init__(len(keep))
        if len(absorbed) != len(keep):
            raise ArgumentError("one absorbed weight per kept vertex is required")
        self.inner = inner
        self.keep = keep
        self.absorbed = absorbed

    def value(self, subset):
        lifted = frozenset(self.keep[i - 1] for i in subset)
        return self.inner.value(lifted) + value_sum(self.absorbed[i - 1] for i in subset)


class Pullback(SetFunction):
    """
    ``value(X) = inner({j : mapping[j - 1] in X})``: moves ``inner`` along
    a map from its ground set onto a new ground set of ``size`` elements.
    Several inner elements mapped to the same target are thereby
    identified.
    """

    def __init__(self, inner, mapping, size):
        mapping = tuple(mapping)
        super().__init__(size)
        if len(mapping) != inner.size or any(not 1 <= t <= size for t in mapping):
            raise ArgumentError("mapping must send [%d] into [%d]" % (inner.size, size))
        self.inner = inner
        self.mapping = mapping

    def value(self, subset):
        return self.inner.value(frozenset(
            j for j, target in enumerate(self.mapping, 1) if target in subset
        ))


def superadditivity_violation(function):
    """
    First disjoint pair (X, Y) with f(X) + f(Y) > f(X | Y), or None.
    Runs over all 3**n pairs.
    """
    table = function.tabulate().table
    full = (1 << function.size) - 1
    for union in range(1, full + 1):
        top = table[union]
        if top is INF:
            continue
        # every split of ``union`` into two disjoint parts
        part = (union - 1) & union
        while part:
            if table[part] + table[union ^ part] > top:
                return subset_of(part), subset_of(union ^ part)
            part = (part - 1) & union
    return None


def is_superadditive(function):
    """Check carrying the first violating disjoint pair as its witness."""
    violation = superadditivity_violation(function)
    if violation is None:
        return PASSED
    return Check(False, violation)


def validate_superadditive(function, force=False):
    """
    Raises:
        DataError: the function is not superadditive
        ResourceGuardError: the ground set exceeds the configured limit
            and ``force`` is not set
    """
    limit = settings['superadditivity_limit']
    if function.size > limit and not force:
        raise ResourceGuardError("superadditivity check over %d > %d elements"
                                 % (function.size, limit))
    violation = superadditivity_violation(function)
    if violation is not None:
        X, Y = violation
        raise DataError("not superadditive on %s and %s" % (sorted(X), sorted(Y)))
    return True
