#
# surjvcsp/core/relation.py
#
"""
Weighted relations over the Boolean domain, crisp relations, and
languages.

A weighted relation of arity r is a table of 2**r values. Tuple
(x_1, ..., x_r) sits at index sum(x_i * 2**(r - i)), so x_1 is the most
significant bit and ``itertools.product((0, 1), repeat=r)`` walks the
table in index order.
"""

import logging
from itertools import product
from collections.abc import Mapping
from fractions import Fraction

from surjvcsp.errors import ArgumentError
from .value import INF, as_value, format_value

logger = logging.getLogger(__name__)

R_MAX = 8


def tuple_to_index(bits):
    index = 0
    for b in bits:
        index = (index << 1) | b
    return index


def index_to_tuple(index, arity):
    return tuple((index >> (arity - 1 - i)) & 1 for i in range(arity))


def all_tuples(arity):
    return product((0, 1), repeat=arity)


def _check_arity(arity):
    if not isinstance(arity, int) or not 1 <= arity <= R_MAX:
        raise ArgumentError("arity must be between 1 and %d, got %r" % (R_MAX, arity))


class Relation:
    """
    A crisp relation: a set of r-bit tuples.
    """

    __slots__ = ('arity', 'members')

    def __init__(self, arity, members=()):
        _check_arity(arity)
        members = frozenset(tuple(int(b) for b in m) for m in members)
        for m in members:
            if len(m) != arity or any(b not in (0, 1) for b in m):
                raise ArgumentError("%r is not a %d-bit tuple" % (m, arity))
        self.arity = arity
        self.members = members

    @classmethod
    def full(cls, arity):
        return cls(arity, all_tuples(arity))

    def __contains__(self, bits):
        return tuple(bits) in self.members

    def __iter__(self):
        return iter(sorted(self.members))

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        if not isinstance(other, Relation):
            return NotImplemented
        return self.arity == other.arity and self.members == other.members

    def __hash__(self):
        return hash((self.arity, self.members))

    def __repr__(self):
        body = ', '.join(''.join(map(str, m)) for m in self)
        return "Relation(%d, {%s})" % (self.arity, body)

    def negate(self):
        return Relation(self.arity, (tuple(1 - b for b in m) for m in self.members))

    def to_weighted(self, name=None):
        """The 0/inf table of this relation."""
        table = [INF] * (1 << self.arity)
        for m in self.members:
            table[tuple_to_index(m)] = Fraction(0)
        return WeightedRelation(self.arity, table, name=name)


class WeightedRelation:
    """
    A function {0,1}^r -> Q u {inf} stored as a table.

    Instances are immutable and compare by (arity, table); the optional
    name is only used for display and serialization.
    """

    __slots__ = ('arity', 'table', 'name')

    def __init__(self, arity, table, name=None):
        _check_arity(arity)
        table = tuple(as_value(v) for v in table)
        if len(table) != 1 << arity:
            raise ArgumentError("arity %d needs %d table entries, got %d"
                                % (arity, 1 << arity, len(table)))
        self.arity = arity
        self.table = table
        self.name = name

    @classmethod
    def from_function(cls, arity, func, name=None):
        return cls(arity, [func(*x) for x in all_tuples(arity)], name=name)

    def __call__(self, bits):
        bits = tuple(bits)
        if len(bits) != self.arity:
            raise ArgumentError("expected %d bits, got %d" % (self.arity, len(bits)))
        return self.table[tuple_to_index(bits)]

    def __eq__(self, other):
        if not isinstance(other, WeightedRelation):
            return NotImplemented
        return self.arity == other.arity and self.table == other.table

    def __hash__(self):
        return hash((self.arity, self.table))

    def __repr__(self):
        values = ' '.join(format_value(v) for v in self.table)
        if self.name:
            return "WeightedRelation(%s: %d; %s)" % (self.name, self.arity, values)
        return "WeightedRelation(%d; %s)" % (self.arity, values)

    def items(self):
        """(tuple, value) pairs in index order."""
        return zip(all_tuples(self.arity), self.table)

    def renamed(self, name):
        return WeightedRelation(self.arity, self.table, name=name)

    #
    # Views
    #

    def feas(self):
        return Relation(self.arity, (x for x, v in self.items() if v is not INF))

    def opt(self):
        best = self.min_value()
        if best is None:
            return Relation(self.arity)
        return Relation(self.arity, (x for x, v in self.items() if v == best))

    def min_value(self):
        """Minimum finite value, or None when nothing is feasible."""
        finite = [v for v in self.table if v is not INF]
        return min(finite) if finite else None

    def max_finite(self):
        finite = [v for v in self.table if v is not INF]
        return max(finite) if finite else None

    def is_crisp(self):
        return self.feas() == self.opt()

    #
    # Closure operations
    #

    def negate(self):
        """Swap the labels 0 and 1 in every coordinate."""
        top = (1 << self.arity) - 1
        return WeightedRelation(self.arity, [self.table[top - k] for k in range(top + 1)],
                                name=_negated_name(self.name))

    def add_constant(self, c):
        c = as_value(c)
        if c is INF:
            raise ArgumentError("constant must be finite")
        return WeightedRelation(self.arity, [v + c for v in self.table])

    def scale(self, c):
        """
        Multiply every value by c >= 0; scaling by 0 yields the 0/inf
        table of Feas, since 0 * inf = inf.
        """
        c = as_value(c)
        if c is INF or c < 0:
            raise ArgumentError("scale factor must be finite and non-negative, got %s" % c)
        return WeightedRelation(self.arity, [c * v for v in self.table])

    def coord_map(self, mapping, new_arity):
        """
        Returns gamma'(y_1..y_r') = gamma(y_f(1), ..., y_f(r)) where
        ``mapping`` lists f(1)..f(r) as 1-based coordinates of the result.
        """
        _check_arity(new_arity)
        mapping = tuple(mapping)
        if len(mapping) != self.arity or any(not 1 <= j <= new_arity for j in mapping):
            raise ArgumentError("mapping %r is not a map [%d] -> [%d]"
                                % (mapping, self.arity, new_arity))
        return WeightedRelation.from_function(
            new_arity,
            lambda *y: self(tuple(y[j - 1] for j in mapping)),
        )

    def minimise(self, i):
        """Minimum over coordinate i; the result has arity r - 1."""
        if self.arity == 1:
            raise ArgumentError("cannot minimise a unary relation")
        self._check_coordinate(i)

        def smallest(*y):
            return min(self(y[:i - 1] + (d, ) + y[i - 1:]) for d in (0, 1))

        return WeightedRelation.from_function(self.arity - 1, smallest)

    def pin(self, i, d):
        """Fix coordinate i to label d; the result has arity r - 1."""
        if self.arity == 1:
            raise ArgumentError("cannot pin a unary relation")
        self._check_coordinate(i)
        if d not in (0, 1):
            raise ArgumentError("label must be 0 or 1, got %r" % (d, ))
        return WeightedRelation.from_function(
            self.arity - 1,
            lambda *y: self(y[:i - 1] + (d, ) + y[i - 1:]),
        )

    def __add__(self, other):
        if not isinstance(other, WeightedRelation):
            return NotImplemented
        if other.arity != self.arity:
            raise ArgumentError("cannot add relations of arity %d and %d"
                                % (self.arity, other.arity))
        return WeightedRelation(self.arity, [a + b for a, b in zip(self.table, other.table)])

    add = __add__

    def equivalent_mod_constant(self, other):
        """
        True when the two relations differ by an additive constant (same
        infinite entries, constant difference on the finite ones).
        """
        if self.arity != other.arity:
            return False
        diffs = set()
        for a, b in zip(self.table, other.table):
            if (a is INF) != (b is INF):
                return False
            if a is not INF:
                diffs.add(a - b)
        return len(diffs) <= 1

    def _check_coordinate(self, i):
        if not 1 <= i <= self.arity:
            raise ArgumentError("coordinate %r outside [1, %d]" % (i, self.arity))


def soft(relation, name=None):
    """0 on members of the relation, 1 elsewhere."""
    return WeightedRelation.from_function(
        relation.arity,
        lambda *x: 0 if x in relation else 1,
        name=name,
    )


def _negated_name(name):
    if not name:
        return None
    return name[1:] if name.startswith('~') else '~' + name


class Language(Mapping):
    """
    A finite constraint language: identifiers mapped to weighted
    relations, kept in insertion order.
    """

    def __init__(self, relations=()):
        self._relations = {}
        items = relations.items() if isinstance(relations, Mapping) else relations
        for name, relation in items:
            if not isinstance(relation, WeightedRelation):
                raise ArgumentError("%s is not a weighted relation" % name)
            self._relations[name] = relation.renamed(name)

    def __getitem__(self, name):
        return self._relations[name]

    def __iter__(self):
        return iter(self._relations)

    def __len__(self):
        return len(self._relations)

    def __repr__(self):
        return "Language(%s)" % ', '.join(self._relations)

    def negate(self):
        return Language((name, relation.negate()) for name, relation in self.items())
