#
# surjvcsp/core/instance.py
#
"""
Instances of the valued constraint satisfaction problem and assignments
to their variables.
"""

from collections import namedtuple
from fractions import Fraction

from surjvcsp.errors import ArgumentError
from .value import INF, as_value, value_sum
from .relation import WeightedRelation, Language


class Assignment(tuple):
    """
    A 0/1 vector indexed by variable; ``support`` is the set of variables
    (1-based) labelled 1.
    """

    __slots__ = ()

    def __new__(cls, bits):
        bits = tuple(int(b) for b in bits)
        if any(b not in (0, 1) for b in bits):
            raise ArgumentError("assignment bits must be 0 or 1: %r" % (bits, ))
        return super().__new__(cls, bits)

    @classmethod
    def from_string(cls, text):
        text = text.strip()
        if not text or set(text) - {'0', '1'}:
            raise ArgumentError("assignment must be a bitstring, got %r" % text)
        return cls(int(c) for c in text)

    @classmethod
    def from_set(cls, n, subset):
        return cls(1 if i in subset else 0 for i in range(1, n + 1))

    @property
    def support(self):
        return frozenset(i for i, b in enumerate(self, 1) if b)

    @property
    def is_surjective(self):
        return 0 in self and 1 in self

    def flipped(self):
        return Assignment(1 - b for b in self)

    def __str__(self):
        return ''.join(map(str, self))

    def __repr__(self):
        return "Assignment('%s')" % self


class Constraint(namedtuple('Constraint', 'weight relation scope')):
    """
    A weighted constraint: ``weight * relation(x[scope])``.
    """

    __slots__ = ()

    def __new__(cls, weight, relation, scope):
        weight = as_value(weight)
        if weight is INF or weight < 0:
            raise ArgumentError("constraint weight must be finite and non-negative")
        if not isinstance(relation, WeightedRelation):
            raise ArgumentError("constraint relation must be a WeightedRelation")
        scope = tuple(scope)
        if len(scope) != relation.arity:
            raise ArgumentError("scope %r does not match arity %d" % (scope, relation.arity))
        return super().__new__(cls, weight, relation, scope)

    def value(self, assignment):
        return self.weight * self.relation(assignment[i - 1] for i in self.scope)


class Instance:
    """
    A VCSP instance over variables 1..num_vars.

    The objective of an assignment s is the sum over constraints of
    weight * relation(s restricted to the scope), with inf absorbing.
    """

    def __init__(self, num_vars, constraints=()):
        if not isinstance(num_vars, int) or num_vars < 1:
            raise ArgumentError("an instance needs at least one variable")
        self.num_vars = num_vars
        self.constraints = tuple(
            c if isinstance(c, Constraint) else Constraint(*c) for c in constraints
        )
        for c in self.constraints:
            for i in c.scope:
                if not 1 <= i <= num_vars:
                    raise ArgumentError("variable %r outside [1, %d]" % (i, num_vars))

    def __repr__(self):
        return "<Instance n=%d constraints=%d>" % (self.num_vars, len(self.constraints))

    def __eq__(self, other):
        if not isinstance(other, Instance):
            return NotImplemented
        return (self.num_vars, self.constraints) == (other.num_vars, other.constraints)

    def __hash__(self):
        return hash((self.num_vars, self.constraints))

    def evaluate(self, assignment):
        if len(assignment) != self.num_vars:
            raise ArgumentError("assignment has %d bits, instance has %d variables"
                                % (len(assignment), self.num_vars))
        return value_sum(c.value(assignment) for c in self.constraints)

    def with_constraints(self, extra, num_vars=None):
        return Instance(num_vars or self.num_vars, self.constraints + tuple(extra))

    def relations(self):
        """Distinct constraint relations in order of first use."""
        return list(dict.fromkeys(c.relation for c in self.constraints))

    def language(self):
        names = {}
        for relation in self.relations():
            name = relation.name or 'r%d' % (len(names) + 1)
            while name in names:
                name += "'"
            names[name] = relation
        return Language(names)

    @property
    def max_arity(self):
        return max((c.relation.arity for c in self.constraints), default=0)

    def negate(self):
        return Instance(self.num_vars, (
            Constraint(c.weight, c.relation.negate(), c.scope) for c in self.constraints
        ))

    def feasible_upper_bound(self):
        """
        The weighted sum of the largest finite value of every constraint;
        bounds the objective of any feasible assignment with non-negative
        values.
        """
        return value_sum(c.weight * (c.relation.max_finite() or 0) for c in self.constraints)

    def normalized(self):
        """
        Shift every relation so that its all-zero tuple has value 0.

        Returns:
            (Instance, Fraction): the shifted instance and the total shift,
            so that ``self.evaluate(s) == shifted.evaluate(s) + shift``.

        Raises:
            ArgumentError: a relation is infeasible at the all-zero tuple
        """
        shift = Fraction(0)
        constraints = []
        for c in self.constraints:
            base = c.relation.table[0]
            if base is INF:
                raise ArgumentError("relation %r is infeasible at the zero tuple" % c.relation)
            constraints.append(Constraint(c.weight, c.relation.add_constant(-base), c.scope))
            shift += c.weight * base
        return Instance(self.num_vars, constraints), shift
