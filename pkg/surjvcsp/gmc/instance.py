#
# surjvcsp/gmc/instance.py
#
"""
Generalised Min-Cut instances: minimize J(X) = f(X) + g(X) over
0 < |X| < n, where f is a superadditive oracle and g a graph cut.
"""

import enum
import logging
from collections import namedtuple

from surjvcsp.core import INF
from surjvcsp.errors import ArgumentError, NoSolutionError
from surjvcsp.mincut import Graph, cut_value
from surjvcsp.utils import proper_subsets
from .setfunction import SetFunction, Pullback, Restricted

logger = logging.getLogger(__name__)


class GmcInstance:
    """
    A graph and a set function on the same (merged) vertex set.
    """

    def __init__(self, graph, f):
        if not isinstance(f, SetFunction) or f.size != graph.n:
            raise ArgumentError("set function and graph must share the ground set")
        self.graph = graph
        self.f = f

    @classmethod
    def build(cls, n, edges, f):
        """
        Construct from edges over 1..n (infinite weights allowed) and a set
        function over the same n vertices. Infinite edges are contracted
        and f is moved onto the merged vertices.
        """
        if f.size != n:
            raise ArgumentError("set function is over %d elements, expected %d" % (f.size, n))
        graph = Graph(n, edges)
        if graph.n != n:
            f = Pullback(f, [graph.vertex_of(v) for v in range(1, n + 1)], graph.n)
        return cls(graph, f)

    def __repr__(self):
        return "<GmcInstance n=%d>" % self.n

    @property
    def n(self):
        return self.graph.n

    @property
    def vertices(self):
        return self.graph.vertices

    def objective(self, subset):
        subset = frozenset(subset)
        return self.f.value(subset) + cut_value(self.graph, subset)

    __call__ = objective

    def objective_original(self, subset):
        """Objective of a set of original vertices; inf if it splits a group."""
        merged = self.graph.contract(subset)
        if merged is None:
            return INF
        return self.objective(merged)

    def expand(self, subset):
        return self.graph.expand(subset)

    def solutions(self):
        return proper_subsets(self.n)


def objective(instance, subset):
    return instance.objective(subset)


class LambdaKind(enum.Enum):
    ZERO = 'zero'
    FINITE = 'finite'
    INFINITE = 'infinite'


class LambdaClass(namedtuple('LambdaClass', 'kind value witness')):
    """
    Which of the three regimes the optimum falls in. ZERO carries a
    solution with objective 0; FINITE carries the optimum itself.
    """

    __slots__ = ()

    @classmethod
    def zero(cls, witness):
        return cls(LambdaKind.ZERO, 0, frozenset(witness))

    @classmethod
    def finite(cls, value):
        return cls(LambdaKind.FINITE, value, None)

    @classmethod
    def infinite(cls):
        return cls(LambdaKind.INFINITE, INF, None)


def restrict(instance, subset):
    """
    Restrict to the vertices in ``subset`` (relabelled 1..k in increasing
    order). Edges leaving the subset are absorbed into f, so the objective
    of every proper subset of ``subset`` is unchanged.
    """
    subset = frozenset(subset)
    if not subset or not subset <= instance.vertices:
        raise ArgumentError("restriction needs a nonempty subset of the vertices")
    if len(subset) == instance.n:
        return instance
    keep = sorted(subset)
    graph = instance.graph
    absorbed = [
        sum((w for v, w in graph.neighbours(u).items() if v not in subset), 0)
        for u in keep
    ]
    return GmcInstance(graph.induced(keep), Restricted(instance.f, keep, absorbed))


def shortcut_lambda(instance):
    """
    Settle the zero and infinite regimes without enumeration; returns
    None when the optimum is positive and finite.
    """
    if instance.n < 2:
        raise NoSolutionError("a GMC instance needs at least two vertices")
    for component in instance.graph.components():
        if len(component) < instance.n and instance.f.value(component) == 0:
            return LambdaClass.zero(component)
    if all(instance.f.value(frozenset((v, ))) is INF for v in instance.vertices):
        return LambdaClass.infinite()
    return None
