#
# surjvcsp/gmc/enumerate.py
#
"""
Exact enumeration of optimal and near-optimal GMC solutions.

Both procedures recurse on restrictions of the instance to vertex
subsets; solutions found in a restriction are lifted back through the
``keep`` order used to build it.
"""

import logging
from fractions import Fraction

from surjvcsp.core import INF, as_value
from surjvcsp.errors import ArgumentError, StateError
from surjvcsp.mincut import (
    global_min_cut,
    minimal_optimal_solutions,
    optimal_cut_solutions,
    enumerate_cuts_below,
)
from surjvcsp.utils import canonical_sorted
from .instance import LambdaClass, restrict, shortcut_lambda

logger = logging.getLogger(__name__)

# splitting threshold of the near-optimal recursion
BETA = 4


def _lift(subset, solutions):
    keep = sorted(subset)
    return [frozenset(keep[i - 1] for i in X) for X in solutions]


def _solutions_inside(instance, subset):
    """Optimal solutions of the restriction to ``subset``, in parent labels."""
    if len(subset) < 2:
        return INF, []
    value, found = optimal_solutions(restrict(instance, subset))
    return value, _lift(subset, found)


def optimal_solutions(instance):
    """
    The optimum and all optimal solutions, for an instance whose optimum
    is positive (possibly infinite). Returns (INF, []) when every solution
    is infinite.
    """
    if instance.n < 2:
        return INF, []
    graph = instance.graph
    vertices = instance.vertices
    minimal = minimal_optimal_solutions(graph)

    if graph.is_connected():
        candidates = set(optimal_cut_solutions(graph))
    else:
        # with a positive optimum only single components can be optimal
        candidates = set(minimal)

    for Y in minimal:
        candidates.update(_solutions_inside(instance, Y)[1])
    rest = vertices.difference(*minimal)
    if rest:
        candidates.add(rest)
        candidates.update(_solutions_inside(instance, rest)[1])

    scored = [(instance.objective(X), X) for X in candidates]
    best = min((v for v, _ in scored), default=INF)
    if best is INF:
        return INF, []
    return best, canonical_sorted(X for v, X in scored if v == best)


def classify_lambda(instance):
    """
    Raises:
        NoSolutionError: fewer than two vertices
    """
    found = shortcut_lambda(instance)
    if found is None:
        value, _ = optimal_solutions(instance)
        found = LambdaClass.finite(value)
    logger.debug("%r has lambda %s", instance, found.kind.value)
    return found


def _require_finite(instance):
    found = shortcut_lambda(instance)
    if found is not None:
        raise StateError("optimum is %s, not positive and finite" % found.kind.value)


def enumerate_optimal(instance):
    """
    The optimum lambda and every solution attaining it, canonically sorted.

    Raises:
        StateError: lambda is zero or infinite
    """
    _require_finite(instance)
    value, found = optimal_solutions(instance)
    logger.debug("%d optimal solutions at %s", len(found), value)
    return value, found


def _budget_left(budget, spent):
    if spent is INF:
        return None
    left = budget - spent
    return left if left >= 0 else None


def _solutions_below(instance, budget):
    """
    Every solution with objective <= budget, for an instance whose optimum
    is positive. Returns a set.
    """
    n = instance.n
    if budget is None or n < 2:
        return set()
    local_best, _ = optimal_solutions(instance)
    if local_best is INF or local_best > budget:
        return set()

    graph = instance.graph
    vertices = instance.vertices
    if graph.is_connected():
        cut, Y = global_min_cut(graph)
        if BETA * cut >= local_best:
            return {X for X in enumerate_cuts_below(graph, budget)
                    if instance.objective(X) <= budget}
    else:
        cut, Y = Fraction(0), graph.components()[0]

    logger.debug("splitting %d vertices at %s (cut %s)", n, sorted(Y), cut)
    rest = vertices - Y
    inside_y = restrict(instance, Y)
    inside_rest = restrict(instance, rest)

    def below_y(limit):
        if len(Y) < 2:
            return []
        return _lift(Y, _solutions_below(inside_y, limit))

    def below_rest(limit):
        if len(rest) < 2:
            return []
        return _lift(rest, _solutions_below(inside_rest, limit))

    found = {Y, rest}
    found.update(below_y(budget))
    found.update(below_rest(budget))

    # solutions crossing Y lose at most twice the cut when split in two
    slack = budget + 2 * cut
    found.update(Y | S for S in below_rest(_budget_left(slack, instance.objective(Y))))
    found.update(rest | T for T in below_y(_budget_left(slack, instance.objective(rest))))

    best_y = _solutions_inside(instance, Y)[0]
    best_rest = _solutions_inside(instance, rest)[0]
    parts_y = below_y(_budget_left(slack, best_rest))
    if parts_y:
        parts_rest = below_rest(_budget_left(slack, best_y))
        costs_y = {T: instance.objective(T) for T in parts_y}
        for S in parts_rest:
            cost = instance.objective(S)
            found.update(S | T for T, c in costs_y.items() if cost + c <= slack)

    return {X for X in found if instance.objective(X) <= budget}


def enumerate_alpha_optimal(instance, alpha):
    """
    Every solution X with J(X) <= alpha * lambda, canonically sorted.

    Raises:
        ArgumentError: alpha < 1
        StateError: lambda is zero or infinite
    """
    alpha = as_value(alpha)
    if alpha is INF or alpha < 1:
        raise ArgumentError("alpha must be a finite value >= 1, got %s" % alpha)
    _require_finite(instance)
    best, _ = optimal_solutions(instance)
    found = canonical_sorted(_solutions_below(instance, alpha * best))
    logger.debug("%d solutions within %s of the optimum %s", len(found), alpha, best)
    return found
