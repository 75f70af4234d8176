#
# surjvcsp/oracle.py
#
"""
Exhaustive reference solvers.

Nothing here prunes: every function walks all assignments (or all vertex
subsets) in lexicographic order, so ties always resolve to the
lexicographically first candidate. Each is guarded by a size limit from
``surjvcsp.config.settings``.
"""

import logging
from itertools import product

import networkx as nx
import numpy as np

from surjvcsp.config import settings
from surjvcsp.core import INF, Assignment, as_value
from surjvcsp.errors import ArgumentError, ResourceGuardError
from surjvcsp.results import Path, SolveResult
from surjvcsp.utils import canonical_sorted, proper_subsets

logger = logging.getLogger(__name__)


def _guard(n, key, what):
    limit = settings[key]
    if n > limit:
        raise ResourceGuardError("brute force %s over %d > %d variables" % (what, n, limit))


def _assignments(n, surjective=False):
    for bits in product((0, 1), repeat=n):
        if surjective and (0 not in bits or 1 not in bits):
            continue
        yield Assignment(bits)


def brute_vcsp(instance):
    """
    Plain minimum over all 2**n assignments.

    Returns:
        (value, Assignment), or (INF, None) when nothing is feasible
    """
    _guard(instance.num_vars, 'brute_force_limit', 'minimisation')
    best, argbest = INF, None
    for s in _assignments(instance.num_vars):
        value = instance.evaluate(s)
        if value is not INF and (argbest is None or value < best):
            best, argbest = value, s
    return best, argbest


def _surjective_scores(instance):
    _guard(instance.num_vars, 'brute_force_limit', 'minimisation')
    return [(instance.evaluate(s), s) for s in _assignments(instance.num_vars, True)]


def brute_vcsp_surjective(instance):
    scores = _surjective_scores(instance)
    feasible = [(v, s) for v, s in scores if v is not INF]
    if not feasible:
        return SolveResult.infeasible(Path.BRUTE_FORCE, len(scores))
    value, s = min(feasible, key=lambda pair: pair[0])
    return SolveResult.optimal(value, s, Path.BRUTE_FORCE, len(scores))


def brute_vcsp_surjective_all(instance):
    """Every optimal surjective assignment, in lexicographic order."""
    feasible = [(v, s) for v, s in _surjective_scores(instance) if v is not INF]
    if not feasible:
        return []
    best = min(v for v, _ in feasible)
    return [s for v, s in feasible if v == best]


def brute_max_surjective(instance):
    """
    Surjective maximum of a Max-VCSP instance (finite values only).

    Returns:
        (value, Assignment), or (None, None) when n < 2
    """
    best, argbest = None, None
    for value, s in _surjective_scores(instance):
        if value is INF:
            raise ArgumentError("Max-VCSP instances must be finite valued")
        if best is None or value > best:
            best, argbest = value, s
    return best, argbest


def _gmc_scores(gmc):
    _guard(gmc.n, 'gmc_brute_limit', 'GMC search')
    return [(gmc.objective(X), X) for X in proper_subsets(gmc.n)]


def brute_gmc(gmc):
    """
    The GMC optimum (0, positive, or INF) and all solutions attaining it,
    canonically sorted; the list is empty when the optimum is INF.
    """
    scores = _gmc_scores(gmc)
    best = min((v for v, _ in scores), default=INF)
    if best is INF:
        return INF, []
    return best, canonical_sorted(X for v, X in scores if v == best)


def brute_gmc_alpha(gmc, alpha):
    """Every solution X with J(X) <= alpha * optimum, canonically sorted."""
    alpha = as_value(alpha)
    if alpha is INF or alpha < 1:
        raise ArgumentError("alpha must be a finite value >= 1")
    scores = _gmc_scores(gmc)
    best = min((v for v, _ in scores), default=INF)
    if best is INF:
        return []
    return canonical_sorted(X for v, X in scores if v <= alpha * best)


def brute_min_distance(matrix):
    """
    Minimum Hamming weight of a nonzero x with H x = 0 over GF(2), or None
    when the kernel is trivial.
    """
    H = np.asarray(matrix, dtype=np.int64)
    n = H.shape[1]
    _guard(n, 'gmc_brute_limit', 'codeword search')
    best = None
    for bits in product((0, 1), repeat=n):
        weight = sum(bits)
        if weight == 0 or (best is not None and weight >= best):
            continue
        if not (H.dot(bits) % 2).any():
            best = weight
    return best


def brute_maxcut(graph):
    """Largest number of edges of a networkx graph crossing a bipartition."""
    nodes = sorted(graph.nodes)
    _guard(len(nodes), 'gmc_brute_limit', 'max-cut search')
    best = 0
    for bits in product((0, 1), repeat=len(nodes)):
        side = dict(zip(nodes, bits))
        best = max(best, nx.cut_size(graph, [v for v in nodes if side[v]]))
    return best
