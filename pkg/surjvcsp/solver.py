#
# surjvcsp/solver.py
#
"""
Surjective solving and enumeration for instances over EDS languages and
their label-flipped duals, with a guarded brute-force fallback for every
other language.

The EDS path shifts every relation so that its all-zero tuple costs 0,
builds one GMC instance J for the whole instance, and reads the answer
off the optimum lambda of J:

* lambda infinite: no surjective assignment is feasible;
* lambda zero: the zero-cost solution of J is optimal, and all optimal
  assignments are the solutions of the CSP obtained by keeping only the
  optimal tuples of every relation;
* lambda finite: the optimum lies among the alpha-optimal solutions of J,
  alpha being the approximation factor of J.
"""

import logging
from fractions import Fraction

from surjvcsp.core import (
    INF,
    MIN,
    Assignment,
    Constraint,
    Instance,
)
from surjvcsp.classify import admits_polymorphism, is_eds_language
from surjvcsp.edsapprox import instance_gmc
from surjvcsp.errors import ArgumentError, NoSolutionError
from surjvcsp.gmc import LambdaKind, classify_lambda, enumerate_alpha_optimal
from surjvcsp import oracle
from surjvcsp.results import Path, SolveResult, SolveStatus

logger = logging.getLogger(__name__)

MODES = ('auto', 'eds', 'brute')


def select_path(instance, mode='auto'):
    """
    Pick 'eds', 'neg-eds' or 'brute' for an instance.

    Raises:
        ArgumentError: unknown mode, or mode 'eds' over a language that
            neither is EDS nor becomes EDS after flipping labels
    """
    if mode not in MODES:
        raise ArgumentError("unknown mode %r, expected one of %s" % (mode, ', '.join(MODES)))
    if mode == 'brute':
        return 'brute'
    language = instance.language()
    if is_eds_language(language):
        return 'eds'
    if is_eds_language(language.negate()):
        return 'neg-eds'
    if mode == 'eds':
        raise ArgumentError("language is neither EDS nor negated EDS")
    return 'brute'


class _EdsReduction:
    """
    The GMC instance of an EDS instance and its lambda class. ``gmc`` is
    None when the instance is trivially infeasible.
    """

    def __init__(self, instance):
        self.instance = instance
        self.gmc = self.factor = self.kind = self.witness = None
        self.shifted, self.shift = None, Fraction(0)
        n = instance.num_vars
        if n < 2 or any(not c.relation.feas() for c in instance.constraints):
            return
        self.shifted, self.shift = instance.normalized()
        gmc, factor = instance_gmc(self.shifted)
        if gmc.n < 2:
            return
        self.gmc, self.factor = gmc, factor
        found = classify_lambda(gmc)
        self.kind, self.witness = found.kind, found.witness
        logger.info("EDS path: GMC on %d vertices, lambda %s, factor %s",
                    gmc.n, found.kind.value, factor)

    @property
    def infeasible(self):
        return self.gmc is None or self.kind is LambdaKind.INFINITE

    def assignment(self, merged):
        return Assignment.from_set(self.instance.num_vars, self.gmc.expand(merged))

    def candidates(self):
        """Assignments of the alpha-optimal GMC solutions, scored."""
        found = enumerate_alpha_optimal(self.gmc, self.factor)
        scored = []
        for X in found:
            s = self.assignment(X)
            scored.append((self.instance.evaluate(s), s))
        return scored


def _solve_eds(instance):
    reduction = _EdsReduction(instance)
    if reduction.infeasible:
        return SolveResult.infeasible(Path.EDS_LAMBDA_INFINITE)
    if reduction.kind is LambdaKind.ZERO:
        s = reduction.assignment(reduction.witness)
        return SolveResult.optimal(instance.evaluate(s), s, Path.EDS_LAMBDA_ZERO, 1)
    scored = reduction.candidates()
    value, s = min(scored)
    return SolveResult.optimal(value, s, Path.EDS_LAMBDA_FINITE, len(scored))


def solve_surjective(instance, mode='auto'):
    """
    An optimal surjective assignment, with the value of the original
    (unshifted) instance.

    Raises:
        ArgumentError: bad mode, or a non-EDS language in mode 'eds'
        ResourceGuardError: brute force over too many variables
    """
    path = select_path(instance, mode)
    logger.info("solving %r via %s", instance, path)
    if path == 'eds':
        return _solve_eds(instance)
    if path == 'neg-eds':
        result = _solve_eds(instance.negate())
        if result.status is SolveStatus.INFEASIBLE:
            return result._replace(path=Path.NEG_EDS)
        return result._replace(assignment=result.assignment.flipped(), path=Path.NEG_EDS)
    return oracle.brute_vcsp_surjective(instance)


def _optimal_tuples_csp(shifted):
    """
    Crisp instance whose solutions are exactly the assignments of value 0
    in a shifted instance of optimum 0. Weight-0 constraints keep their
    whole feasibility relation, since 0 * gamma is Feas(gamma).
    """
    constraints = []
    for c in shifted.constraints:
        view = c.relation.opt() if c.weight > 0 else c.relation.feas()
        constraints.append(Constraint(1, view.to_weighted(), c.scope))
    return Instance(shifted.num_vars, constraints)


def _enumerate_eds(instance):
    reduction = _EdsReduction(instance)
    if reduction.infeasible:
        return
    if reduction.kind is LambdaKind.ZERO:
        csp = _optimal_tuples_csp(reduction.shifted)
        for s in min_closed_enumerate(csp):
            if s.is_surjective:
                yield s
        return
    scored = reduction.candidates()
    best = min(v for v, _ in scored)
    yield from sorted(s for v, s in scored if v == best)


def enumerate_optimal_surjective(instance, mode='auto'):
    """
    Generate every optimal surjective assignment exactly once.

    The lambda-zero path streams assignments as the search finds them;
    the other paths compute their candidates first.
    """
    path = select_path(instance, mode)
    logger.info("enumerating %r via %s", instance, path)
    if path == 'eds':
        yield from _enumerate_eds(instance)
    elif path == 'neg-eds':
        for s in _enumerate_eds(instance.negate()):
            yield s.flipped()
    else:
        yield from oracle.brute_vcsp_surjective_all(instance)


class _Propagator:
    """Generalized arc consistency over 0/1 domains."""

    def __init__(self, instance):
        self.n = instance.num_vars
        self.constraints = [(c.scope, sorted(c.relation.feas().members))
                            for c in instance.constraints]
        self.watch = {v: [] for v in range(1, self.n + 1)}
        for k, (scope, _) in enumerate(self.constraints):
            for v in set(scope):
                self.watch[v].append(k)

    @staticmethod
    def _fits(scope, t, domains):
        seen = {}
        for v, b in zip(scope, t):
            if b not in domains[v] or seen.setdefault(v, b) != b:
                return False
        return True

    def propagate(self, domains, pending):
        """
        Shrink ``domains`` in place; returns False on a wipe-out.
        """
        pending = set(pending)
        while pending:
            scope, members = self.constraints[pending.pop()]
            support = {v: set() for v in scope}
            for t in members:
                if self._fits(scope, t, domains):
                    for v, b in zip(scope, t):
                        support[v].add(b)
            for v, values in support.items():
                if values != domains[v]:
                    domains[v] = domains[v] & values
                    if not domains[v]:
                        return False
                    pending.update(self.watch[v])
        return True


def min_closed_enumerate(instance):
    """
    Generate all satisfying assignments of a crisp instance whose
    relations are closed under min, in lexicographic order.

    Variables are fixed in index order, 0 before 1. Arc consistency
    decides feasibility of each partial assignment exactly for
    min-closed constraints, so the search never backtracks out of a dead
    end.

    Raises:
        ArgumentError: a relation is not closed under min
    """
    for c in instance.constraints:
        check = admits_polymorphism(c.relation, MIN)
        if not check:
            raise ArgumentError("relation %r is not closed under min: %s"
                                % (c.relation, check.witness))

    propagator = _Propagator(instance)
    n = instance.num_vars
    domains = {v: {0, 1} for v in range(1, n + 1)}
    if not propagator.propagate(domains, range(len(propagator.constraints))):
        return

    def extend(i, domains):
        if i > n:
            yield Assignment(min(domains[v]) for v in range(1, n + 1))
            return
        for d in (0, 1):
            if d not in domains[i]:
                continue
            trial = dict(domains)
            trial[i] = {d}
            if propagator.propagate(trial, propagator.watch[i]):
                yield from extend(i + 1, trial)

    yield from extend(1, domains)


def _contributions(instance, s):
    contribution = {v: Fraction(0) for v in range(1, instance.num_vars + 1)}
    for c in instance.constraints:
        value = c.value(s)
        for v in set(c.scope):
            contribution[v] += value
    return contribution


def fixup_surjective(instance, s, r, epsilon):
    """
    Turn an r-approximate assignment of a Max-VCSP instance into an
    (r - epsilon)-approximate surjective one.

    Small instances (n below r * 2 * max_arity / epsilon) are solved
    exactly by brute force. Otherwise the two variables of least
    contribution under ``s`` are relabelled to 0 and 1, whichever way
    round scores higher.

    Raises:
        ArgumentError: bad r or epsilon, wrong assignment length, or
            infinite or negative values
        NoSolutionError: fewer than two variables
    """
    r, epsilon = Fraction(r), Fraction(epsilon)
    if not 0 < epsilon <= r <= 1:
        raise ArgumentError("need 0 < epsilon <= r <= 1, got r=%s epsilon=%s" % (r, epsilon))
    s = Assignment(s)
    n = instance.num_vars
    if len(s) != n:
        raise ArgumentError("assignment has %d bits, instance has %d variables" % (len(s), n))
    for c in instance.constraints:
        if any(v is INF or v < 0 for v in c.relation.table):
            raise ArgumentError("Max-VCSP relations must be finite and non-negative")
    if n < 2:
        raise NoSolutionError("no surjective assignment over a single variable")

    threshold = r * 2 * instance.max_arity / epsilon
    if n < threshold:
        logger.info("fix-up: n=%d below %s, solving exactly", n, threshold)
        return oracle.brute_max_surjective(instance)[1]
    if s.is_surjective:
        return s

    contribution = _contributions(instance, s)
    u, v = sorted(contribution, key=lambda x: (contribution[x], x))[:2]
    best, argbest = None, None
    for du, dv in ((0, 1), (1, 0)):
        bits = list(s)
        bits[u - 1], bits[v - 1] = du, dv
        trial = Assignment(bits)
        value = instance.evaluate(trial)
        if best is None or value > best:
            best, argbest = value, trial
    logger.debug("fix-up relabelled variables %d and %d, value %s", u, v, best)
    return argbest
