#
# surjvcsp/edsapprox.py
#
"""
Approximate EDS weighted relations, and whole instances over them, by
Generalised Min-Cut instances.

A certificate for a set function gamma' on [r] is a GMC instance J and a
factor a with J(X) <= gamma'(X) <= a * J(X) for every X.
"""

import logging
from fractions import Fraction
from itertools import product

from surjvcsp.config import settings
from surjvcsp.core import INF, as_value
from surjvcsp.classify import essentially_downset, min_alpha_eds
from surjvcsp.errors import ArgumentError, ApproximationError
from surjvcsp.gmc import (
    GmcInstance,
    DenseTable,
    Scaled,
    Sum,
    Pullback,
    superadditivity_violation,
)
from surjvcsp.utils import mask_of

logger = logging.getLogger(__name__)


class ApproxCertificate:
    """
    Edges (infinite weights allowed) and a set function over the r
    coordinates of a relation, together with the approximation factor.
    The GMC instance is built from them on first use.
    """

    def __init__(self, arity, edges, f, factor):
        self.arity = arity
        self.edges = tuple(edges)
        self.f = f
        self.factor = as_value(factor)
        self._gmc = None

    def __repr__(self):
        return "<ApproxCertificate r=%d factor=%s>" % (self.arity, self.factor)

    @property
    def gmc(self):
        if self._gmc is None:
            self._gmc = GmcInstance.build(self.arity, self.edges, self.f)
        return self._gmc

    def objective(self, subset):
        return self.gmc.objective_original(subset)


def set_function_of(gamma):
    """
    gamma'(X) = gamma(x) - gamma(0) where x_i = 1 exactly for i in X.

    Raises:
        ArgumentError: gamma(0) is infinite or some tuple beats it
    """
    base = gamma.table[0]
    if base is INF:
        raise ArgumentError("relation is infeasible at the zero tuple")
    table = [INF] * (1 << gamma.arity)
    for x, v in gamma.items():
        if v is not INF and v < base:
            raise ArgumentError("relation does not admit <c0>: %r beats the zero tuple"
                                % (x, ))
        table[mask_of(i for i, b in enumerate(x, 1) if b)] = v - base if v is not INF else INF
    return DenseTable(gamma.arity, table)


def approx_factor(r, alpha):
    alpha = as_value(alpha)
    return alpha ** (r + 2) * (r ** 3 + 2 * r)


def eds_violation(function, alpha):
    """
    First pair of masks (X, Y) with alpha (f(X) + f(Y)) < f(X \\ Y), or None.
    """
    table = function.tabulate().table
    masks = range(len(table))
    for x, y in product(masks, repeat=2):
        if alpha * (table[x] + table[y]) < table[x & ~y]:
            return x, y
    return None


def _supersets(mask, full):
    superset = mask
    while True:
        yield superset
        if superset == full:
            return
        superset = (superset + 1) | mask


def approx_strong(function, alpha):
    """
    Certificate with factor alpha**(n+2) * (n**3 + 2n) for an alpha-EDS set
    function on [n].

    Raises:
        ArgumentError: the function is not alpha-EDS
    """
    alpha = as_value(alpha)
    if alpha is INF or alpha < 1:
        raise ArgumentError("alpha must be a finite value >= 1")
    if eds_violation(function, alpha) is not None:
        raise ArgumentError("set function is not %s-EDS" % alpha)
    n = function.size
    table = function.tabulate().table
    scale = Fraction(1, n ** 3 + 2 * n)
    full = (1 << n) - 1

    edges = []
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            bu, bv = 1 << (u - 1), 1 << (v - 1)
            cheapest = min(table[z] for z in range(full + 1)
                           if bool(z & bu) != bool(z & bv))
            edges.append((u, v, scale * cheapest))

    f = [Fraction(0)] * (full + 1)
    for x in range(1, full + 1):
        cheapest = min((bin(z).count('1') ** 2 + 2) * table[z] for z in _supersets(x, full))
        f[x] = bin(x).count('1') * scale * cheapest

    certificate = ApproxCertificate(n, edges, DenseTable(n, f), approx_factor(n, alpha))
    _check_certificate(certificate, function)
    return certificate


def approx_simple(gamma):
    """
    Certificate from the two downset decompositions of an EDS relation:
    infinite edges for duplicate coordinates of Feas, unit edges for those
    of Opt, and f = f_feas + f_opt, all scaled by b_min / n where B is the
    set of positive finite values of gamma'.

    Raises:
        ArgumentError: gamma is not EDS
    """
    n = gamma.arity
    feas = essentially_downset(gamma.feas())
    opt = essentially_downset(gamma.opt())
    if feas is None or opt is None:
        raise ArgumentError("relation is not EDS")
    function = set_function_of(gamma)

    edges = [(i, j, INF) for i, j in feas.equality_pairs()]
    edges += [(i, j, Fraction(1)) for i, j in opt.equality_pairs()]

    feas_reps, feas_sets = mask_of(feas.representatives), {
        mask_of(s) for s in feas.residual_subsets()}
    opt_reps, opt_sets = mask_of(opt.representatives), {
        mask_of(s) for s in opt.residual_subsets()}
    f = []
    for x in range(1 << n):
        value = Fraction(0) if (x & feas_reps) in feas_sets else INF
        if (x & opt_reps) not in opt_sets:
            value = value + bin(x & opt_reps).count('1')
        f.append(value)

    levels = sorted({v for v in function.table if v is not INF and v > 0})
    if levels:
        scale = levels[0] / n
        factor = n * levels[-1] / levels[0]
        edges = [(i, j, scale * w) for i, j, w in edges]
        f = [scale * v for v in f]
    else:
        factor = Fraction(1)

    certificate = ApproxCertificate(n, edges, DenseTable(n, f), factor)
    _check_certificate(certificate, function)
    return certificate


def sandwich_violation(certificate, function):
    """First mask X breaking J(X) <= gamma'(X) <= factor * J(X), or None."""
    table = function.tabulate().table
    for x in range(len(table)):
        subset = frozenset(i for i in range(1, certificate.arity + 1) if x >> (i - 1) & 1)
        lower = certificate.objective(subset)
        if not lower <= table[x] <= certificate.factor * lower:
            return x
    return None


def _check_certificate(certificate, function):
    if certificate.arity > settings['sandwich_check_limit']:
        return
    violation = superadditivity_violation(certificate.f)
    if violation is not None:
        raise ApproximationError("constructed f is not superadditive on %s" % (violation, ))
    x = sandwich_violation(certificate, function)
    if x is not None:
        raise ApproximationError("sandwich fails at mask %d" % x)


def strong_certificate(gamma):
    """approx_strong applied to gamma' with gamma's least EDS coefficient."""
    alpha = min_alpha_eds(gamma)
    if alpha is None:
        raise ArgumentError("relation %r is not EDS" % (gamma, ))
    return approx_strong(set_function_of(gamma), alpha)


def instance_gmc(instance, certificates=None):
    """
    One GMC instance for a whole VCSP instance over EDS relations.

    Each constraint's certificate is relabelled onto its scope (repeated
    variables identified, self-loops dropped) and scaled by the constraint
    weight; the results are summed. The returned factor is the largest of
    the per-constraint factors, so that
    J(X) <= phi(X) - phi(0) <= factor * J(X).

    Returns:
        (GmcInstance, Fraction)

    Raises:
        ArgumentError: a constraint relation is not EDS
    """
    certificates = dict(certificates or {})
    n = instance.num_vars
    edges, parts = [], []
    factor = Fraction(1)
    for constraint in instance.constraints:
        gamma = constraint.relation
        if gamma not in certificates:
            certificates[gamma] = strong_certificate(gamma)
        certificate = certificates[gamma]
        weight, scope = constraint.weight, constraint.scope
        for u, v, w in certificate.edges:
            if scope[u - 1] != scope[v - 1]:
                edges.append((scope[u - 1], scope[v - 1], weight * w))
        parts.append(Scaled(weight, Pullback(certificate.f, scope, n)))
        factor = max(factor, certificate.factor)
    logger.debug("instance GMC from %d constraints, factor %s",
                 len(instance.constraints), factor)
    return GmcInstance.build(n, edges, Sum(parts, size=n)), factor
