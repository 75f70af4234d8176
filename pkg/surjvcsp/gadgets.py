#
# surjvcsp/gadgets.py
#
"""
Instance transformers and problem encoders.

Fresh variables are always appended after the existing ones, in the
order the construction introduces them.
"""

import logging
from fractions import Fraction
from itertools import permutations

import numpy as np

from surjvcsp.core import INF, Constraint, Instance, Relation, as_value
from surjvcsp.core.library import A3, A4, GAMMA_0, GAMMA_EQ, RHO_0, RHO_1, RHO_LEQ, mu
from surjvcsp.classify import admits_c0
from surjvcsp.errors import ArgumentError, ParseError

logger = logging.getLogger(__name__)


class ParityCheckMatrix:
    """
    An m x n matrix over GF(2), stored as a numpy array of 0/1 integers.
    """

    def __init__(self, rows):
        array = np.array(rows, dtype=np.int64)
        if array.ndim != 2 or array.shape[0] < 1 or array.shape[1] < 1:
            raise ArgumentError("a parity-check matrix needs at least one row and column")
        if not np.isin(array, (0, 1)).all():
            raise ArgumentError("parity-check entries must be 0 or 1")
        self.array = array

    @classmethod
    def from_text(cls, text):
        """
        One row per line of 0/1 characters; blank lines and ``#``
        comments are skipped.

        Raises:
            ParseError: bad character or ragged rows
        """
        rows = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split('#', 1)[0].strip()
            if not line:
                continue
            for column, char in enumerate(line, 1):
                if char not in '01':
                    raise ParseError("expected 0 or 1, got %r" % char, lineno, column)
            if rows and len(line) != len(rows[0]):
                raise ParseError("row has %d entries, expected %d"
                                 % (len(line), len(rows[0])), lineno)
            rows.append([int(c) for c in line])
        if not rows:
            raise ParseError("matrix has no rows")
        return cls(rows)

    def __array__(self, dtype=None, copy=None):
        if dtype is None:
            return self.array
        return self.array.astype(dtype)

    def __repr__(self):
        return "<ParityCheckMatrix %dx%d>" % self.shape

    @property
    def shape(self):
        return self.array.shape

    def supports(self):
        """1-based column indices of the nonzero entries of every row."""
        return [tuple(int(j) + 1 for j in np.flatnonzero(row)) for row in self.array]

    def is_zero(self):
        return not self.array.any()


def pad_surjective(instance):
    """
    Append two unconstrained variables, so that the surjective optimum
    equals the plain optimum of the input.
    """
    return Instance(instance.num_vars + 2, instance.constraints)


def to_vcsp_with_constants(instance):
    """
    One instance per ordered pair (a, b) of distinct variables, pinning
    x_a to 0 and x_b to 1. The smallest plain optimum over the list is the
    surjective optimum of the input.

    Raises:
        ArgumentError: fewer than two variables
    """
    n = instance.num_vars
    if n < 2:
        raise ArgumentError("pinning two distinct variables needs n >= 2")
    return [
        instance.with_constraints([Constraint(1, RHO_0, (a, )), Constraint(1, RHO_1, (b, ))])
        for a, b in permutations(range(1, n + 1), 2)
    ]


def simulate_constants_with_leq(instance):
    """
    Replace the constant relations by rho_leq against two fresh variables
    y0 = n + 1 and y1 = n + 2, which surjectivity forces to 0 and 1.

    The surjective optimum of the result equals the plain optimum of the
    input.
    """
    n = instance.num_vars
    y0, y1 = n + 1, n + 2
    constraints = []
    for c in instance.constraints:
        if c.relation == RHO_0:
            constraints.append(Constraint(c.weight, RHO_LEQ, (c.scope[0], y0)))
        elif c.relation == RHO_1:
            constraints.append(Constraint(c.weight, RHO_LEQ, (y1, c.scope[0])))
        else:
            constraints.append(c)
    for x in range(1, n + 1):
        constraints.append(Constraint(1, RHO_LEQ, (y0, x)))
        constraints.append(Constraint(1, RHO_LEQ, (x, y1)))
    return Instance(n + 2, constraints)


def encode_min_distance(matrix):
    """
    Instance over {A3, gamma0, rho0} whose surjective optimum is the
    minimum weight of a nonzero codeword of ``matrix``; infeasible when
    only the zero codeword exists.

    Variables 1..n are the codeword bits. Each row with support
    a_1..a_k gets prefix-parity variables y_0..y_k with rho0(y_0),
    A3(y_{i-1}, x_{a_i}, y_i) and rho0(y_k).

    Raises:
        ArgumentError: the matrix is all zero
    """
    if not isinstance(matrix, ParityCheckMatrix):
        matrix = ParityCheckMatrix(matrix)
    if matrix.is_zero():
        raise ArgumentError("an all-zero parity-check matrix accepts every word")
    n = matrix.shape[1]
    constraints = []
    fresh = n
    for support in matrix.supports():
        if not support:
            continue
        prefix = list(range(fresh + 1, fresh + len(support) + 2))
        fresh = prefix[-1]
        constraints.append(Constraint(1, RHO_0, (prefix[0], )))
        for i, a in enumerate(support, 1):
            constraints.append(Constraint(1, A3, (prefix[i - 1], a, prefix[i])))
        constraints.append(Constraint(1, RHO_0, (prefix[-1], )))
    constraints.extend(Constraint(1, GAMMA_0, (j, )) for j in range(1, n + 1))
    logger.debug("min-distance gadget: %d codeword bits, %d variables", n, fresh)
    return Instance(fresh, constraints)


def a3_to_a4(instance):
    """
    Rewrite an instance over {A3, gamma0, rho0} into one over
    {A4, gamma_eq} with a fresh variable w = n + 1: A3(x, y, z) becomes
    A4(x, y, z, w), gamma0(x) becomes gamma_eq(x, w), and rho0(y) becomes
    gamma_eq(y, w) at weight 2M + 1, M being the feasible upper bound of
    the input.

    Raises:
        ArgumentError: a constraint uses another relation
    """
    n = instance.num_vars
    w = n + 1
    penalty = 2 * instance.feasible_upper_bound() + 1
    constraints = []
    for c in instance.constraints:
        if c.relation == A3:
            constraints.append(Constraint(c.weight, A4, c.scope + (w, )))
        elif c.relation == GAMMA_0:
            constraints.append(Constraint(c.weight, GAMMA_EQ, c.scope + (w, )))
        elif c.relation == RHO_0:
            constraints.append(Constraint(penalty, GAMMA_EQ, c.scope + (w, )))
        else:
            raise ArgumentError("a3_to_a4 only handles A3, gamma0 and rho0, got %r"
                                % (c.relation, ))
    return Instance(w, constraints)


def encode_maxcut(graph, w=None):
    """
    Instance over {mu_w} for a networkx graph: variables 1..k are the
    vertices in sorted order, k + 1 is the extra variable z, and every
    edge {u, v} gets mu_w(u, v, z). The surjective optimum is
    2|E| - maxcut(G).

    Raises:
        ArgumentError: empty graph, isolated vertices, or w < 2|E| + 1
    """
    nodes = sorted(graph.nodes)
    if not nodes:
        raise ArgumentError("graph has no vertices")
    isolated = [v for v in nodes if graph.degree(v) == 0]
    if isolated:
        raise ArgumentError("graph has isolated vertices %s" % isolated)
    m = graph.number_of_edges()
    w = 2 * m + 1 if w is None else as_value(w)
    if w is INF or w < 2 * m + 1:
        raise ArgumentError("weight must be at least 2|E| + 1 = %d" % (2 * m + 1))
    index = {v: i for i, v in enumerate(nodes, 1)}
    z = len(nodes) + 1
    relation = mu(w)
    constraints = [
        Constraint(1, relation, tuple(sorted((index[u], index[v]))) + (z, ))
        for u, v in graph.edges
    ]
    return Instance(z, sorted(constraints, key=lambda c: c.scope))


def round_alpha(gamma, alpha):
    """
    The crisp relation of an alpha-crisp weighted relation: tuples valued
    in [0, 1] are members, tuples valued above alpha are not.

    Raises:
        ArgumentError: alpha < 1, or a value outside [0, 1] u (alpha, inf]
    """
    alpha = as_value(alpha)
    if alpha is INF or alpha < 1:
        raise ArgumentError("alpha must be a finite value >= 1")
    members = []
    for x, v in gamma.items():
        if v is not INF and 0 <= v <= 1:
            members.append(x)
        elif not v > alpha:
            raise ArgumentError("%r is not %s-crisp: value %s at %r" % (gamma, alpha, v, x))
    return Relation(gamma.arity, members)


def _crisp_members(relation):
    if isinstance(relation, Relation):
        return relation
    if not relation.is_crisp():
        raise ArgumentError("%r is not crisp" % (relation, ))
    return relation.feas()


def replace_crisp(instance, rho, gamma):
    """
    Replace every constraint over the crisp relation ``rho`` by ``gamma``
    at weight 1/(k + 1), k being the number of such constraints. Needs
    Round_a(gamma) == rho for a = max(1, M(k + 1)), M the feasible upper
    bound of the instance; then, for integer-valued instances, optimal
    surjective assignments are unchanged.

    Raises:
        ArgumentError: gamma does not round to rho
    """
    members = _crisp_members(rho)
    matches = [c for c in instance.constraints
               if c.relation.arity == members.arity and c.relation.is_crisp()
               and c.relation.feas() == members]
    k = len(matches)
    if k == 0:
        return instance
    alpha = max(Fraction(1), instance.feasible_upper_bound() * (k + 1))
    if round_alpha(gamma, alpha) != members:
        raise ArgumentError("%r does not round to the replaced relation at %s"
                            % (gamma, alpha))
    weight = Fraction(1, k + 1)
    return Instance(instance.num_vars, (
        Constraint(weight, gamma, c.scope) if c in matches else c
        for c in instance.constraints
    ))


def replace_opt_constraint(instance, gamma):
    """
    Replace every constraint over Opt(gamma) by gamma at weight M/m + 1,
    where m is the smallest positive value of gamma and M the feasible
    upper bound of the instance.

    Raises:
        ArgumentError: gamma is crisp, or not normalized to minimum 0
    """
    if gamma.is_crisp():
        raise ArgumentError("%r is crisp; Opt(gamma) is gamma itself" % (gamma, ))
    finite = [v for v in gamma.table if v is not INF]
    if min(finite) != 0:
        raise ArgumentError("%r must be normalized to minimum 0" % (gamma, ))
    opt = gamma.opt()
    matches = [c for c in instance.constraints
               if c.relation.arity == gamma.arity and c.relation.is_crisp()
               and c.relation.feas() == opt]
    if not matches:
        return instance
    m = min(v for v in finite if v > 0)
    weight = instance.feasible_upper_bound() / m + 1
    return Instance(instance.num_vars, (
        Constraint(weight, gamma, c.scope) if c in matches else c
        for c in instance.constraints
    ))


def _normalize(gamma, low, high, name):
    return gamma.add_constant(-low).scale(1 / (high - low)).renamed(name)


def derive_constant_or_leq(rho):
    """
    rho0 or rho_leq, by identifying coordinates of a crisp relation that
    contains the zero tuple but is not closed under flipping labels.

    Raises:
        ArgumentError: the preconditions fail
    """
    members = _crisp_members(rho)
    r = members.arity
    if (0, ) * r not in members:
        raise ArgumentError("relation does not contain the zero tuple")
    u = next((x for x in members if tuple(1 - b for b in x) not in members), None)
    if u is None:
        raise ArgumentError("relation is closed under flipping labels")
    crisp = members.to_weighted()
    if (1, ) * r not in members:
        return crisp.coord_map([1] * r, 1).renamed(RHO_0.name)
    mapping = [2 if b else 1 for b in u]
    return crisp.coord_map(mapping, 2).renamed(RHO_LEQ.name)


def _costly_tuple(gamma):
    """A tuple u with gamma(0) < gamma(u) < inf, for non-crisp gamma admitting <c0>."""
    if gamma.is_crisp():
        raise ArgumentError("%r is crisp" % (gamma, ))
    if not admits_c0(gamma):
        raise ArgumentError("%r does not admit <c0>" % (gamma, ))
    base = gamma.table[0]
    return next(x for x, v in gamma.items() if v is not INF and v > base)


def derive_soft_unary(gamma):
    """
    gamma0 from a non-crisp relation admitting <c0>: pin to 0 every
    coordinate where a costly tuple u is 0, identify the others, then
    shift and scale.

    Raises:
        ArgumentError: the preconditions fail
    """
    u = _costly_tuple(gamma)
    r = gamma.arity
    if all(u):
        unary = gamma.coord_map([1] * r, 1)
    else:
        unary = gamma.coord_map([1 if b else 2 for b in u], 2).pin(2, 0)
    return _normalize(unary, unary.table[0], unary.table[1], GAMMA_0.name)


def derive_soft_equality(gamma):
    """
    gamma_eq from a non-crisp relation admitting <c0> whose Feas and Opt
    are closed under flipping labels: identify coordinates by a costly
    tuple u, symmetrize, then shift and scale.

    Raises:
        ArgumentError: the preconditions fail
    """
    u = _costly_tuple(gamma)
    for view in (gamma.feas(), gamma.opt()):
        if view != view.negate():
            raise ArgumentError("%r has a view not closed under flipping labels" % (gamma, ))
    binary = gamma.coord_map([1 if b else 2 for b in u], 2)
    symmetric = binary + binary.coord_map([2, 1], 2)
    return _normalize(symmetric, symmetric.table[0], symmetric.table[1], GAMMA_EQ.name)


__all__ = [
    'ParityCheckMatrix',
    'pad_surjective', 'to_vcsp_with_constants', 'simulate_constants_with_leq',
    'encode_min_distance', 'a3_to_a4', 'encode_maxcut',
    'round_alpha', 'replace_crisp', 'replace_opt_constraint',
    'derive_constant_or_leq', 'derive_soft_unary', 'derive_soft_equality',
]
