#
# surjvcsp/classify.py
#
"""
Structural tests on relations (polymorphisms, multimorphisms, downsets,
the EDS property) and the tractability verdict for a finite language.

Every check returns a ``Check``, which is truthy exactly when the
property holds; failed checks carry the lexicographically first violating
family of tuples as ``witness``.
"""

import enum
import logging
from itertools import product
from fractions import Fraction
from collections import namedtuple

from surjvcsp.errors import ArgumentError
from surjvcsp.core import (
    INF,
    Relation,
    WeightedRelation,
    Language,
    apply_componentwise,
    value_sum,
    C0, MIN, MAX, SUB, MNRT, MJRT,
)

logger = logging.getLogger(__name__)


class Check(namedtuple('Check', 'holds witness')):
    __slots__ = ()

    def __bool__(self):
        return self.holds


PASSED = Check(True, None)


def _as_relation(relation):
    if isinstance(relation, WeightedRelation):
        return relation.feas()
    return relation


def admits_polymorphism(relation, op):
    """
    Test whether ``relation`` is closed under ``op`` applied
    componentwise. Weighted relations are tested through Feas.
    """
    relation = _as_relation(relation)
    members = sorted(relation.members)
    for family in product(members, repeat=op.arity):
        if apply_componentwise(op, *family) not in relation.members:
            return Check(False, family)
    return PASSED


def admits_multimorphism(gamma, ops):
    """
    Test the multimorphism <h_1, ..., h_k>: for every family of k
    feasible tuples, each image h_i(x_1..x_k) is feasible and the images
    cost no more in total than the family itself.
    """
    ops = tuple(ops)
    k = len(ops)
    if not 1 <= k <= 3 or any(op.arity != k for op in ops):
        raise ArgumentError("a multimorphism needs k operations of arity k, k in 1..3")
    values = {x: v for x, v in gamma.items() if v is not INF}
    feasible = sorted(values)
    for family in product(feasible, repeat=k):
        images = [values.get(apply_componentwise(op, *family), INF) for op in ops]
        if any(v is INF for v in images):
            return Check(False, family)
        if value_sum(images) > value_sum(values[x] for x in family):
            return Check(False, family)
    return PASSED


def is_downset(relation):
    relation = _as_relation(relation)
    for m in relation.members:
        for i, b in enumerate(m):
            if b and m[:i] + (0, ) + m[i + 1:] not in relation.members:
                return False
    return True


class DownsetDecomposition(namedtuple('DownsetDecomposition',
                                      'arity representatives classes residual')):
    """
    A relation written as equalities between duplicate coordinates plus a
    downset on one representative per class.

    Attributes:
        arity (int): arity of the decomposed relation
        representatives (tuple): smallest coordinate of each class
        classes (tuple of tuple): coordinates that agree on every member
        residual (Relation): projection onto the representatives
    """

    __slots__ = ()

    def representative_of(self, j):
        for cls in self.classes:
            if j in cls:
                return cls[0]
        raise ArgumentError("coordinate %r outside [1, %d]" % (j, self.arity))

    def equality_pairs(self):
        """(representative, duplicate) pairs, in coordinate order."""
        return [(cls[0], j) for cls in self.classes for j in cls[1:]]

    def residual_subsets(self):
        """Residual members as sets of original (representative) coordinates."""
        return frozenset(
            frozenset(i for i, b in zip(self.representatives, m) if b)
            for m in self.residual.members
        )

    def reconstruct(self):
        position = {i: p for p, i in enumerate(self.representatives)}
        rep = {j: cls[0] for cls in self.classes for j in cls}
        return Relation(self.arity, (
            tuple(m[position[rep[j]]] for j in range(1, self.arity + 1))
            for m in self.residual.members
        ))


def essentially_downset(relation):
    """
    Identify coordinates that agree on every member and test whether what
    remains is a downset.

    Returns:
        DownsetDecomposition or None
    """
    relation = _as_relation(relation)
    r = relation.arity
    members = relation.members
    rep = list(range(1, r + 1))
    for j in range(2, r + 1):
        for i in range(1, j):
            if rep[i - 1] == i and all(m[i - 1] == m[j - 1] for m in members):
                rep[j - 1] = i
                break
    representatives = tuple(i for i in range(1, r + 1) if rep[i - 1] == i)
    classes = tuple(
        tuple(j for j in range(1, r + 1) if rep[j - 1] == i) for i in representatives
    )
    residual = Relation(len(representatives), (
        tuple(m[i - 1] for i in representatives) for m in members
    ))
    if not is_downset(residual):
        return None
    return DownsetDecomposition(r, representatives, classes, residual)


def is_eds_relation(gamma):
    return (essentially_downset(gamma.feas()) is not None
            and essentially_downset(gamma.opt()) is not None)


def min_alpha_eds(gamma):
    """
    The least alpha >= 1 for which gamma is alpha-EDS, or None when gamma
    is not EDS at all.

    For feasible x, y the condition reads
    alpha * (gamma(x) + gamma(y) - 2 gamma(0)) >= gamma(sub(x, y)) - gamma(0).
    """
    values = {x: v for x, v in gamma.items() if v is not INF}
    if not values:
        return Fraction(1)
    base = gamma.table[0]
    if base is INF or any(v < base for v in values.values()):
        return None
    alpha = Fraction(1)
    for x, y in product(values, repeat=2):
        z = apply_componentwise(SUB, x, y)
        if z not in values:
            return None
        need = values[z] - base
        if need <= 0:
            continue
        have = values[x] + values[y] - 2 * base
        if have == 0:
            return None
        alpha = max(alpha, need / have)
    return alpha


class Status(enum.Enum):
    TRACTABLE = 'globally-s-tractable'
    INTRACTABLE = 'globally-s-intractable'


class Reason(enum.Enum):
    EDS = 'eds'
    NEG_EDS = 'neg-eds'
    MIN_MIN = 'min-min'
    MAX_MAX = 'max-max'
    MIN_MAX = 'min-max'
    MNRT_TRIPLE = 'mnrt-mnrt-mnrt'
    MJRT_TRIPLE = 'mjrt-mjrt-mjrt'
    MJRT_MJRT_MNRT = 'mjrt-mjrt-mnrt'


MULTIMORPHISMS = (
    (Reason.MIN_MIN, (MIN, MIN)),
    (Reason.MAX_MAX, (MAX, MAX)),
    (Reason.MIN_MAX, (MIN, MAX)),
    (Reason.MNRT_TRIPLE, (MNRT, MNRT, MNRT)),
    (Reason.MJRT_TRIPLE, (MJRT, MJRT, MJRT)),
    (Reason.MJRT_MJRT_MNRT, (MJRT, MJRT, MNRT)),
)


class Verdict(namedtuple('Verdict', 'status reason witnesses')):
    """
    Outcome of classify_language. Tractable verdicts name one reason;
    intractable ones map each failed test to its witness.
    """

    __slots__ = ()

    @property
    def tractable(self):
        return self.status is Status.TRACTABLE

    def to_record(self):
        return {
            'status': self.status.value,
            'reason': self.reason.value if self.reason else None,
            'witnesses': {
                key: _render_witness(witness) for key, witness in self.witnesses.items()
            },
        }


def _render_witness(witness):
    name, *rest = witness
    rendered = [name]
    for part in rest:
        if isinstance(part, str):
            rendered.append(part)
        else:
            rendered.append([''.join(map(str, t)) for t in part])
    return rendered


def is_eds_language(language):
    return all(is_eds_relation(gamma) for gamma in language.values())


def eds_witness(language):
    """
    First (name, view, pair) where a Feas or Opt view is not closed under
    sub, or None if the language is EDS.
    """
    for name, gamma in language.items():
        for view_name, view in (('feas', gamma.feas()), ('opt', gamma.opt())):
            check = admits_polymorphism(view, SUB)
            if not check:
                return (name, view_name, check.witness)
    return None


def multimorphism_witness(language, ops):
    for name, gamma in language.items():
        check = admits_multimorphism(gamma, ops)
        if not check:
            return (name, check.witness)
    return None


def classify_language(language):
    """
    Decide global s-tractability of a finite language.

    Tests run in a fixed order (EDS, NegEDS, then the six multimorphisms)
    and the first success names the reason.
    """
    if not isinstance(language, Language):
        language = Language(language)
    if not language or is_eds_language(language):
        return Verdict(Status.TRACTABLE, Reason.EDS, {})

    witnesses = {Reason.EDS.value: eds_witness(language)}
    negated = language.negate()
    if is_eds_language(negated):
        return Verdict(Status.TRACTABLE, Reason.NEG_EDS, {})
    witnesses[Reason.NEG_EDS.value] = eds_witness(negated)

    for reason, ops in MULTIMORPHISMS:
        witness = multimorphism_witness(language, ops)
        if witness is None:
            logger.debug("%r admits %s", language, reason.value)
            return Verdict(Status.TRACTABLE, reason, {})
        witnesses[reason.value] = witness

    return Verdict(Status.INTRACTABLE, None, witnesses)


def admits_c0(gamma):
    return admits_multimorphism(gamma, (C0, ))
