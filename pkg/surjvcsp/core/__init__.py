#
# surjvcsp/core/__init__.py
#
"""
Values, weighted relations, instances and assignments: the algebra every
other module builds on.
"""

from .value import (
    INF,
    Infinity,
    as_value,
    parse_value,
    format_value,
    is_finite,
    value_sum,
)
from .operations import (
    BooleanOperation,
    apply_componentwise,
    C0, C1, NEG, MIN, MAX, SUB, MNRT, MJRT,
    OPERATIONS,
)
from .relation import (
    R_MAX,
    Relation,
    WeightedRelation,
    Language,
    soft,
    tuple_to_index,
    index_to_tuple,
    all_tuples,
)
from .instance import (
    Assignment,
    Constraint,
    Instance,
)

__all__ = [
    'INF', 'Infinity', 'as_value', 'parse_value', 'format_value', 'is_finite', 'value_sum',
    'BooleanOperation', 'apply_componentwise',
    'C0', 'C1', 'NEG', 'MIN', 'MAX', 'SUB', 'MNRT', 'MJRT', 'OPERATIONS',
    'R_MAX', 'Relation', 'WeightedRelation', 'Language', 'soft',
    'tuple_to_index', 'index_to_tuple', 'all_tuples',
    'Assignment', 'Constraint', 'Instance',
]
