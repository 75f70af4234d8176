#
# surjvcsp/gmc/__init__.py
#
"""
Generalised Min-Cut: superadditive set functions plus graph cuts, with
exact enumeration of optimal and alpha-optimal solutions.
"""

from .setfunction import (
    SetFunction,
    DenseTable,
    Scaled,
    Sum,
    Restricted,
    Pullback,
    superadditivity_violation,
    is_superadditive,
    validate_superadditive,
)
from .instance import (
    GmcInstance,
    LambdaKind,
    LambdaClass,
    objective,
    restrict,
)
from .enumerate import (
    BETA,
    classify_lambda,
    enumerate_optimal,
    enumerate_alpha_optimal,
)

__all__ = [
    'SetFunction', 'DenseTable', 'Scaled', 'Sum', 'Restricted', 'Pullback',
    'superadditivity_violation', 'is_superadditive', 'validate_superadditive',
    'GmcInstance', 'LambdaKind', 'LambdaClass', 'objective', 'restrict',
    'BETA', 'classify_lambda', 'enumerate_optimal', 'enumerate_alpha_optimal',
]
