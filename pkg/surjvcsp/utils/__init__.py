#
# surjvcsp/utils/__init__.py
#
"""
Small helpers used throughout surjvcsp
"""

from .metaclasses import ItemizedMeta
from .subsets import (
    canonical_key,
    canonical_sorted,
    mask_of,
    subset_of,
    proper_subsets,
)

__all__ = [
    'ItemizedMeta',
    'canonical_key',
    'canonical_sorted',
    'mask_of',
    'subset_of',
    'proper_subsets',
]
