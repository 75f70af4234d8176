#
# surjvcsp/utils/subsets.py
#
"""
Vertex subsets are frozensets of 1-based labels. Vertex i corresponds to
bit 2**(i-1) of a mask.
"""

from itertools import combinations


def mask_of(subset):
    mask = 0
    for i in subset:
        mask |= 1 << (i - 1)
    return mask


def subset_of(mask):
    subset = []
    i = 1
    while mask:
        if mask & 1:
            subset.append(i)
        mask >>= 1
        i += 1
    return frozenset(subset)


def canonical_key(subset):
    """Sort key: by size, then by the sorted member list."""
    return (len(subset), tuple(sorted(subset)))


def canonical_sorted(subsets):
    return sorted(set(map(frozenset, subsets)), key=canonical_key)


def proper_subsets(n):
    """
    Yield every X with 0 < |X| < n over the ground set {1..n}, in
    canonical order.
    """
    ground = range(1, n + 1)
    for size in range(1, n):
        for combo in combinations(ground, size):
            yield frozenset(combo)
