"""An m-way partition of the length-n sequence space whose classes are
minimum sets guaranteeing a shared radius-1 neighbor for every pair at
edit distance 1.

The partition is recursive: classes for length n are assembled from the
length n-1 classes by prepending each character to a rotated class choice.
Class membership is answerable in O(n) with a backward scan, without ever
materializing a class.

Class indices are 0-based throughout the library; the CLI presents them
1-based.
"""

from __future__ import annotations

import numpy as np

from .errors import CapacityError
from .seqspace import Alphabet, Sequence

#: Materializing all classes enumerates the full space; keep it desk-scale.
BUILD_GUARD = 1 << 20


def partition_index(s: Sequence) -> int:
    """0-based index of the partition class containing ``s``.

    Backward scan: the class of the final character is its own rank, and
    prepending a character of rank p rotates the class index down by p.
    O(n) time, O(1) space.
    """
    m = s.alphabet.size
    idx = s.ranks[-1]
    for p in reversed(s.ranks[:-1]):
        idx = (idx - p) % m
    return idx


def partition_index_batch(ranks: np.ndarray, m: int) -> np.ndarray:
    """Vectorized class index for each row of a (k, n) rank array.

    Uses the unrolled form of the backward scan: the final rank minus the
    sum of all earlier ranks, mod m. The equivalence with the scan is
    covered by exhaustive tests before anything relies on it.
    """
    return (ranks[:, -1] - ranks[:, :-1].sum(axis=1)) % m


def is_member(s: Sequence, class_index: int) -> bool:
    """Whether ``s`` belongs to the class with the given 0-based index."""
    return partition_index(s) == class_index


def build_partition(n: int, alphabet: Alphabet) -> list[set[Sequence]]:
    """Materialize all m classes for length ``n`` by the recursive
    construction; independent of :func:`partition_index`.

    Class i for length n takes, for each character rank p, that character
    prepended to class (i + p) mod m of length n - 1. The base case puts
    the rank-p single character in class p.
    """
    m = alphabet.size
    if m**n > BUILD_GUARD:
        raise CapacityError(
            f"building the partition for n={n}, alphabet size {m} enumerates "
            f"{m}**{n} sequences; guard is {BUILD_GUARD}"
        )
    classes: list[list[tuple[int, ...]]] = [[(p,)] for p in range(m)]
    for _ in range(n - 1):
        classes = [
            [(p,) + suffix for p in range(m) for suffix in classes[(i + p) % m]]
            for i in range(m)
        ]
    return [{Sequence(t, alphabet) for t in cls} for cls in classes]
