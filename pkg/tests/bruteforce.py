"""Independent reference implementations used as test oracles.

Everything here is deliberately naive (full DP matrices, exhaustive
alignment enumeration, whole-space filtering) and shares no code with the
package, so agreement is meaningful evidence.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def levenshtein_ref(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Textbook full-matrix edit distance."""
    na, nb = len(a), len(b)
    dist = [[0] * (nb + 1) for _ in range(na + 1)]
    for i in range(na + 1):
        dist[i][0] = i
    for j in range(nb + 1):
        dist[0][j] = j
    for i in range(1, na + 1):
        for j in range(1, nb + 1):
            dist[i][j] = min(
                dist[i - 1][j] + 1,
                dist[i][j - 1] + 1,
                dist[i - 1][j - 1] + (a[i - 1] != b[j - 1]),
            )
    return dist[na][nb]


def alignment_costs(a: tuple[int, ...], b: tuple[int, ...]) -> set[tuple[int, int]]:
    """All (substitutions, insertions) pairs over every alignment of a
    into b. Exponential state sets; fine for the tiny test sizes."""

    @lru_cache(maxsize=None)
    def go(i: int, j: int) -> frozenset[tuple[int, int]]:
        if i == len(a) and j == len(b):
            return frozenset({(0, 0)})
        out: set[tuple[int, int]] = set()
        if i < len(a):  # delete a[i]
            out |= go(i + 1, j)
        if j < len(b):  # insert b[j]
            out |= {(s, k + 1) for s, k in go(i, j + 1)}
        if i < len(a) and j < len(b):  # match or substitute
            out |= {(s + (a[i] != b[j]), k) for s, k in go(i + 1, j + 1)}
        return frozenset(out)

    result = set(go(0, 0))
    go.cache_clear()
    return result


def min_indel_pairs_ref(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, int]:
    """(edit distance, minimal indel-pair count among optimal alignments)
    for equal-length inputs, via exhaustive alignment enumeration."""
    assert len(a) == len(b)
    costs = alignment_costs(a, b)
    d = min(s + 2 * k for s, k in costs)
    b_min = min(k for s, k in costs if s + 2 * k == d)
    return d, b_min


def all_tuples(n: int, m: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(m), repeat=n))


def ball_ref(ranks: tuple[int, ...], r: int, m: int) -> set[tuple[int, ...]]:
    """Radius-r ball by filtering the whole space with the reference DP."""
    return {t for t in all_tuples(len(ranks), m) if levenshtein_ref(ranks, t) <= r}


def hamming_ref(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return sum(x != y for x, y in zip(a, b))
