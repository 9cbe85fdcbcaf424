"""Edit distance, Hamming distance, and minimal-indel edit typing.

The public operations work on :class:`~lsb.seqspace.Sequence` values of equal
length over the same alphabet. Internal helpers operate on bare rank tuples
(and may compare unequal lengths) so that neighborhood generation and batch
filtering can reuse them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractError
from .seqspace import Sequence


def _check_pair(s: Sequence, t: Sequence) -> None:
    if s.alphabet != t.alphabet:
        raise ValueError(f"alphabet mismatch: {s.alphabet.glyphs!r} vs {t.alphabet.glyphs!r}")
    if s.n != t.n:
        raise ValueError(f"length mismatch: {s.n} vs {t.n}")


def levenshtein(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Two-row Levenshtein DP on rank tuples; lengths may differ."""
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        cur = [i] + [0] * len(b)
        for j, cb in enumerate(b, start=1):
            cur[j] = min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb))
        prev = cur
    return prev[-1]


def edit_distance(s: Sequence, t: Sequence) -> int:
    """Exact Levenshtein distance between two equal-length sequences."""
    _check_pair(s, t)
    return levenshtein(s.ranks, t.ranks)


def hamming_distance(s: Sequence, t: Sequence) -> int:
    """Number of positions where two equal-length sequences differ."""
    _check_pair(s, t)
    return sum(x != y for x, y in zip(s.ranks, t.ranks))


def levenshtein_batch(candidates: np.ndarray, target: tuple[int, ...]) -> np.ndarray:
    """Levenshtein distance from every row of ``candidates`` to ``target``.

    ``candidates`` is a (k, n) integer array; the DP is vectorized along the
    candidate axis, so the Python-level loop cost is O(n * len(target)).
    """
    k, n = candidates.shape
    tlen = len(target)
    prev = np.broadcast_to(np.arange(tlen + 1), (k, tlen + 1)).copy()
    cur = np.empty_like(prev)
    for i in range(1, n + 1):
        cur[:, 0] = i
        col = candidates[:, i - 1]
        for j in range(1, tlen + 1):
            np.minimum(prev[:, j] + 1, prev[:, j - 1] + (col != target[j - 1]), out=cur[:, j])
            np.minimum(cur[:, j], cur[:, j - 1] + 1, out=cur[:, j])
        prev, cur = cur, prev
    return prev[:, tlen].copy()


def min_indel_substitutions(a: tuple[int, ...], b: tuple[int, ...], max_pairs: int) -> list[int | None]:
    """For each k in 0..max_pairs, the minimal substitution count over
    alignments of ``a`` and ``b`` that use exactly k insertions and k
    deletions, or None when no such alignment exists.
    """
    n = len(a)
    big = n + 1  # larger than any real substitution count
    # subs[j][k]: minimal substitutions aligning a[:i] with b[:j] using k insertions.
    subs = [[big] * (max_pairs + 1) for _ in range(n + 1)]
    subs[0][0] = 0
    for j in range(1, n + 1):  # i = 0: only insertions possible
        if j <= max_pairs:
            subs[j][j] = 0
    for i in range(1, n + 1):
        nxt = [[big] * (max_pairs + 1) for _ in range(n + 1)]
        ca = a[i - 1]
        for j in range(n + 1):
            row = subs[j]
            nxt_row = nxt[j]
            for k in range(max_pairs + 1):
                best = row[k]  # delete a[i-1]; insertion count unchanged
                if j >= 1:
                    d = subs[j - 1][k] + (ca != b[j - 1])  # match or substitute
                    if d < best:
                        best = d
                    if k >= 1:
                        d = nxt[j - 1][k - 1]  # insert b[j-1]
                        if d < best:
                            best = d
                nxt_row[k] = best
        subs = nxt
    final = subs[n]
    # k insertions and k deletions at (n, n); report only balanced alignments.
    return [final[k] if final[k] < big else None for k in range(max_pairs + 1)]


def min_indel_pairs(s: Sequence, t: Sequence, d: int) -> int:
    """Smallest b such that ``s`` transforms into ``t`` with b insertions,
    b deletions, and d - 2b substitutions.

    ``d`` must equal the edit distance of the pair; alignments cheaper than
    ``d`` cannot exist, so the returned b is the minimal indel-pair count
    over all minimum-cost alignments.
    """
    _check_pair(s, t)
    actual = levenshtein(s.ranks, t.ranks)
    if actual != d:
        raise ContractError(f"declared distance {d} but edit distance is {actual}")
    per_k = min_indel_substitutions(s.ranks, t.ranks, d // 2)
    for k, subs in enumerate(per_k):
        if subs is not None and subs + 2 * k == d:
            return k
    raise AssertionError(f"no alignment of cost {d} found for {s} -> {t}")


@dataclass(frozen=True)
class EditType:
    """How a pair at distance a + 2b is realized: a substitutions plus b
    indel pairs, with b minimal over all minimum-cost alignments."""

    substitutions: int
    indel_pairs: int

    @property
    def distance(self) -> int:
        return self.substitutions + 2 * self.indel_pairs

    @property
    def label(self) -> str:
        return f"{self.substitutions}+{self.indel_pairs}×2"


def edit_type(s: Sequence, t: Sequence) -> EditType:
    """Classify a pair by its distance and minimal indel-pair count."""
    d = edit_distance(s, t)
    b = min_indel_pairs(s, t, d)
    return EditType(substitutions=d - 2 * b, indel_pairs=b)
