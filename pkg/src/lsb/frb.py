"""Bucketing by neighborhood membership: a sequence is assigned to every
bucket-labeling sequence within edit distance r.

The label set B is either the whole length-n space ("full") or one class of
the m-way partition ("partition"). Bucket labels are the integer codes of
the member sequences. Sensitivity follows the construction:

    full,      r even -> (2r, 2r+1)      full, r odd -> (2r-1, 2r+1)
    partition, r = 1  -> (1, 3)
    partition, r = 2  -> (3, 5)
    partition, r >= 3 -> (r, 2r+1)

The ungapped construction from :mod:`lsb.lsb12` is also expressible as a
spec so the oracle and the CLI can treat all functions uniformly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError
from .lsb12 import lsb12_buckets, lsb12_shares
from .neighborhood import ball_array
from .distance import levenshtein
from .partition import partition_index_batch
from .seqspace import DNA, Alphabet, Sequence, encode_ranks

#: Ball enumeration grows like (n*m)**r; refuse surprises by default.
RADIUS_GUARD = 3
LENGTH_GUARD = 32

FULL = "full"
PARTITION = "partition"


@dataclass(frozen=True)
class BucketingFunctionSpec:
    """Selects a bucketing function over (n, alphabet).

    ``kind`` is "lsb12" or "frb". For frb, ``radius`` is r and
    ``bucket_set`` picks B: the full space or one partition class
    (0-based ``class_index``).
    """

    kind: str
    n: int
    alphabet: Alphabet = field(default=DNA)
    radius: int = 0
    bucket_set: str = FULL
    class_index: int = 0

    def __post_init__(self) -> None:
        if self.kind not in ("lsb12", "frb"):
            raise ValueError(f"unknown bucketing kind {self.kind!r}")
        if self.n < 1:
            raise ValueError(f"sequence length must be >= 1, got {self.n}")
        if self.kind == "frb":
            if self.radius < 1:
                raise ValueError(f"radius must be >= 1, got {self.radius}")
            if self.bucket_set not in (FULL, PARTITION):
                raise ValueError(f"unknown bucket set {self.bucket_set!r}")
            if not 0 <= self.class_index < self.alphabet.size:
                raise ValueError(f"class index {self.class_index} out of range")

    @property
    def label(self) -> str:
        """Short CSV-friendly name, e.g. "lsb12", "frb-r2-part1"."""
        if self.kind == "lsb12":
            return "lsb12"
        if self.bucket_set == FULL:
            return f"frb-r{self.radius}-full"
        return f"frb-r{self.radius}-part{self.class_index + 1}"


def lsb12_spec(n: int, alphabet: Alphabet = DNA) -> BucketingFunctionSpec:
    return BucketingFunctionSpec(kind="lsb12", n=n, alphabet=alphabet)


def frb_spec(
    n: int,
    radius: int,
    bucket_set: str = PARTITION,
    class_index: int = 0,
    alphabet: Alphabet = DNA,
) -> BucketingFunctionSpec:
    return BucketingFunctionSpec(
        kind="frb", n=n, alphabet=alphabet, radius=radius,
        bucket_set=bucket_set, class_index=class_index,
    )


def claimed_sensitivity(spec: BucketingFunctionSpec) -> tuple[int, int]:
    """The (d1, d2) pair the construction guarantees."""
    if spec.kind == "lsb12":
        return (1, 2)
    r = spec.radius
    if spec.bucket_set == FULL:
        return (2 * r, 2 * r + 1) if r % 2 == 0 else (2 * r - 1, 2 * r + 1)
    if r == 1:
        return (1, 3)
    if r == 2:
        return (3, 5)
    return (r, 2 * r + 1)


def _check_guard(spec: BucketingFunctionSpec, unguarded: bool) -> None:
    if spec.kind != "frb" or unguarded:
        return
    if spec.radius > RADIUS_GUARD or spec.n > LENGTH_GUARD:
        raise CapacityError(
            f"radius {spec.radius} / length {spec.n} beyond the default guards "
            f"(r <= {RADIUS_GUARD}, n <= {LENGTH_GUARD}); pass unguarded=True to override"
        )


def _member_rows(spec: BucketingFunctionSpec, ranks: tuple[int, ...]) -> np.ndarray:
    """Bucket-set members within radius r of ``ranks``, one row each."""
    m = spec.alphabet.size
    rows = ball_array(ranks, spec.radius, m)
    if spec.bucket_set == PARTITION:
        rows = rows[partition_index_batch(rows, m) == spec.class_index]
    return rows


def _encode_rows(rows: np.ndarray, m: int) -> list[int]:
    n = rows.shape[1]
    if m**n <= 2**62:
        weights = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
        return (rows @ weights).tolist()
    return [encode_ranks(tuple(int(x) for x in row), m) for row in rows]


def frb_buckets(spec: BucketingFunctionSpec, s: Sequence, unguarded: bool = False) -> set[int]:
    """Bucket labels of ``s``: codes of every bucket-set member within
    edit distance r."""
    if spec.kind != "frb":
        raise ValueError("frb_buckets requires an frb spec")
    _validate_input(spec, s)
    _check_guard(spec, unguarded)
    return set(_encode_rows(_member_rows(spec, s.ranks), spec.alphabet.size))


def buckets(spec: BucketingFunctionSpec, s: Sequence, unguarded: bool = False) -> set[int]:
    """Bucket labels of ``s`` under any spec kind."""
    if spec.kind == "lsb12":
        _validate_input(spec, s)
        return lsb12_buckets(s)
    return frb_buckets(spec, s, unguarded=unguarded)


def _validate_input(spec: BucketingFunctionSpec, *seqs: Sequence) -> None:
    for s in seqs:
        if s.alphabet != spec.alphabet:
            raise ValueError(f"sequence alphabet {s.alphabet.glyphs!r} does not match spec")
        if s.n != spec.n:
            raise ValueError(f"sequence length {s.n} does not match spec length {spec.n}")


def shares(spec: BucketingFunctionSpec, s: Sequence, t: Sequence, unguarded: bool = False) -> bool:
    """Whether ``s`` and ``t`` are assigned at least one common bucket.

    For frb this is the existence of a bucket-set member within radius r of
    both sequences, found by intersecting the two bucket sets as packed
    codes. Pairs farther apart than 2r are disjoint by the triangle
    inequality and skip the enumeration entirely.
    """
    _validate_input(spec, s, t)
    if spec.kind == "lsb12":
        return lsb12_shares(s, t)
    _check_guard(spec, unguarded)
    m = spec.alphabet.size
    if levenshtein(s.ranks, t.ranks) > 2 * spec.radius:
        return False
    rows_s = _member_rows(spec, s.ranks)
    rows_t = _member_rows(spec, t.ranks)
    if rows_s.shape[0] == 0 or rows_t.shape[0] == 0:
        return False
    if m**spec.n <= 2**62:
        weights = m ** np.arange(spec.n - 1, -1, -1, dtype=np.int64)
        return bool(np.isin(rows_s @ weights, rows_t @ weights).any())
    return not set(_encode_rows(rows_s, m)).isdisjoint(_encode_rows(rows_t, m))


def shared_bucket_count(
    spec: BucketingFunctionSpec, s: Sequence, t: Sequence, unguarded: bool = False
) -> int:
    """Number of buckets shared by a pair (0 when disjoint)."""
    return len(buckets(spec, s, unguarded) & buckets(spec, t, unguarded))
