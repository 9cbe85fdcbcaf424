"""Brute-force certification of bucketing properties on small spaces.

Every check enumerates the whole space and scans all unordered pairs, so a
clean report is a proof for that (n, alphabet). Sharing is re-derived from
freshly computed bucket sets by set intersection, never from the shortcut
predicates, which keeps the oracle independent of the code paths it is
meant to certify.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError
from .frb import (
    FULL,
    PARTITION,
    BucketingFunctionSpec,
    buckets,
    claimed_sensitivity,
    frb_spec,
)
from .distance import levenshtein_batch
from .neighborhood import neighborhood_size_radius_one
from .seqspace import DNA, Alphabet, Sequence

#: Exhaustive scans refuse spaces with more than 2**12 sequences by default
#: (about 8.4M pairs at the limit).
SPACE_GUARD = 1 << 12
MAX_REPORTS = 100

SHARE_AT_D1 = "share-at-d1"
DISJOINT_AT_D2 = "disjoint-at-d2"
GUARANTEED = "guaranteed"


@dataclass(frozen=True)
class ViolationReport:
    """One witness pair breaking a claimed property."""

    property: str
    s: Sequence
    t: Sequence
    distance: int
    shared: bool
    expected_shared: bool

    def __str__(self) -> str:
        return (
            f"{self.property}: ({self.s}, {self.t}) at distance {self.distance} "
            f"is {'shared' if self.shared else 'disjoint'}, "
            f"expected {'shared' if self.expected_shared else 'disjoint'}"
        )


@dataclass(frozen=True)
class CountReport:
    """Observed bucket usage over the whole space vs. the closed forms."""

    label: str
    space_size: int
    observed_buckets: int
    expected_buckets: int
    size_histogram: dict[int, int] = field(compare=False)
    expected_histogram: dict[int, int] | None = field(compare=False)

    @property
    def ok(self) -> bool:
        if self.observed_buckets != self.expected_buckets:
            return False
        if self.expected_histogram is None:
            return True
        return self.size_histogram == self.expected_histogram


def space_rows(n: int, alphabet: Alphabet = DNA, max_space: int = SPACE_GUARD) -> np.ndarray:
    """All of S_n as a (m**n, n) rank array in lexicographic order."""
    m = alphabet.size
    size = m**n
    if size > max_space:
        raise CapacityError(
            f"space of {size} sequences exceeds the scan guard of {max_space}"
        )
    codes = np.arange(size, dtype=np.int64)
    weights = m ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (codes[:, None] // weights[None, :]) % m


def _space_sequences(rows: np.ndarray, alphabet: Alphabet) -> list[Sequence]:
    return [Sequence(tuple(int(x) for x in row), alphabet) for row in rows]


def _scan_pairs(
    rows: np.ndarray,
    seqs: list[Sequence],
    bucket_sets: list[frozenset[int]],
    d1: int | None,
    d2: int | None,
    property_at_d1: str,
    fail_fast: bool,
    max_reports: int,
) -> list[ViolationReport]:
    """Scan all unordered pairs, flagging sharing failures at <= d1 and
    disjointness failures at >= d2. Either bound may be None to skip."""
    out: list[ViolationReport] = []
    k = rows.shape[0]
    for i in range(k - 1):
        dists = levenshtein_batch(rows[i + 1 :], seqs[i].ranks)
        check = np.zeros(dists.shape, dtype=bool)
        if d1 is not None:
            check |= dists <= d1
        if d2 is not None:
            check |= dists >= d2
        for off in np.flatnonzero(check):
            j = i + 1 + int(off)
            d = int(dists[off])
            shared = not bucket_sets[i].isdisjoint(bucket_sets[j])
            if d1 is not None and d <= d1 and not shared:
                out.append(
                    ViolationReport(property_at_d1, seqs[i], seqs[j], d, False, True)
                )
            elif d2 is not None and d >= d2 and shared:
                out.append(
                    ViolationReport(DISJOINT_AT_D2, seqs[i], seqs[j], d, True, False)
                )
            else:
                continue
            if fail_fast or len(out) >= max_reports:
                return out
    return out


def check_lsb(
    spec: BucketingFunctionSpec,
    d1: int,
    d2: int,
    fail_fast: bool = False,
    max_reports: int = MAX_REPORTS,
    max_space: int = SPACE_GUARD,
) -> list[ViolationReport]:
    """Certify (d1, d2)-sensitivity by full pair enumeration.

    Empty result means: every pair at distance <= d1 shares a bucket and
    every pair at distance >= d2 shares none, over all of S_n.
    """
    rows = space_rows(spec.n, spec.alphabet, max_space)
    seqs = _space_sequences(rows, spec.alphabet)
    bucket_sets = [frozenset(buckets(spec, s)) for s in seqs]
    return _scan_pairs(
        rows, seqs, bucket_sets, d1, d2, SHARE_AT_D1, fail_fast, max_reports
    )


def check_guaranteed(
    bucket_set: str,
    d1: int,
    r: int,
    n: int,
    alphabet: Alphabet = DNA,
    class_index: int = 0,
    fail_fast: bool = False,
    max_reports: int = MAX_REPORTS,
    max_space: int = SPACE_GUARD,
) -> list[ViolationReport]:
    """Verify every pair at distance <= d1 has a common bucket-set member
    within radius r of both: N^r(s) and N^r(t) intersect inside B.

    ``bucket_set`` is "full" (B = S_n) or "partition" (B = the given class).
    """
    spec = frb_spec(n, r, bucket_set, class_index, alphabet)
    rows = space_rows(n, alphabet, max_space)
    seqs = _space_sequences(rows, alphabet)
    member_sets = [frozenset(buckets(spec, s, unguarded=True)) for s in seqs]
    return _scan_pairs(
        rows, seqs, member_sets, d1, None, GUARANTEED, fail_fast, max_reports
    )


def _expected_counts(
    spec: BucketingFunctionSpec, space: int
) -> tuple[int, dict[int, int] | None]:
    n, m = spec.n, spec.alphabet.size
    if spec.kind == "lsb12":
        return n * m ** (n - 1), {n: space}
    if spec.bucket_set == FULL:
        hist = {neighborhood_size_radius_one(n, spec.alphabet): space} if spec.radius == 1 else None
        return m**n, hist
    members = m ** (n - 1)
    hist = {1: members, n: space - members} if spec.radius == 1 else None
    if spec.radius == 1 and n == 1:  # member count 1 and n coincide
        hist = {1: space}
    return members, hist


def check_counts(spec: BucketingFunctionSpec, max_space: int = SPACE_GUARD) -> CountReport:
    """Measure distinct buckets used over all of S_n and the |f(s)|
    distribution, against the closed-form expectations."""
    rows = space_rows(spec.n, spec.alphabet, max_space)
    seqs = _space_sequences(rows, spec.alphabet)
    all_buckets: set[int] = set()
    hist: dict[int, int] = {}
    for s in seqs:
        bs = buckets(spec, s, unguarded=True) if spec.kind == "frb" else buckets(spec, s)
        all_buckets.update(bs)
        hist[len(bs)] = hist.get(len(bs), 0) + 1
    expected_buckets, expected_hist = _expected_counts(spec, rows.shape[0])
    return CountReport(
        label=spec.label,
        space_size=rows.shape[0],
        observed_buckets=len(all_buckets),
        expected_buckets=expected_buckets,
        size_histogram=hist,
        expected_histogram=expected_hist,
    )


def certify(spec: BucketingFunctionSpec, **kwargs) -> list[ViolationReport]:
    """check_lsb at the spec's own claimed sensitivity."""
    d1, d2 = claimed_sensitivity(spec)
    return check_lsb(spec, d1, d2, **kwargs)
