"""Seeded random-pair generation and bucket-sharing frequency estimation.

Pairs are produced by applying random length-preserving edits and then
re-verified with the exact DP; anything off-target is rejected and
resampled. Every emitted pair therefore has its distance (and, for typed
generation, its minimal indel-pair count) certified, which makes the
frequency estimates conditioning-exact regardless of how the edits were
drawn.

Each trial draws from its own substream seeded by (seed, d, trial), so
results are reproducible and independent of execution order.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from .errors import ContractError, GenerationError
from .distance import levenshtein, min_indel_pairs
from .frb import BucketingFunctionSpec, claimed_sensitivity, shares
from .seqspace import DNA, Alphabet, Sequence

DEFAULT_TRIALS = 100_000
QUICK_TRIALS = 5_000
DEFAULT_D_MAX = 6
DEFAULT_RETRIES = 1000

CSV_FIELDS = ("function", "n", "sigma", "d", "category", "trials", "shared", "frequency", "seed")
ALL_TYPES = "all"


@dataclass(frozen=True)
class ExperimentRecord:
    """Sharing frequency of one (function, distance, edit-type) cell."""

    function: str
    n: int
    sigma: int
    d: int
    category: str
    trials: int
    shared: int
    seed: int

    def __post_init__(self) -> None:
        if self.trials <= 0:
            raise ValueError(f"trials must be positive, got {self.trials}")
        if not 0 <= self.shared <= self.trials:
            raise ValueError(f"shared count {self.shared} outside 0..{self.trials}")

    @property
    def frequency(self) -> float:
        return self.shared / self.trials


def _random_ranks(n: int, m: int, rng: np.random.Generator) -> tuple[int, ...]:
    return tuple(int(x) for x in rng.integers(0, m, size=n))


def _substitute(ranks: tuple[int, ...], m: int, rng: np.random.Generator) -> tuple[int, ...]:
    i = int(rng.integers(len(ranks)))
    off = int(rng.integers(1, m))  # uniform over the m-1 other characters
    return ranks[:i] + ((ranks[i] + off) % m,) + ranks[i + 1 :]


def _indel_pair(ranks: tuple[int, ...], m: int, rng: np.random.Generator) -> tuple[int, ...]:
    n = len(ranks)
    p = int(rng.integers(n))
    word = ranks[:p] + ranks[p + 1 :]
    q = int(rng.integers(len(word) + 1))
    c = int(rng.integers(m))
    return word[:q] + (c,) + word[q:]


def gen_pair(
    n: int,
    d: int,
    rng: np.random.Generator,
    alphabet: Alphabet = DNA,
    max_retries: int = DEFAULT_RETRIES,
) -> tuple[Sequence, Sequence]:
    """A uniform-ish random pair at edit distance exactly d.

    Edits are applied one at a time, each uniformly a substitution or (when
    two edits of budget remain) an indel pair; the result is kept only if
    the DP confirms the distance, so composed edits that cancel are
    resampled.
    """
    if not 0 <= d <= n:
        raise ValueError(f"distance {d} not achievable for length {n}")
    m = alphabet.size
    if d > 0 and m < 2:
        raise GenerationError(f"no pairs at distance {d} over a 1-letter alphabet")
    for _ in range(max_retries):
        s = _random_ranks(n, m, rng)
        t = s
        budget = d
        while budget > 0:
            if budget >= 2 and int(rng.integers(2)) == 1:
                t = _indel_pair(t, m, rng)
                budget -= 2
            else:
                t = _substitute(t, m, rng)
                budget -= 1
        if levenshtein(s, t) == d:
            return Sequence(s, alphabet), Sequence(t, alphabet)
    raise GenerationError(
        f"could not hit distance {d} at n={n}, m={m} in {max_retries} attempts"
    )


def gen_pair_of_type(
    n: int,
    a: int,
    b: int,
    rng: np.random.Generator,
    alphabet: Alphabet = DNA,
    max_retries: int = DEFAULT_RETRIES,
) -> tuple[Sequence, Sequence]:
    """A random pair at distance a + 2b whose minimal realization is
    exactly a substitutions plus b indel pairs."""
    if a < 0 or b < 0:
        raise ValueError(f"edit counts must be non-negative, got a={a}, b={b}")
    d = a + 2 * b
    if d > n:
        raise ValueError(f"distance {d} not achievable for length {n}")
    m = alphabet.size
    if d > 0 and m < 2:
        raise GenerationError(f"no pairs at distance {d} over a 1-letter alphabet")
    ops = ["sub"] * a + ["indel"] * b
    for _ in range(max_retries):
        s = _random_ranks(n, m, rng)
        t = s
        for k in rng.permutation(len(ops)) if ops else ():
            t = _substitute(t, m, rng) if ops[k] == "sub" else _indel_pair(t, m, rng)
        seq_s, seq_t = Sequence(s, alphabet), Sequence(t, alphabet)
        try:
            if min_indel_pairs(seq_s, seq_t, d) == b:
                return seq_s, seq_t
        except ContractError:
            continue  # distance fell short of d; resample
    raise GenerationError(
        f"could not hit type {a}+{b}x2 at n={n}, m={m} in {max_retries} attempts"
    )


def _trial_rng(seed: int, d: int, trial: int) -> np.random.Generator:
    return np.random.default_rng((seed, d, trial))


def _rail_check(spec: BucketingFunctionSpec, record: ExperimentRecord) -> None:
    """The constructions are deterministic: below the gap every pair must
    share and above it none may. A single counterexample is a bug."""
    d1, d2 = claimed_sensitivity(spec)
    if record.d <= d1 and record.shared != record.trials:
        raise ContractError(
            f"{spec.label}: {record.trials - record.shared} of {record.trials} "
            f"pairs at distance {record.d} <= d1={d1} did not share a bucket"
        )
    if record.d >= d2 and record.shared != 0:
        raise ContractError(
            f"{spec.label}: {record.shared} of {record.trials} pairs at "
            f"distance {record.d} >= d2={d2} shared a bucket"
        )


def run_distance_sweep(
    spec: BucketingFunctionSpec,
    d_max: int = DEFAULT_D_MAX,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> list[ExperimentRecord]:
    """Sharing frequency per distance d = 1..d_max, `trials` pairs each."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    records = []
    for d in range(1, d_max + 1):
        hits = 0
        for trial in range(trials):
            rng = _trial_rng(seed, d, trial)
            s, t = gen_pair(spec.n, d, rng, spec.alphabet)
            if shares(spec, s, t):
                hits += 1
        record = ExperimentRecord(
            function=spec.label, n=spec.n, sigma=spec.alphabet.size,
            d=d, category=ALL_TYPES, trials=trials, shared=hits, seed=seed,
        )
        _rail_check(spec, record)
        records.append(record)
    return records


def run_gap_by_type(
    spec: BucketingFunctionSpec,
    d: int,
    trials: int = DEFAULT_TRIALS,
    seed: int = 0,
) -> list[ExperimentRecord]:
    """Sharing frequency at gap distance d, one record per edit-type
    category b = 0..floor(d/2), labeled \"a+b×2\"."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    d1, d2 = claimed_sensitivity(spec)
    if not d1 < d < d2:
        raise ValueError(
            f"distance {d} is not inside the gap ({d1}, {d2}) of {spec.label}"
        )
    records = []
    for b in range(d // 2 + 1):
        a = d - 2 * b
        hits = 0
        for trial in range(trials):
            rng = _trial_rng(seed, d, trial)
            s, t = gen_pair_of_type(spec.n, a, b, rng, spec.alphabet)
            if shares(spec, s, t):
                hits += 1
        records.append(ExperimentRecord(
            function=spec.label, n=spec.n, sigma=spec.alphabet.size,
            d=d, category=f"{a}+{b}×2", trials=trials, shared=hits, seed=seed,
        ))
    return records


def write_csv(records: list[ExperimentRecord], out: io.TextIOBase) -> None:
    """Emit records under the fixed header; byte-identical for equal
    inputs (frequencies use shortest round-trip float formatting)."""
    out.write(",".join(CSV_FIELDS) + "\n")
    for r in records:
        out.write(
            f"{r.function},{r.n},{r.sigma},{r.d},{r.category},"
            f"{r.trials},{r.shared},{r.frequency!r},{r.seed}\n"
        )


def write_csv_path(records: list[ExperimentRecord], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        write_csv(records, fh)


def read_csv(path: str) -> list[ExperimentRecord]:
    """Parse records written by write_csv (round-trip helper for tests)."""
    out = []
    with open(path, encoding="utf-8", newline="") as fh:
        header = fh.readline().strip()
        if header != ",".join(CSV_FIELDS):
            raise ValueError(f"unexpected CSV header: {header!r}")
        for line in fh:
            if not line.strip():
                continue
            fn, n, sigma, d, cat, trials, shared, _freq, seed = line.rstrip("\n").split(",")
            out.append(ExperimentRecord(
                function=fn, n=int(n), sigma=int(sigma), d=int(d), category=cat,
                trials=int(trials), shared=int(shared), seed=int(seed),
            ))
    return out
