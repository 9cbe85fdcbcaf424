"""Command line: bucket listing, candidate-pair indexing, partition
queries, exhaustive verification, and sharing-frequency experiments.

Exit codes: 0 success (or empty verification report), 1 property
violation, 2 usage or input error, 3 capacity guard refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import TextIO

from .errors import CapacityError, ContractError, GenerationError
from .experiments import (
    DEFAULT_D_MAX,
    DEFAULT_TRIALS,
    QUICK_TRIALS,
    run_distance_sweep,
    run_gap_by_type,
    write_csv,
)
from .frb import (
    BucketingFunctionSpec,
    buckets,
    claimed_sensitivity,
    frb_spec,
    lsb12_spec,
)
from .io import InputRecord, read_records
from .oracle import check_lsb
from .partition import is_member, partition_index
from .seqspace import Alphabet, Sequence, decode_ranks

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3

#: Inverted-index guards for `pairs`: total postings and emitted pairs.
MAX_INDEX_ENTRIES = 50_000_000
MAX_PAIRS = 5_000_000


@dataclass(frozen=True)
class CandidatePair:
    """Two input records sharing at least one bucket (by ordinal index)."""

    i: int
    j: int
    shared: int


def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--sigma", default="ACGT", metavar="GLYPHS",
                   help="alphabet characters in rank order (default ACGT)")
    p.add_argument("--n", type=int, help="sequence length")
    p.add_argument("--fn", choices=["lsb12", "frb"], default="lsb12",
                   help="bucketing function family (default lsb12)")
    p.add_argument("--r", type=int, default=2,
                   help="neighborhood radius for frb (default 2)")
    p.add_argument("--B", choices=["full", "partition"], default="partition",
                   dest="bucket_set",
                   help="frb bucket set: whole space or one partition class")
    p.add_argument("--class", type=int, default=1, dest="class_index",
                   metavar="I", help="1-based partition class (default 1)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", metavar="PATH",
                   help="write output to PATH instead of stdout")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--quick", action="store_true",
                   help="experiment preset with fewer trials")
    return p


def _input_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("input", nargs="?", default="-",
                   help="sequence file, plain lines or FASTA (default stdin)")
    p.add_argument("--window", type=int, metavar="N",
                   help="tile each record into all length-N substrings")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    inputs = _input_flags()
    parser = argparse.ArgumentParser(
        prog="lsb",
        description="Bucketing of fixed-length sequences for edit-distance search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bucket = sub.add_parser("bucket", parents=[common, inputs],
                              help="print bucket labels per sequence")
    p_bucket.add_argument("--glyphs", action="store_true",
                          help="print labels as sequence text instead of codes")

    sub.add_parser("pairs", parents=[common, inputs],
                   help="emit all pairs of sequences sharing a bucket")

    p_part = sub.add_parser("partition", parents=[common, inputs],
                            help="partition class per sequence")
    p_part.add_argument("--index", action="store_true",
                        help="print the 1-based class index (default)")
    p_part.add_argument("--check", type=int, metavar="I",
                        help="print member/non-member for 1-based class I")

    p_verify = sub.add_parser("verify", parents=[common],
                              help="exhaustively certify sensitivity on a small space")
    p_verify.add_argument("--d1", type=int, help="default: the claimed value")
    p_verify.add_argument("--d2", type=int, help="default: the claimed value")

    p_exp = sub.add_parser("experiment", parents=[common],
                           help="estimate sharing frequencies on random pairs")
    p_exp.add_argument("mode", choices=["sweep", "gap"])
    p_exp.add_argument("--trials", type=int, default=None,
                       help=f"pairs per cell (default {DEFAULT_TRIALS})")
    p_exp.add_argument("--d-max", type=int, default=DEFAULT_D_MAX,
                       help="sweep distances 1..D_MAX")
    p_exp.add_argument("--d", type=int, default=None,
                       help="gap distance (default: the claimed gap)")
    return parser


def _alphabet(args: argparse.Namespace) -> Alphabet:
    return Alphabet(args.sigma)


def _spec(args: argparse.Namespace, n: int) -> BucketingFunctionSpec:
    alphabet = _alphabet(args)
    if args.fn == "lsb12":
        return lsb12_spec(n, alphabet)
    if not 1 <= args.class_index <= alphabet.size:
        raise ValueError(
            f"--class {args.class_index} outside 1..{alphabet.size}"
        )
    return frb_spec(n, args.r, args.bucket_set, args.class_index - 1, alphabet)


def _read(args: argparse.Namespace) -> list[InputRecord]:
    alphabet = _alphabet(args)
    if args.input == "-":
        records = read_records(sys.stdin, alphabet, args.window)
    else:
        with open(args.input, encoding="utf-8") as fh:
            records = read_records(fh, alphabet, args.window)
    if records and args.n is not None and records[0].sequence.n != args.n:
        raise ValueError(
            f"--n {args.n} does not match input length {records[0].sequence.n}"
        )
    return records


def _label_text(spec: BucketingFunctionSpec, code: int) -> str:
    m = spec.alphabet.size
    if spec.kind == "lsb12":
        span = m ** (spec.n - 1)
        pos, rest = divmod(code, span)
        punctured = "".join(spec.alphabet.char(r) for r in decode_ranks(rest, spec.n - 1, m))
        return f"{pos}:{punctured}"
    return "".join(spec.alphabet.char(r) for r in decode_ranks(code, spec.n, m))


def cmd_bucket(args: argparse.Namespace, out: TextIO) -> int:
    records = _read(args)
    if not records:
        return EXIT_OK
    spec = _spec(args, records[0].sequence.n)
    rows = []
    for rec in records:
        labels: list = sorted(buckets(spec, rec.sequence))
        if args.glyphs:
            labels = [_label_text(spec, c) for c in labels]
        rows.append((rec.tag, labels))
    if args.json:
        json.dump([{"tag": tag, "buckets": labels} for tag, labels in rows],
                  out, ensure_ascii=False)
        out.write("\n")
    else:
        for tag, labels in rows:
            out.write("\t".join([tag, *map(str, labels)]) + "\n")
    return EXIT_OK


def candidate_pairs(spec: BucketingFunctionSpec, seqs: list[Sequence]) -> list[CandidatePair]:
    """Invert the bucket assignment and collect every co-bucketed pair
    once, with its shared-bucket count."""
    index: dict[int, list[int]] = {}
    entries = 0
    for i, s in enumerate(seqs):
        for code in buckets(spec, s):
            index.setdefault(code, []).append(i)
            entries += 1
            if entries > MAX_INDEX_ENTRIES:
                raise CapacityError(
                    f"inverted index exceeds {MAX_INDEX_ENTRIES} entries; "
                    f"shrink the input or the bucket count"
                )
    counts: dict[tuple[int, int], int] = {}
    for members in index.values():
        for a in range(len(members) - 1):
            for b in range(a + 1, len(members)):
                key = (members[a], members[b])
                counts[key] = counts.get(key, 0) + 1
                if len(counts) > MAX_PAIRS:
                    raise CapacityError(
                        f"more than {MAX_PAIRS} candidate pairs; "
                        f"shrink the input or use a more selective function"
                    )
    return [CandidatePair(i, j, c) for (i, j), c in sorted(counts.items())]


def cmd_pairs(args: argparse.Namespace, out: TextIO) -> int:
    records = _read(args)
    if not records:
        return EXIT_OK
    spec = _spec(args, records[0].sequence.n)
    pairs = candidate_pairs(spec, [rec.sequence for rec in records])
    if args.json:
        json.dump([{"i": records[p.i].tag, "j": records[p.j].tag, "shared": p.shared}
                   for p in pairs], out, ensure_ascii=False)
        out.write("\n")
    else:
        for p in pairs:
            out.write(f"{records[p.i].tag}\t{records[p.j].tag}\t{p.shared}\n")
    return EXIT_OK


def cmd_partition(args: argparse.Namespace, out: TextIO) -> int:
    records = _read(args)
    rows = []
    for rec in records:
        if args.check is not None:
            alphabet = rec.sequence.alphabet
            if not 1 <= args.check <= alphabet.size:
                raise ValueError(f"--check {args.check} outside 1..{alphabet.size}")
            rows.append((rec.tag, is_member(rec.sequence, args.check - 1)))
        else:
            rows.append((rec.tag, partition_index(rec.sequence) + 1))
    if args.json:
        key = "member" if args.check is not None else "class"
        json.dump([{"tag": tag, key: val} for tag, val in rows], out, ensure_ascii=False)
        out.write("\n")
    else:
        for tag, val in rows:
            shown = val if args.check is None else ("member" if val else "non-member")
            out.write(f"{tag}\t{shown}\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.n is None:
        raise ValueError("verify requires --n")
    spec = _spec(args, args.n)
    claimed = claimed_sensitivity(spec)
    d1 = args.d1 if args.d1 is not None else claimed[0]
    d2 = args.d2 if args.d2 is not None else claimed[1]
    violations = check_lsb(spec, d1, d2)
    size = spec.alphabet.size**spec.n
    if args.json:
        json.dump({
            "function": spec.label, "n": spec.n, "sigma": spec.alphabet.glyphs,
            "d1": d1, "d2": d2, "space": size,
            "violations": [{
                "property": v.property, "s": str(v.s), "t": str(v.t),
                "distance": v.distance, "shared": v.shared,
                "expected_shared": v.expected_shared,
            } for v in violations],
        }, out, ensure_ascii=False)
        out.write("\n")
    else:
        for v in violations:
            out.write(f"{v}\n")
        status = "OK" if not violations else f"{len(violations)} violations (capped)"
        out.write(
            f"{spec.label} on {size} sequences against ({d1}, {d2}): {status}\n"
        )
    return EXIT_OK if not violations else EXIT_VIOLATION


def cmd_experiment(args: argparse.Namespace, out: TextIO) -> int:
    if args.n is None:
        raise ValueError("experiment requires --n")
    spec = _spec(args, args.n)
    trials = args.trials if args.trials is not None else (
        QUICK_TRIALS if args.quick else DEFAULT_TRIALS
    )
    if args.mode == "sweep":
        records = run_distance_sweep(spec, args.d_max, trials, args.seed)
    else:
        d1, d2 = claimed_sensitivity(spec)
        if d2 - d1 < 2:
            raise ValueError(f"{spec.label} has no gap to probe")
        d = args.d if args.d is not None else d1 + 1
        records = run_gap_by_type(spec, d, trials, args.seed)
    write_csv(records, out)
    return EXIT_OK


_COMMANDS = {
    "bucket": cmd_bucket,
    "pairs": cmd_pairs,
    "partition": cmd_partition,
    "verify": cmd_verify,
    "experiment": cmd_experiment,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                return _COMMANDS[args.command](args, fh)
        return _COMMANDS[args.command](args, sys.stdout)
    except CapacityError as exc:
        print(f"lsb: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ContractError as exc:
        print(f"lsb: property violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ValueError, GenerationError, OSError) as exc:
        print(f"lsb: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
