#!/usr/bin/env python3
"""Run the full sharing-frequency study and write one CSV per run.

Three seed-fixed distance sweeps (radius-1 full space, radius-1 class,
radius-2 class) plus one per-edit-type run inside each function's gap.
Full scale is 100,000 trials per distance and takes on the order of an
hour single-threaded; pass --quick for a 5,000-trial smoke run.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from lsb import (
    FULL,
    PARTITION,
    claimed_sensitivity,
    frb_spec,
    run_distance_sweep,
    run_gap_by_type,
    write_csv_path,
)
from lsb.experiments import DEFAULT_D_MAX, DEFAULT_TRIALS, QUICK_TRIALS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out-dir", default="results", help="directory for the CSVs")
    parser.add_argument("--n", type=int, default=20, help="sequence length")
    parser.add_argument("--trials", type=int, default=None,
                        help=f"pairs per distance (default {DEFAULT_TRIALS})")
    parser.add_argument("--d-max", type=int, default=DEFAULT_D_MAX,
                        help="largest sweep distance")
    parser.add_argument("--seed", type=int, default=0, help="base RNG seed")
    parser.add_argument("--quick", action="store_true",
                        help=f"use {QUICK_TRIALS} trials per distance")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    trials = args.trials if args.trials is not None else (
        QUICK_TRIALS if args.quick else DEFAULT_TRIALS
    )
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)

    specs = [
        frb_spec(args.n, 1, FULL),
        frb_spec(args.n, 1, PARTITION, 0),
        frb_spec(args.n, 2, PARTITION, 0),
    ]
    for spec in specs:
        t0 = time.perf_counter()
        records = run_distance_sweep(spec, args.d_max, trials, args.seed)
        path = out_dir / f"sweep_{spec.label}.csv"
        write_csv_path(records, str(path))
        print(f"{path}  ({time.perf_counter() - t0:.1f}s)")

        d1, d2 = claimed_sensitivity(spec)
        if d2 - d1 < 2:
            continue
        gap_d = d1 + 1
        t0 = time.perf_counter()
        records = run_gap_by_type(spec, gap_d, trials, args.seed)
        path = out_dir / f"gap_{spec.label}_d{gap_d}.csv"
        write_csv_path(records, str(path))
        print(f"{path}  ({time.perf_counter() - t0:.1f}s)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
