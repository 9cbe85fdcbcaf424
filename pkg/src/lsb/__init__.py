"""Locality-sensitive bucketing of fixed-length sequences under edit
distance: sequences are mapped to sets of buckets so that close pairs
always collide and far pairs never do."""

from .errors import CapacityError, ContractError, GenerationError
from .seqspace import DNA, Alphabet, Sequence, decode, encode
from .distance import (
    EditType,
    edit_distance,
    edit_type,
    hamming_distance,
    min_indel_pairs,
)
from .neighborhood import neighborhood, neighborhood_size_radius_one
from .partition import build_partition, is_member, partition_index
from .lsb12 import lsb12_buckets, lsb12_shares
from .frb import (
    FULL,
    PARTITION,
    BucketingFunctionSpec,
    buckets,
    claimed_sensitivity,
    frb_buckets,
    frb_spec,
    lsb12_spec,
    shared_bucket_count,
    shares,
)
from .oracle import (
    CountReport,
    ViolationReport,
    certify,
    check_counts,
    check_guaranteed,
    check_lsb,
)
from .experiments import (
    ExperimentRecord,
    gen_pair,
    gen_pair_of_type,
    read_csv,
    run_distance_sweep,
    run_gap_by_type,
    write_csv,
    write_csv_path,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BucketingFunctionSpec",
    "CapacityError",
    "ContractError",
    "CountReport",
    "DNA",
    "EditType",
    "ExperimentRecord",
    "FULL",
    "GenerationError",
    "PARTITION",
    "Sequence",
    "ViolationReport",
    "buckets",
    "build_partition",
    "certify",
    "check_counts",
    "check_guaranteed",
    "check_lsb",
    "claimed_sensitivity",
    "decode",
    "edit_distance",
    "edit_type",
    "encode",
    "frb_buckets",
    "frb_spec",
    "gen_pair",
    "gen_pair_of_type",
    "hamming_distance",
    "is_member",
    "lsb12_buckets",
    "lsb12_shares",
    "lsb12_spec",
    "min_indel_pairs",
    "neighborhood",
    "neighborhood_size_radius_one",
    "partition_index",
    "read_csv",
    "run_distance_sweep",
    "run_gap_by_type",
    "shared_bucket_count",
    "shares",
    "write_csv",
    "write_csv_path",
]
