"""Python bindings for the rsklab C++ core."""

import json

from ._core import (
    CapExceeded,
    OracleDisagreement,
    __version__,
    brute_force_minimum,
    column_multiplicities,
    conjugate,
    enumerate_partitions,
    greene_shape,
    inversion_count,
    minimal_hankel_candidates,
    minimal_inversion_formula,
    rsk_forward,
    rsk_inverse,
    shape_of_matrix,
    verify_partition_json,
)


def verify_partition(partition, weight_cap=0, jobs=1):
    """Verification record for one partition, as a dict (JSONL schema)."""
    return json.loads(verify_partition_json(list(partition), weight_cap, jobs))


__all__ = [
    "CapExceeded",
    "OracleDisagreement",
    "__version__",
    "brute_force_minimum",
    "column_multiplicities",
    "conjugate",
    "enumerate_partitions",
    "greene_shape",
    "inversion_count",
    "minimal_hankel_candidates",
    "minimal_inversion_formula",
    "rsk_forward",
    "rsk_inverse",
    "shape_of_matrix",
    "verify_partition",
    "verify_partition_json",
]
