"""Shortest path reconfiguration graphs S(G, a, b)."""

from ._core import (
    Error,
    Graph,
    Instance,
    LimitExceededError,
    NoGeodesicError,
    PreconditionError,
    SpGraph,
    build_spg,
    cayley,
    check,
    check_construction,
    check_decomposition,
    check_grid_embedding,
    construct,
    count_geodesics,
    enumerate_geodesics,
    is_isomorphic,
    phi,
    phi_inverse,
    reduce,
    run_cli,
    sequence_count,
    staircase,
)

__all__ = [
    "Error",
    "Graph",
    "Instance",
    "LimitExceededError",
    "NoGeodesicError",
    "PreconditionError",
    "SpGraph",
    "build_spg",
    "cayley",
    "check",
    "check_construction",
    "check_decomposition",
    "check_grid_embedding",
    "construct",
    "count_geodesics",
    "enumerate_geodesics",
    "is_isomorphic",
    "phi",
    "phi_inverse",
    "reduce",
    "run_cli",
    "sequence_count",
    "staircase",
]
