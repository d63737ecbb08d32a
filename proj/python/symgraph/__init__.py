"""Exact enumeration of weighted graphs with constrained degrees."""

from ._symgraph import (
    a_coeffs,
    count_degree_sequence,
    count_matrices,
    count_table,
    expand,
    partitions_of,
    run_cli,
    series_json,
    z_of,
)

__all__ = [
    "a_coeffs",
    "count_degree_sequence",
    "count_matrices",
    "count_table",
    "expand",
    "partitions_of",
    "run_cli",
    "series_json",
    "z_of",
]
