"""Exact interleaved multichromatic analysis of undirected graphs."""

from ._core import (
    CapExceeded,
    ChiWitness,
    Graph,
    InputError,
    IntWitness,
    InvariantViolation,
    KTupleColoring,
    Orientation,
    Rational,
    SerRun,
    SimpleCycle,
    WindingPath,
    best_concurrency,
    brute_acyclic_count,
    brute_chi_k,
    brute_chromatic,
    brute_cycles,
    chi_int_k,
    chi_int_star,
    chi_via_orientations,
    concurrency,
    count_acyclic,
    derive_interleaved_coloring,
    direction_counts,
    enumerate_acyclic,
    enumerate_simple_cycles,
    parse_graph,
    parse_graph_auto,
    run_cli,
    ser_run,
    ser_step,
    winding_path,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "ChiWitness",
    "Graph",
    "InputError",
    "IntWitness",
    "InvariantViolation",
    "KTupleColoring",
    "Orientation",
    "Rational",
    "SerRun",
    "SimpleCycle",
    "WindingPath",
    "best_concurrency",
    "brute_acyclic_count",
    "brute_chi_k",
    "brute_chromatic",
    "brute_cycles",
    "chi_int_k",
    "chi_int_star",
    "chi_via_orientations",
    "concurrency",
    "count_acyclic",
    "derive_interleaved_coloring",
    "direction_counts",
    "enumerate_acyclic",
    "enumerate_simple_cycles",
    "parse_graph",
    "parse_graph_auto",
    "run_cli",
    "ser_run",
    "ser_step",
    "winding_path",
]
