"""Multiagent knapsack solvers."""

from ._core import (
    Instance,
    InputError,
    SizeError,
    analyze,
    bench_csv,
    brute_force,
    generate,
    merge_identical_voters,
    solve,
)

__all__ = [
    "Instance",
    "InputError",
    "SizeError",
    "analyze",
    "bench_csv",
    "brute_force",
    "generate",
    "merge_identical_voters",
    "solve",
]
