"""Instance generators, theorem suites, counterexample search and reports."""

from .enumerate import (
    enumerate_linear_orders,
    enumerate_nest_pairs,
    enumerate_nests,
    enumerate_subbases,
    enumerate_t0_nests,
    enumerate_transitive_relations,
)
from .runner import SuiteReport, SuiteSpec, evaluate_instance, replay_failure, run_suite
from .sampling import sample_instances
from .search import CLAIMS, search_counterexample
from .suites import SUITES, get_suite

__all__ = [
    "CLAIMS",
    "SUITES",
    "SuiteReport",
    "SuiteSpec",
    "enumerate_linear_orders",
    "enumerate_nest_pairs",
    "enumerate_nests",
    "enumerate_subbases",
    "enumerate_t0_nests",
    "enumerate_transitive_relations",
    "evaluate_instance",
    "get_suite",
    "replay_failure",
    "run_suite",
    "sample_instances",
    "search_counterexample",
]
