"""ACCS metaheuristic, benchmark functions and an experiment harness."""

from .algorithm import AccsParams, AccsState, NodeKind, hp_schedule, node_update, optimize, step
from .baselines import PsoParams, pso_optimize, random_search
from .benchmarks import BenchmarkFn, cec2019_suite, classical_suite, evaluate, get_function, known_optimum
from .core import Candidate, RngStream, RunRecord, SearchSpace, clamp

__version__ = "0.1.0"

__all__ = [
    "AccsParams",
    "AccsState",
    "BenchmarkFn",
    "Candidate",
    "NodeKind",
    "PsoParams",
    "RngStream",
    "RunRecord",
    "SearchSpace",
    "cec2019_suite",
    "clamp",
    "classical_suite",
    "evaluate",
    "get_function",
    "hp_schedule",
    "known_optimum",
    "node_update",
    "optimize",
    "pso_optimize",
    "random_search",
    "step",
]
