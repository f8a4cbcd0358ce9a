"""Experiment runner, statistics, ranking, fixture comparison and CLI."""

from .fixtures import CompareReport, compare_to_fixture, load_fixture, load_policy
from .io import RunRow, convergence_trace, read_runs, read_trace, runs_csv, trace_csv, write_experiment
from .ranking import RankTable, competition_ranks, rank_algorithms
from .runner import ExperimentConfig, derive_seed, execute_run, load_config, run_experiment
from .stats import Cell, MissingDataError, SummaryTable, summarize

__all__ = [
    "Cell",
    "CompareReport",
    "ExperimentConfig",
    "MissingDataError",
    "RankTable",
    "RunRow",
    "SummaryTable",
    "compare_to_fixture",
    "competition_ranks",
    "convergence_trace",
    "derive_seed",
    "execute_run",
    "load_config",
    "load_fixture",
    "load_policy",
    "rank_algorithms",
    "read_runs",
    "read_trace",
    "run_experiment",
    "runs_csv",
    "summarize",
    "trace_csv",
    "write_experiment",
]
