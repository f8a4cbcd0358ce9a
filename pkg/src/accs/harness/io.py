"""On-disk formats: per-run CSV, per-run trace CSVs and the run config."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from ..core import ConfigurationError, RunRecord

__all__ = [
    "RUNS_FILE",
    "RUNS_HEADER",
    "RunRow",
    "convergence_trace",
    "format_float",
    "read_runs",
    "read_trace",
    "runs_csv",
    "trace_csv",
    "trace_path",
    "write_experiment",
]

RUNS_FILE = "runs.csv"
TRACE_DIR = "traces"
RUNS_HEADER = (
    "algorithm", "function", "run", "seed", "iterations", "evaluations", "final_best", "wall_time_s",
)


def format_float(value: float) -> str:
    """17 significant digits in scientific notation (round-trips a double exactly)."""
    value = float(value)
    if math.isnan(value):
        return "nan"
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return f"{value:.16e}"


@dataclass(frozen=True)
class RunRow:
    """One line of the per-run CSV."""

    algorithm: str
    function: str
    run: int
    seed: int
    iterations: int
    evaluations: int
    final_best: float
    wall_time_s: float

    @classmethod
    def from_record(cls, rec: RunRecord) -> RunRow:
        return cls(
            rec.algorithm, rec.function, int(rec.run), int(rec.seed), rec.iterations,
            int(rec.evaluations), float(rec.final_best_fitness), float(rec.wall_time),
        )

    @property
    def final_best_fitness(self) -> float:
        return self.final_best


def _rows(records) -> list[RunRow]:
    return [r if isinstance(r, RunRow) else RunRow.from_record(r) for r in records]


def runs_csv(records: Iterable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RUNS_HEADER)
    for row in _rows(records):
        writer.writerow(
            [
                row.algorithm, row.function, row.run, row.seed, row.iterations, row.evaluations,
                format_float(row.final_best), format_float(row.wall_time_s),
            ]
        )
    return buf.getvalue()


def read_runs(path) -> list[RunRow]:
    """Parse a per-run CSV (or the ``runs.csv`` inside a result directory)."""
    path = Path(path)
    if path.is_dir():
        path = path / RUNS_FILE
    if not path.exists():
        raise ConfigurationError(f"no run file at {path}")
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != RUNS_HEADER:
            raise ConfigurationError(f"{path}: unexpected header {reader.fieldnames}")
        return [
            RunRow(
                r["algorithm"], r["function"], int(r["run"]), int(r["seed"]), int(r["iterations"]),
                int(r["evaluations"]), float(r["final_best"]), float(r["wall_time_s"]),
            )
            for r in reader
        ]


def convergence_trace(record: RunRecord) -> list[tuple[int, float]]:
    """``(iteration, best_so_far)`` rows, iterations numbered from 1."""
    trace = np.asarray(record.best_per_iteration, dtype=float)
    return [(k + 1, float(v)) for k, v in enumerate(trace)]


def trace_csv(record_or_rows) -> str:
    rows = record_or_rows
    if isinstance(record_or_rows, RunRecord):
        rows = convergence_trace(record_or_rows)
    lines = ["iteration,best"] + [f"{k},{format_float(v)}" for k, v in rows]
    return "\n".join(lines) + "\n"


def trace_path(out_dir, algorithm: str, function: str, run: int) -> Path:
    return Path(out_dir) / TRACE_DIR / f"{algorithm}__{function}__{int(run)}.csv"


def read_trace(out_dir, algorithm: str, function: str, run: int) -> list[tuple[int, float]]:
    path = trace_path(out_dir, algorithm, function, run)
    if not path.exists():
        raise ConfigurationError(f"no trace for {algorithm}/{function}/{run} in {out_dir}")
    with path.open(newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        if header != ["iteration", "best"]:
            raise ConfigurationError(f"{path}: unexpected header {header}")
        return [(int(k), float(v)) for k, v in reader]


def write_experiment(records: list[RunRecord], out_dir, config_json: str | None = None, traces: bool = True) -> Path:
    """Persist ``runs.csv`` (and the traces) under ``out_dir``."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / RUNS_FILE).write_bytes(runs_csv(records).encode("utf-8"))
    if config_json is not None:
        (out / "config.json").write_bytes((config_json + "\n").encode("utf-8"))
    if traces:
        for rec in records:
            p = trace_path(out, rec.algorithm, rec.function, rec.run)
            p.parent.mkdir(parents=True, exist_ok=True)
            p.write_bytes(trace_csv(rec).encode("utf-8"))
    return out
