"""Experiment execution with per-run derived seeds."""

from __future__ import annotations

import hashlib
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Optional

from ..algorithm import AccsParams, optimize
from ..baselines import PsoParams, pso_optimize, random_search
from ..benchmarks import UnsupportedFunctionError, get_function, resolve_functions
from ..core import AccsError, ConfigurationError, RngStream, RunRecord

__all__ = [
    "ALGORITHMS",
    "ExperimentConfig",
    "config_as_json",
    "RunFailedError",
    "derive_seed",
    "execute_run",
    "load_config",
    "run_experiment",
]

log = logging.getLogger(__name__)

ALGORITHMS = ("accs", "pso", "random")


class RunFailedError(AccsError, RuntimeError):
    pass


def derive_seed(root_seed: int, algorithm: str, function: str, run: int) -> int:
    """Stable 64-bit seed for one ``(algorithm, function, run)`` triple."""
    key = f"{int(root_seed)}|{algorithm}|{function}|{int(run)}".encode()
    return int.from_bytes(hashlib.blake2b(key, digest_size=8).digest(), "little")


@dataclass
class ExperimentConfig:
    algorithms: list = field(default_factory=lambda: ["accs"])
    functions: list = field(default_factory=lambda: ["classical"])
    runs: int = 30
    root_seed: int = 42
    iterations: Optional[int] = None
    pop_size: Optional[int] = None
    workers: int = 1
    record_wall_time: bool = False
    out: Optional[str] = None

    def __post_init__(self):
        if isinstance(self.algorithms, str):
            self.algorithms = [a.strip() for a in self.algorithms.split(",") if a.strip()]
        if isinstance(self.functions, str):
            self.functions = [f.strip() for f in self.functions.split(",") if f.strip()]
        if int(self.runs) < 1:
            raise ConfigurationError(f"runs must be >= 1, got {self.runs}")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ConfigurationError(f"unknown algorithm {a!r}; choose from {ALGORITHMS}")
        try:
            self.function_ids = [f.id for f in resolve_functions(self.functions)]
        except UnsupportedFunctionError as exc:
            raise ConfigurationError(str(exc)) from exc
        if not self.function_ids:
            raise ConfigurationError("no functions selected")
        if not 0 <= int(self.root_seed) < 2**64:
            raise ConfigurationError("root_seed must be an unsigned 64-bit integer")

    def accs_params(self) -> AccsParams:
        return AccsParams().with_overrides(max_iterations=self.iterations, pop_size=self.pop_size)

    def pso_params(self) -> PsoParams:
        kw = {}
        if self.iterations is not None:
            kw["max_iterations"] = self.iterations
        if self.pop_size is not None:
            kw["pop_size"] = self.pop_size
        return PsoParams(**kw)

    def tasks(self) -> list[tuple]:
        return [
            (algo, fid, run, derive_seed(self.root_seed, algo, fid, run))
            for algo in self.algorithms
            for fid in self.function_ids
            for run in range(int(self.runs))
        ]

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def load_config(path, **overrides) -> ExperimentConfig:
    """Read a flat JSON config; non-``None`` keyword overrides win."""
    data = json.loads(Path(path).read_text()) if path else {}
    if not isinstance(data, dict):
        raise ConfigurationError("config file must hold a flat JSON object")
    known = {f.name for f in fields(ExperimentConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigurationError(f"unknown config keys: {sorted(unknown)}")
    data.update({k: v for k, v in overrides.items() if v is not None})
    return ExperimentConfig(**data)


def execute_run(algorithm, function_id, run, seed, accs_params, pso_params) -> RunRecord:
    """Run one triple with the stream ``RngStream(seed)``."""
    fn = get_function(function_id)
    rng = RngStream(seed)
    if algorithm == "accs":
        rec = optimize(fn, fn.space, accs_params, rng, run=run)
    elif algorithm == "pso":
        rec = pso_optimize(fn, fn.space, pso_params, rng, run=run)
    elif algorithm == "random":
        budget = accs_params.pop_size * (1 + 4 * accs_params.max_iterations)
        rec = random_search(fn, fn.space, budget, rng, run=run)
    else:
        raise ConfigurationError(f"unknown algorithm {algorithm!r}")
    return rec


def _task(args):
    algorithm, function_id, run, seed, accs_params, pso_params = args
    try:
        return execute_run(algorithm, function_id, run, seed, accs_params, pso_params)
    except AccsError as exc:
        raise RunFailedError(f"{algorithm}/{function_id}/run {run}: {exc}") from exc


def run_experiment(config: ExperimentConfig, workers: Optional[int] = None) -> list[RunRecord]:
    """Execute every triple; output order is (algorithm, function, run) regardless of workers."""
    workers = config.workers if workers is None else workers
    accs_params, pso_params = config.accs_params(), config.pso_params()
    jobs = [t + (accs_params, pso_params) for t in config.tasks()]
    log.info("running %d jobs on %d worker(s)", len(jobs), workers)
    if workers <= 1:
        records = [_task(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_task, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    if not config.record_wall_time:
        for rec in records:
            rec.wall_time = float("nan")
    return records


def config_as_json(config: ExperimentConfig) -> str:
    return json.dumps(config.to_dict(), indent=2, sort_keys=True)

