"""Reference optimizers: global-best PSO and uniform random search."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .benchmarks.base import BenchmarkFn
from .core import (
    ConfigurationError,
    DimensionError,
    EvaluationError,
    InvalidRangeError,
    RngStream,
    RunRecord,
    SearchSpace,
    clamp,
)

__all__ = ["PsoParams", "pso_optimize", "pso_step", "random_search"]


@dataclass(frozen=True)
class PsoParams:
    """Constriction-equivalent PSO settings; ``vmax_fraction`` is relative to box width."""

    w: float = 0.7298
    c1: float = 1.49618
    c2: float = 1.49618
    pop_size: int = 30
    max_iterations: int = 500
    vmax_fraction: float = 0.5

    def __post_init__(self):
        if not 0.0 <= self.w <= 1.0:
            raise ConfigurationError(f"inertia w must lie in [0, 1], got {self.w}")
        if self.c1 < 0 or self.c2 < 0:
            raise ConfigurationError("acceleration coefficients must be non-negative")
        if self.pop_size < 1 or self.max_iterations < 0:
            raise ConfigurationError("pop_size must be >= 1 and max_iterations >= 0")
        if self.vmax_fraction <= 0:
            raise ConfigurationError("vmax_fraction must be positive")


def _evaluate(objective, x, rng):
    values = objective.batch(x, rng)
    bad = ~np.isfinite(values)
    if np.any(bad):
        k = int(np.flatnonzero(bad)[0])
        raise EvaluationError(f"{objective.id} returned {values[k]}", x[k])
    return values


def pso_step(
    positions,
    velocities,
    pbests,
    gbest,
    params: PsoParams,
    rng: Optional[RngStream],
    space: SearchSpace,
    *,
    r1=None,
    r2=None,
):
    """One velocity/position update for the whole swarm.

    Returns ``(positions, velocities)``. ``r1``/``r2`` override the random
    coefficient arrays.
    """
    x = np.atleast_2d(np.asarray(positions, dtype=np.float64))
    v = np.atleast_2d(np.asarray(velocities, dtype=np.float64))
    pb = np.atleast_2d(np.asarray(pbests, dtype=np.float64))
    gb = np.asarray(gbest, dtype=np.float64)
    if not (x.shape == v.shape == pb.shape) or gb.shape != (x.shape[1],) or x.shape[1] != space.dim:
        raise DimensionError("positions, velocities, personal bests and global best disagree in shape")
    if r1 is None:
        r1 = rng.random(x.shape)
    if r2 is None:
        r2 = rng.random(x.shape)
    vmax = params.vmax_fraction * space.width
    v_new = params.w * v + params.c1 * r1 * (pb - x) + params.c2 * r2 * (gb - x)
    v_new = np.clip(v_new, -vmax, vmax)
    return clamp(x + v_new, space), v_new


def pso_optimize(
    objective: BenchmarkFn,
    space: Optional[SearchSpace] = None,
    params: PsoParams = PsoParams(),
    rng: Optional[RngStream] = None,
    *,
    run: int = 0,
) -> RunRecord:
    space = space or objective.space
    rng = rng or RngStream(0)
    t0 = time.perf_counter()
    n, d = params.pop_size, space.dim
    x = space.lower + space.width * rng.random((n, d))
    vmax = params.vmax_fraction * space.width
    v = rng.uniform(-1.0, 1.0, (n, d)) * vmax
    fx = _evaluate(objective, x, rng)
    evaluations = n
    pb, pb_f = x.copy(), fx.copy()
    g = int(np.argmin(pb_f))
    trace = np.empty(params.max_iterations)
    for k in range(params.max_iterations):
        x, v = pso_step(x, v, pb, pb[g], params, rng, space)
        fx = _evaluate(objective, x, rng)
        evaluations += n
        better = fx < pb_f
        pb[better], pb_f[better] = x[better], fx[better]
        g = int(np.argmin(pb_f))
        trace[k] = pb_f[g]
    return RunRecord(
        "pso", objective.id, rng.seed, trace, pb[g].copy(), float(pb_f[g]), evaluations,
        time.perf_counter() - t0, run, {"stream_id": rng.stream_id},
    )


def random_search(
    objective: BenchmarkFn,
    space: Optional[SearchSpace] = None,
    budget: int = 15030,
    rng: Optional[RngStream] = None,
    *,
    run: int = 0,
    chunk: int = 4096,
) -> RunRecord:
    """Best of ``budget`` uniform samples; the trace holds the running minimum per sample."""
    if budget < 1:
        raise InvalidRangeError(f"budget must be >= 1, got {budget}")
    space = space or objective.space
    rng = rng or RngStream(0)
    t0 = time.perf_counter()
    values = np.empty(budget)
    best_x, best_f = None, np.inf
    for start in range(0, budget, chunk):
        m = min(chunk, budget - start)
        x = space.lower + space.width * rng.random((m, space.dim))
        f = _evaluate(objective, x, rng)
        values[start : start + m] = f
        k = int(np.argmin(f))
        if f[k] < best_f:
            best_f, best_x = float(f[k]), x[k].copy()
    return RunRecord(
        "random", objective.id, rng.seed, np.minimum.accumulate(values), best_x, best_f, budget,
        time.perf_counter() - t0, run, {"stream_id": rng.stream_id},
    )
