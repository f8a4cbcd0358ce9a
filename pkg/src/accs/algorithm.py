"""Artificial Cardiac Conduction System (ACCS) optimizer.

Every iteration pushes each candidate ("heart rate") through four
conduction nodes in order SA -> AV -> BoH -> PF. At each node a random
impulse threshold, a random node heart rate and a conduction flag decide
whether the candidate takes the normal or the abnormal update rule:

    SA/BoH/PF, normal     x' = R * (x - r x*) - x
    SA/BoH/PF, abnormal   x' = R * (x - r x*) - HP x
    AV, normal            x' = R * (x - r x*) - D1 x,      D1 ~ U[0.1, 0.2]
    AV, abnormal          x' = R * (x - r x*) - D2 HP x,   D2 ~ U[0.2, 0.3]

with ``R`` a uniform random vector, ``r`` a uniform scalar, ``x*`` the
global best and ``HP`` the heart power, which decays linearly to zero.
Positions are clamped to the box after every update and re-evaluated so
personal bests can pick up intermediate improvements. The global best is
refreshed once per iteration.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from .benchmarks.base import BenchmarkFn
from .core import (
    AccsError,
    Candidate,
    ConfigurationError,
    DimensionError,
    EvaluationError,
    InvalidRangeError,
    RngStream,
    RunRecord,
    SearchSpace,
    clamp,
)

__all__ = [
    "AccsParams",
    "AccsState",
    "DegenerateBoundsError",
    "EmptyPopulationError",
    "NodeKind",
    "NODE_ORDER",
    "classify_flag",
    "draw_conduction_flag",
    "hp_schedule",
    "initialize",
    "node_heart_rate",
    "node_impulse",
    "node_update",
    "optimize",
    "select_update_order",
    "step",
    "update_global_best",
    "update_personal_best",
]


class DegenerateBoundsError(AccsError, ValueError):
    pass


class EmptyPopulationError(AccsError, ValueError):
    pass


class NodeKind(enum.Enum):
    SA = "SA"
    AV = "AV"
    BOH = "BoH"
    PF = "PF"


NODE_ORDER = (NodeKind.SA, NodeKind.AV, NodeKind.BOH, NodeKind.PF)


def _check_interval(name, interval):
    lo, hi = interval
    if not (0.0 <= lo <= hi <= 1.0):
        raise ConfigurationError(f"{name} must be a non-empty sub-interval of [0, 1], got {interval}")


@dataclass(frozen=True)
class AccsParams:
    """ACCS configuration.

    Parameters
    ----------
    pop_size : int
        Number of candidates; at least 4.
    max_iterations : int
        Number of iterations.
    hp_init, hp_constant : float
        Heart power starts at ``hp_init * hp_constant``.
    d1_range, d2_range : tuple of float
        Ranges of the AV-node delay factors for the normal and abnormal branch.
    normal_flag_threshold : float
        Conduction flags at or below this value count as normal.
    strict_bounds : bool
        Refuse non-uniform boxes instead of using the first coordinate's
        bounds for the impulse ratio.
    schedule : callable, optional
        ``schedule(t, max_iterations, params) -> hp``; defaults to the
        linear decay of :func:`hp_schedule`.
    """

    pop_size: int = 30
    max_iterations: int = 500
    hp_init: float = 0.985
    hp_constant: float = 0.999
    d1_range: tuple = (0.1, 0.2)
    d2_range: tuple = (0.2, 0.3)
    normal_flag_threshold: float = 0.5
    strict_bounds: bool = False
    schedule: Optional[Callable] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if int(self.pop_size) < 4:
            raise ConfigurationError(f"pop_size must be >= 4, got {self.pop_size}")
        if int(self.max_iterations) < 0:
            raise ConfigurationError("max_iterations must be non-negative")
        if not 0.0 < self.hp_constant <= 1.0:
            raise ConfigurationError(f"hp_constant must lie in (0, 1], got {self.hp_constant}")
        if not 0.0 <= self.hp_init <= 1.0:
            raise ConfigurationError(f"hp_init must lie in [0, 1], got {self.hp_init}")
        _check_interval("d1_range", self.d1_range)
        _check_interval("d2_range", self.d2_range)
        object.__setattr__(self, "d1_range", tuple(float(v) for v in self.d1_range))
        object.__setattr__(self, "d2_range", tuple(float(v) for v in self.d2_range))
        object.__setattr__(self, "pop_size", int(self.pop_size))
        object.__setattr__(self, "max_iterations", int(self.max_iterations))

    def with_overrides(self, **kwargs) -> AccsParams:
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def hp_schedule(t: int, max_iterations: int, params: AccsParams = AccsParams()) -> float:
    """Heart power ``hp_init * C * (1 - t / T)``."""
    if t < 0 or t > max_iterations:
        raise InvalidRangeError(f"iteration {t} outside [0, {max_iterations}]")
    start = params.hp_init * params.hp_constant
    if max_iterations == 0:
        return start
    return start * (1.0 - t / max_iterations)


def _current_hp(t, params):
    schedule = params.schedule or hp_schedule
    return float(schedule(t, params.max_iterations, params))


def _bound_ratio(space: SearchSpace, strict: bool = False) -> float:
    if strict and not space.is_uniform:
        raise ConfigurationError("impulse ratio needs a uniform box in strict mode")
    lb, ub = float(space.lower[0]), float(space.upper[0])
    if ub == 0.0:
        raise DegenerateBoundsError("upper bound is zero; LB/UP undefined")
    return lb / ub


def node_impulse(space: SearchSpace, rng: RngStream, r: Optional[float] = None, strict: bool = False) -> float:
    """Impulse threshold ``(LB / UP) * r`` with ``r ~ U[0, 1]``."""
    ratio = _bound_ratio(space, strict)
    if r is None:
        r = rng.random()
    return ratio * float(r)


def node_heart_rate(space: SearchSpace, rng: RngStream, r: Optional[float] = None, strict: bool = False) -> float:
    """Random node heart rate, same law as :func:`node_impulse` with its own draw."""
    return node_impulse(space, rng, r, strict)


def classify_flag(value: float, params: AccsParams = AccsParams()) -> bool:
    return value <= params.normal_flag_threshold


def draw_conduction_flag(rng: RngStream, params: AccsParams = AccsParams()) -> tuple[float, bool]:
    """Fair coin between a normal flag ``U[0, 0.5]`` and a faulty one ``U[0.6, 1]``."""
    if rng.coin():
        value = float(rng.uniform(0.0, 0.5))
    else:
        value = float(rng.uniform(0.6, 1.0))
    return value, classify_flag(value, params)


def _draw_flags(rng, n, params):
    coins = rng.random(n) < 0.5
    u = rng.random(n)
    values = np.where(coins, 0.5 * u, 0.6 + 0.4 * u)
    return values, values <= params.normal_flag_threshold


def _update_rows(x, x_star, hp, node, is_normal, R, r, delay):
    # x, R: (n, d); x_star: (d,); is_normal, r, delay: (n,)
    move = R * (x - r[:, None] * x_star)
    if node is NodeKind.AV:
        coef = np.where(is_normal, delay, delay * hp)
    else:
        coef = np.where(is_normal, 1.0, hp)
    return move - coef[:, None] * x


def node_update(
    x,
    x_star,
    hp: float,
    node: NodeKind,
    is_normal: bool,
    params: AccsParams = AccsParams(),
    rng: Optional[RngStream] = None,
    space: Optional[SearchSpace] = None,
    *,
    R=None,
    r: Optional[float] = None,
    delay: Optional[float] = None,
) -> np.ndarray:
    """Move one candidate through one node.

    ``R``, ``r`` and ``delay`` are drawn from ``rng`` unless given. The
    result is clamped to ``space`` when one is passed.
    """
    x = np.asarray(x, dtype=np.float64)
    x_star = np.asarray(x_star, dtype=np.float64)
    if x.shape != x_star.shape or x.ndim != 1:
        raise DimensionError(f"position {x.shape} and global best {x_star.shape} differ")
    if not 0.0 <= hp <= 1.0:
        raise InvalidRangeError(f"heart power {hp} outside [0, 1]")
    if R is None:
        R = rng.random(x.size)
    if r is None:
        r = rng.random()
    if delay is None:
        if node is NodeKind.AV:
            lo, hi = params.d1_range if is_normal else params.d2_range
            delay = rng.uniform(lo, hi)
        else:
            delay = 0.0
    out = _update_rows(
        x[None, :], x_star, hp, node, np.array([is_normal]), np.asarray(R, dtype=float)[None, :],
        np.array([float(r)]), np.array([float(delay)]),
    )[0]
    if space is not None:
        out = clamp(out, space)
    return out


def select_update_order(pop_size: int, rng: RngStream) -> np.ndarray:
    """Random visiting order of candidate indices (Fisher-Yates on inclusive integer draws)."""
    if pop_size < 1:
        raise InvalidRangeError("pop_size must be >= 1")
    order = np.arange(pop_size)
    for i in range(pop_size - 1, 0, -1):
        j = int(rng.integers(0, i))
        order[i], order[j] = order[j], order[i]
    return order


@dataclass
class AccsState:
    """Population state between iterations (arrays indexed by candidate)."""

    space: SearchSpace
    positions: np.ndarray
    fitness: np.ndarray
    pbest_positions: np.ndarray
    pbest_fitness: np.ndarray
    gbest_position: np.ndarray
    gbest_fitness: float
    iteration: int = 0
    hp: float = 0.0
    evaluations: int = 0
    position_updates: int = 0

    @property
    def pop_size(self) -> int:
        return int(self.positions.shape[0])

    @property
    def population(self) -> list[Candidate]:
        return [Candidate(p, f) for p, f in zip(self.positions, self.fitness)]

    @property
    def personal_bests(self) -> list[Candidate]:
        return [Candidate(p, f) for p, f in zip(self.pbest_positions, self.pbest_fitness)]

    @property
    def global_best(self) -> Candidate:
        return Candidate(self.gbest_position, self.gbest_fitness)

    def copy(self) -> AccsState:
        return replace(
            self,
            positions=self.positions.copy(),
            fitness=self.fitness.copy(),
            pbest_positions=self.pbest_positions.copy(),
            pbest_fitness=self.pbest_fitness.copy(),
            gbest_position=self.gbest_position.copy(),
        )


def update_personal_best(state: AccsState, i: int) -> AccsState:
    """Replace candidate ``i``'s personal best on strict improvement."""
    if not 0 <= i < state.pop_size:
        raise IndexError(f"candidate index {i} out of range for population of {state.pop_size}")
    if state.fitness[i] < state.pbest_fitness[i]:
        state.pbest_fitness[i] = state.fitness[i]
        state.pbest_positions[i] = state.positions[i]
    return state


def _update_personal_bests(state, rows):
    better = state.fitness[rows] < state.pbest_fitness[rows]
    idx = rows[better]
    state.pbest_fitness[idx] = state.fitness[idx]
    state.pbest_positions[idx] = state.positions[idx]


def update_global_best(state: AccsState) -> AccsState:
    """Global best is the lowest-index argmin over personal bests."""
    if state.pbest_fitness.size == 0:
        raise EmptyPopulationError("population is empty")
    k = int(np.argmin(state.pbest_fitness))
    state.gbest_fitness = float(state.pbest_fitness[k])
    state.gbest_position = state.pbest_positions[k].copy()
    return state


def _evaluate(objective: BenchmarkFn, x, rng):
    values = objective.batch(x, rng)
    bad = ~np.isfinite(values)
    if np.any(bad):
        k = int(np.flatnonzero(bad)[0])
        raise EvaluationError(f"{objective.id} returned {values[k]} at position", x[k])
    return values


def initialize(
    objective: BenchmarkFn,
    params: AccsParams,
    rng: RngStream,
    space: Optional[SearchSpace] = None,
) -> AccsState:
    """Uniform random population, evaluated, with personal and global bests set."""
    space = space or objective.space
    if space.dim != objective.dim:
        raise DimensionError(f"space has {space.dim} dims, objective {objective.id} has {objective.dim}")
    _bound_ratio(space, params.strict_bounds)
    n = params.pop_size
    positions = space.lower + space.width * rng.random((n, space.dim))
    fitness = _evaluate(objective, positions, rng)
    state = AccsState(
        space=space,
        positions=positions,
        fitness=fitness,
        pbest_positions=positions.copy(),
        pbest_fitness=fitness.copy(),
        gbest_position=positions[0].copy(),
        gbest_fitness=float(fitness[0]),
        iteration=0,
        hp=_current_hp(0, params),
        evaluations=n,
    )
    return update_global_best(state)


def step(state: AccsState, objective: BenchmarkFn, params: AccsParams, rng: RngStream) -> AccsState:
    """Advance one iteration; returns a new state, ``state`` is left untouched.

    The candidates are visited in a random order; the four nodes are
    processed in lockstep across the population since the global best is
    fixed within an iteration. Draws for the ``k``-th visited candidate sit
    in row ``k`` of each node's draw arrays.
    """
    if state.iteration >= params.max_iterations:
        raise InvalidRangeError(f"iteration {state.iteration} already at max_iterations")
    new = state.copy()
    space = new.space
    n, d = new.positions.shape
    ratio = _bound_ratio(space, params.strict_bounds)
    order = select_update_order(n, rng)
    x_star = new.gbest_position
    hp = new.hp

    for node in NODE_ORDER:
        impulse = ratio * rng.random(n)
        heart_rate = ratio * rng.random(n)
        _, flag_normal = _draw_flags(rng, n, params)
        normal = (heart_rate < impulse) | ~flag_normal
        R = rng.random((n, d))
        r = rng.random(n)
        if node is NodeKind.AV:
            u = rng.random(n)
            d1 = params.d1_range[0] + (params.d1_range[1] - params.d1_range[0]) * u
            d2 = params.d2_range[0] + (params.d2_range[1] - params.d2_range[0]) * u
            delay = np.where(normal, d1, d2)
        else:
            delay = np.zeros(n)
        moved = _update_rows(new.positions[order], x_star, hp, node, normal, R, r, delay)
        new.positions[order] = clamp(moved, space)
        new.fitness[order] = _evaluate(objective, new.positions[order], rng)
        new.evaluations += n
        new.position_updates += n
        _update_personal_bests(new, order)

    update_global_best(new)
    new.iteration += 1
    new.hp = _current_hp(new.iteration, params)
    return new


def optimize(
    objective: BenchmarkFn,
    space: Optional[SearchSpace] = None,
    params: AccsParams = AccsParams(),
    rng: Optional[RngStream] = None,
    *,
    run: int = 0,
    callback: Optional[Callable[[AccsState], None]] = None,
) -> RunRecord:
    """Minimize ``objective`` over ``space`` (defaults to the objective's own box)."""
    if rng is None:
        rng = RngStream(0)
    t0 = time.perf_counter()
    state = initialize(objective, params, rng, space)
    trace = np.empty(params.max_iterations)
    for k in range(params.max_iterations):
        state = step(state, objective, params, rng)
        trace[k] = state.gbest_fitness
        if callback is not None:
            callback(state)
    return RunRecord(
        algorithm="accs",
        function=objective.id,
        seed=rng.seed,
        best_per_iteration=trace,
        final_best_position=state.gbest_position,
        final_best_fitness=state.gbest_fitness,
        evaluations=state.evaluations,
        wall_time=time.perf_counter() - t0,
        run=run,
        extra={"stream_id": rng.stream_id, "position_updates": state.position_updates},
    )
