"""Shared primitives: search spaces, candidates, seeded random streams and run records."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "AccsError",
    "ConfigurationError",
    "DimensionError",
    "EvaluationError",
    "InvalidRangeError",
    "Candidate",
    "RngStream",
    "RunRecord",
    "SearchSpace",
    "clamp",
    "int_inclusive",
    "uniform",
]


class AccsError(Exception):
    """Base class for every error raised by this package."""


class InvalidRangeError(AccsError, ValueError):
    pass


class DimensionError(AccsError, ValueError):
    pass


class ConfigurationError(AccsError, ValueError):
    pass


class EvaluationError(AccsError, ArithmeticError):
    """Objective returned a non-finite value."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = None if position is None else np.array(position, dtype=float)


@dataclass(frozen=True)
class SearchSpace:
    """Box-constrained search space.

    Parameters
    ----------
    lower, upper : array_like
        Per-dimension bounds, ``lower[j] < upper[j]``.
    """

    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.atleast_1d(np.asarray(self.lower, dtype=np.float64)).copy()
        upper = np.atleast_1d(np.asarray(self.upper, dtype=np.float64)).copy()
        if lower.ndim != 1 or lower.shape != upper.shape:
            raise DimensionError("lower and upper must be 1-D vectors of equal length")
        if lower.size < 1:
            raise DimensionError("search space needs at least one dimension")
        if not np.all(lower < upper):
            raise InvalidRangeError("every lower bound must be strictly below its upper bound")
        lower.flags.writeable = False
        upper.flags.writeable = False
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def uniform_box(cls, lo: float, hi: float, dim: int) -> SearchSpace:
        if dim < 1:
            raise DimensionError(f"dim must be >= 1, got {dim}")
        return cls(np.full(dim, lo, dtype=float), np.full(dim, hi, dtype=float))

    @property
    def dim(self) -> int:
        return int(self.lower.size)

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    @property
    def is_uniform(self) -> bool:
        return bool(np.all(self.lower == self.lower[0]) and np.all(self.upper == self.upper[0]))

    def contains(self, x) -> bool:
        x = np.asarray(x, dtype=float)
        return bool(np.all((x >= self.lower) & (x <= self.upper)))

    def __eq__(self, other):
        if not isinstance(other, SearchSpace):
            return NotImplemented
        return np.array_equal(self.lower, other.lower) and np.array_equal(self.upper, other.upper)

    def __hash__(self):
        return hash((self.lower.tobytes(), self.upper.tobytes()))


@dataclass(frozen=True)
class Candidate:
    """A position vector paired with its objective value (``nan`` until evaluated)."""

    position: np.ndarray
    fitness: float = float("nan")

    def __post_init__(self):
        pos = np.array(self.position, dtype=np.float64)
        pos.flags.writeable = False
        object.__setattr__(self, "position", pos)
        object.__setattr__(self, "fitness", float(self.fitness))

    @property
    def evaluated(self) -> bool:
        return not np.isnan(self.fitness)


class RngStream:
    """Deterministic random stream identified by ``(seed, stream_id)``.

    Backed by numpy's PCG64 seeded through ``SeedSequence``, whose output is
    specified bit-for-bit across platforms. Distinct stream ids give
    independent sequences for the same seed. A stream must not be shared
    between concurrent workers; use :meth:`spawn` instead.
    """

    _MASK = (1 << 64) - 1

    def __init__(self, seed: int, stream_id: int = 0):
        if not 0 <= int(seed) <= self._MASK or not 0 <= int(stream_id) <= self._MASK:
            raise InvalidRangeError("seed and stream_id must be unsigned 64-bit integers")
        self.seed = int(seed)
        self.stream_id = int(stream_id)
        self._gen = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence(self.seed, spawn_key=(self.stream_id,)))
        )

    def __repr__(self):
        return f"RngStream(seed={self.seed}, stream_id={self.stream_id})"

    def spawn(self, stream_id: int) -> RngStream:
        """Child stream with the same root seed and another id."""
        return RngStream(self.seed, stream_id)

    def random(self, size=None):
        """Draws in ``[0, 1)``."""
        return self._gen.random(size)

    def uniform(self, lo: float = 0.0, hi: float = 1.0, size=None):
        if lo > hi:
            raise InvalidRangeError(f"lo={lo} exceeds hi={hi}")
        u = self._gen.random(size)
        return lo + (hi - lo) * u

    def integers(self, lo: int, hi: int, size=None):
        """Integers in the closed interval ``[lo, hi]``."""
        if lo > hi:
            raise InvalidRangeError(f"lo={lo} exceeds hi={hi}")
        return self._gen.integers(lo, hi, size=size, endpoint=True)

    def coin(self) -> bool:
        return bool(self._gen.random() < 0.5)


def uniform(rng: RngStream, lo: float, hi: float) -> float:
    """One draw in ``[lo, hi)``; a degenerate interval returns ``lo``."""
    return float(rng.uniform(lo, hi))


def int_inclusive(rng: RngStream, lo: int, hi: int) -> int:
    return int(rng.integers(lo, hi))


def clamp(position, space: SearchSpace) -> np.ndarray:
    """Project ``position`` onto the box; in-bounds coordinates are untouched.

    Also accepts a 2-D array of row vectors.
    """
    x = np.asarray(position, dtype=np.float64)
    if x.shape[-1] != space.dim:
        raise DimensionError(f"expected {space.dim} coordinates, got {x.shape[-1]}")
    return np.minimum(np.maximum(x, space.lower), space.upper)


@dataclass
class RunRecord:
    """Outcome of one optimizer run.

    ``best_per_iteration[k]`` is the best fitness known after iteration
    ``k + 1``, so a zero-iteration run has an empty trace and only the
    final best of the initial population.
    """

    algorithm: str
    function: str
    seed: int
    best_per_iteration: np.ndarray
    final_best_position: np.ndarray
    final_best_fitness: float
    evaluations: int
    wall_time: float = 0.0
    run: int = 0
    extra: dict = field(default_factory=dict)

    def __post_init__(self):
        self.best_per_iteration = np.asarray(self.best_per_iteration, dtype=np.float64)
        self.final_best_position = np.asarray(self.final_best_position, dtype=np.float64)
        self.final_best_fitness = float(self.final_best_fitness)

    @property
    def iterations(self) -> int:
        return int(self.best_per_iteration.size)

    def is_monotone(self) -> bool:
        trace = self.best_per_iteration
        return bool(np.all(trace[1:] <= trace[:-1]))
