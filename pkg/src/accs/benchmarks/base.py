from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from ..core import ConfigurationError, DimensionError, RngStream, SearchSpace

__all__ = ["BenchmarkFn", "OptimumRecord", "evaluate"]


@dataclass(frozen=True)
class OptimumRecord:
    function_id: str
    minimizer: np.ndarray
    fmin: float
    tolerance: float = 1e-3


@dataclass(frozen=True)
class BenchmarkFn:
    """A named objective over a box.

    ``func`` is vectorized over the last axis: it maps an ``(n, dim)`` array
    to ``n`` values (and a single vector to a scalar). Noisy objectives take
    an extra ``rng`` argument.
    """

    id: str
    name: str
    space: SearchSpace
    func: Callable = field(repr=False)
    category: str
    fmin: Optional[float] = None
    minimizer: Optional[np.ndarray] = field(default=None, repr=False)
    noisy: bool = False
    bias: float = 0.0
    tolerance: float = 1e-3

    @property
    def dim(self) -> int:
        return self.space.dim

    def __call__(self, x, rng: Optional[RngStream] = None):
        return evaluate(self, x, rng)

    def batch(self, x, rng: Optional[RngStream] = None) -> np.ndarray:
        """Evaluate every row of an ``(n, dim)`` array."""
        x = np.asarray(x, dtype=np.float64)
        if x.ndim != 2 or x.shape[1] != self.dim:
            raise DimensionError(f"{self.id}: expected shape (n, {self.dim}), got {x.shape}")
        if self.noisy:
            if rng is None:
                raise ConfigurationError(f"{self.id} is noisy and needs an RngStream")
            return np.asarray(self.func(x, rng), dtype=np.float64)
        return np.asarray(self.func(x), dtype=np.float64)

    def catalog_row(self) -> dict:
        lo, hi = self.space.lower, self.space.upper
        return {
            "id": self.id,
            "name": self.name,
            "category": self.category,
            "dim": self.dim,
            "lower": float(lo[0]) if self.space.is_uniform else lo.tolist(),
            "upper": float(hi[0]) if self.space.is_uniform else hi.tolist(),
            "fmin": self.fmin,
        }


def evaluate(fn: BenchmarkFn, x, rng: Optional[RngStream] = None) -> float:
    """Objective value of a single point ``x``."""
    x = np.asarray(x, dtype=np.float64)
    if x.ndim != 1 or x.size != fn.dim:
        raise DimensionError(f"{fn.id}: expected {fn.dim} coordinates, got shape {x.shape}")
    return float(fn.batch(x[None, :], rng)[0])
