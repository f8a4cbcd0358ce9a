"""Classical test functions F1-F19.

F1-F7 are unimodal, F8-F13 multimodal (both 30-dimensional by default) and
F14-F19 are fixed-dimension multimodal problems. Every function here takes
an array whose last axis holds the coordinates.
"""

from __future__ import annotations

import numpy as np

from ..core import RngStream, SearchSpace
from .base import BenchmarkFn

__all__ = [
    "penalty_u",
    "sphere",
    "schwefel_2_22",
    "schwefel_1_2",
    "schwefel_2_21",
    "rosenbrock",
    "step",
    "quartic_noise",
    "schwefel_2_26",
    "rastrigin",
    "ackley",
    "griewank",
    "penalized_1",
    "penalized_2",
    "shekel_foxholes",
    "kowalik",
    "six_hump_camel",
    "branin",
    "goldstein_price",
    "hartmann_3",
    "classical_suite",
]

UNIMODAL = "unimodal"
MULTIMODAL = "multimodal"
FIXED = "fixed-dimension"


def penalty_u(x, a, k, m):
    """Boundary penalty: ``k (|x| - a)^m`` outside ``[-a, a]``, zero inside."""
    x = np.asarray(x, dtype=np.float64)
    out = np.where(x > a, k * (x - a) ** m, 0.0)
    out = np.where(x < -a, k * (-x - a) ** m, out)
    return out if out.ndim else float(out)


def sphere(x):
    return np.sum(x**2, axis=-1)


def schwefel_2_22(x):
    ax = np.abs(x)
    return np.sum(ax, axis=-1) + np.prod(ax, axis=-1)


def schwefel_1_2(x):
    return np.sum(np.cumsum(x, axis=-1) ** 2, axis=-1)


def schwefel_2_21(x):
    return np.max(np.abs(x), axis=-1)


def rosenbrock(x):
    head, tail = x[..., :-1], x[..., 1:]
    return np.sum(100.0 * (tail - head**2) ** 2 + (head - 1.0) ** 2, axis=-1)


def step(x, floor=False):
    """Step function; ``floor=True`` gives the staircase variant.

    The default, unfloored form is the one the published ACCS figures for
    F6 are consistent with.
    """
    shifted = x + 0.5
    if floor:
        shifted = np.floor(shifted)
    return np.sum(shifted**2, axis=-1)


def quartic(x):
    i = np.arange(1, x.shape[-1] + 1)
    return np.sum(i * x**4, axis=-1)


def quartic_noise(x, rng: RngStream):
    """Quartic plus one ``U[0, 1)`` draw per evaluated point."""
    x = np.asarray(x, dtype=np.float64)
    return quartic(x) + rng.random(x.shape[:-1] or None)


def schwefel_2_26(x):
    return np.sum(-x * np.sin(np.sqrt(np.abs(x))), axis=-1)


def rastrigin(x):
    return np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0, axis=-1)


def ackley(x):
    n = x.shape[-1]
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x**2, axis=-1) / n))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x), axis=-1) / n)
        + 20.0
        + np.e
    )


def griewank(x):
    i = np.arange(1, x.shape[-1] + 1)
    return np.sum(x**2, axis=-1) / 4000.0 - np.prod(np.cos(x / np.sqrt(i)), axis=-1) + 1.0


def penalized_1(x):
    n = x.shape[-1]
    y = 1.0 + (x + 1.0) / 4.0
    core = (
        10.0 * np.sin(np.pi * y[..., 0]) ** 2
        + np.sum((y[..., :-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[..., 1:]) ** 2), axis=-1)
        + (y[..., -1] - 1.0) ** 2
    )
    return np.pi / n * core + np.sum(penalty_u(x, 10.0, 100.0, 4), axis=-1)


def penalized_2(x):
    core = (
        np.sin(3.0 * np.pi * x[..., 0]) ** 2
        + np.sum((x - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x + 1.0) ** 2), axis=-1)
        + (x[..., -1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[..., -1]) ** 2)
    )
    return 0.1 * core + np.sum(penalty_u(x, 5.0, 100.0, 4), axis=-1)


_FOXHOLES = np.array(
    [
        [-32, -16, 0, 16, 32] * 5,
        [v for v in (-32, -16, 0, 16, 32) for _ in range(5)],
    ],
    dtype=np.float64,
)


def shekel_foxholes(x):
    diff = x[..., :, None] - _FOXHOLES  # (..., 2, 25)
    j = np.arange(1, 26)
    inner = j + np.sum(diff**6, axis=-2)
    return 1.0 / (1.0 / 500.0 + np.sum(1.0 / inner, axis=-1))


_KOWALIK_A = np.array(
    [0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246]
)
_KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])


def kowalik(x):
    x1, x2, x3, x4 = (x[..., k, None] for k in range(4))
    b = _KOWALIK_B
    model = x1 * (b**2 + b * x2) / (b**2 + b * x3 + x4)
    return np.sum((_KOWALIK_A - model) ** 2, axis=-1)


def six_hump_camel(x):
    x1, x2 = x[..., 0], x[..., 1]
    return 4 * x1**2 - 2.1 * x1**4 + x1**6 / 3 - x1 * x2 - 4 * x2**2 + 4 * x2**4


def branin(x):
    x1, x2 = x[..., 0], x[..., 1]
    return (
        (x2 - 5.1 / (4 * np.pi**2) * x1**2 + 5 / np.pi * x1 - 6) ** 2
        + 10 * (1 - 1 / (8 * np.pi)) * np.cos(x1)
        + 10
    )


def goldstein_price(x):
    x1, x2 = x[..., 0], x[..., 1]
    a = 1 + (x1 + x2 + 1) ** 2 * (19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2)
    b = 30 + (2 * x1 - 3 * x2) ** 2 * (18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2)
    return a * b


_HART3_A = np.array([[3.0, 10.0, 30.0], [0.1, 10.0, 35.0], [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]])
_HART3_C = np.array([1.0, 1.2, 3.0, 3.2])
_HART3_P = np.array(
    [
        [0.3689, 0.1170, 0.2673],
        [0.4699, 0.4387, 0.7470],
        [0.1091, 0.8732, 0.5547],
        [0.03815, 0.5743, 0.8828],
    ]
)


def hartmann_3(x):
    d2 = np.sum(_HART3_A * (x[..., None, :] - _HART3_P) ** 2, axis=-1)
    return -np.sum(_HART3_C * np.exp(-d2), axis=-1)


def _box(lo, hi, dim):
    return SearchSpace.uniform_box(lo, hi, dim)


def classical_suite(dim: int = 30) -> list[BenchmarkFn]:
    """F1-F19 with the dimensions and ranges of the standard classical table.

    ``dim`` only affects the scalable F1-F13.
    """
    z = np.zeros(dim)
    return [
        BenchmarkFn("F1", "Sphere", _box(-100, 100, dim), sphere, UNIMODAL, 0.0, z),
        BenchmarkFn("F2", "Schwefel 2.22", _box(-10, 10, dim), schwefel_2_22, UNIMODAL, 0.0, z),
        BenchmarkFn("F3", "Schwefel 1.2", _box(-100, 100, dim), schwefel_1_2, UNIMODAL, 0.0, z),
        BenchmarkFn("F4", "Schwefel 2.21", _box(-100, 100, dim), schwefel_2_21, UNIMODAL, 0.0, z),
        BenchmarkFn("F5", "Rosenbrock", _box(-30, 30, dim), rosenbrock, UNIMODAL, 0.0, np.ones(dim)),
        BenchmarkFn("F6", "Step", _box(-100, 100, dim), step, UNIMODAL, 0.0, np.full(dim, -0.5)),
        BenchmarkFn(
            "F7", "Quartic with noise", _box(-1.28, 1.28, dim), quartic_noise, UNIMODAL, 0.0, z,
            noisy=True,
        ),
        BenchmarkFn(
            "F8", "Schwefel 2.26", _box(-500, 500, dim), schwefel_2_26, MULTIMODAL,
            -418.9829 * dim, np.full(dim, 420.9687), tolerance=0.1,
        ),
        BenchmarkFn("F9", "Rastrigin", _box(-5.12, 5.12, dim), rastrigin, MULTIMODAL, 0.0, z),
        BenchmarkFn("F10", "Ackley", _box(-32, 32, dim), ackley, MULTIMODAL, 0.0, z),
        BenchmarkFn("F11", "Griewank", _box(-600, 600, dim), griewank, MULTIMODAL, 0.0, z),
        BenchmarkFn(
            "F12", "Penalized 1", _box(-50, 50, dim), penalized_1, MULTIMODAL, 0.0, -np.ones(dim)
        ),
        BenchmarkFn(
            "F13", "Penalized 2", _box(-50, 50, dim), penalized_2, MULTIMODAL, 0.0, np.ones(dim)
        ),
        BenchmarkFn(
            "F14", "Shekel's foxholes", _box(-65, 65, 2), shekel_foxholes, FIXED, 1.0,
            np.array([-31.97833, -31.97833]),
        ),
        BenchmarkFn(
            "F15", "Kowalik", _box(-5, 5, 4), kowalik, FIXED, 0.00030,
            np.array([0.192833, 0.190836, 0.123117, 0.135766]),
        ),
        BenchmarkFn(
            "F16", "Six-hump camel back", _box(-5, 5, 2), six_hump_camel, FIXED, -1.0316,
            np.array([0.08984201, 0.71265640]),
        ),
        BenchmarkFn(
            "F17", "Branin", _box(-5, 5, 2), branin, FIXED, 0.398, np.array([np.pi, 2.275])
        ),
        BenchmarkFn(
            "F18", "Goldstein-Price", _box(-2, 2, 2), goldstein_price, FIXED, 3.0,
            np.array([0.0, -1.0]),
        ),
        BenchmarkFn(
            "F19", "Hartmann 3", _box(1, 3, 3), hartmann_3, FIXED, -3.86,
            np.array([0.114614, 0.555649, 0.852547]),
        ),
    ]
