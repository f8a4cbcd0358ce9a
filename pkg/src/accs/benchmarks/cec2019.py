"""CEC-2019 "100-digit challenge" functions without shift or rotation data.

Each function is the competition's base definition, including its input
scaling, evaluated on the unshifted coordinates, plus a bias of 1 so the
optimum value is 1. Without the official shift/rotation files these are
not the exact competition problems, so published results cannot be
reproduced number for number.
"""

from __future__ import annotations

import numpy as np

from ..core import SearchSpace
from .base import BenchmarkFn

__all__ = [
    "chebyshev_fitting",
    "inverse_hilbert",
    "lennard_jones",
    "cec_rastrigin",
    "cec_griewank",
    "weierstrass",
    "modified_schwefel",
    "expanded_schaffer_f6",
    "happy_cat",
    "cec_ackley",
    "cec2019_suite",
]

BIAS = 1.0
SCHWEFEL_CONSTANT = 4.189828872724338e02
SCHWEFEL_SHIFT = 4.209687462275036e02
LJ_MIN_ENERGY_6 = 12.7120622568


def _chebyshev_threshold(dim):
    # value of the degree (dim - 1) Chebyshev polynomial at 1.2
    a, b = 1.0, 1.2
    for _ in range(dim - 2):
        a, b = b, 2.4 * b - a
    return b


def _horner(coeffs, y):
    # coeffs (..., d) in descending powers; y (m,)
    p = np.broadcast_to(coeffs[..., :1], coeffs.shape[:-1] + (1,)) * np.ones_like(y)
    for j in range(1, coeffs.shape[-1]):
        p = p * y + coeffs[..., j : j + 1]
    return p


def chebyshev_fitting(x):
    """Storn's Chebyshev polynomial fitting problem (coefficients in descending powers)."""
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    threshold = _chebyshev_threshold(d)
    m = 32 * d
    grid = -1.0 + 2.0 * np.arange(m + 1) / m
    p = _horner(x, grid)
    inside = np.where(np.abs(p) > 1.0, (1.0 - np.abs(p)) ** 2, 0.0)
    total = np.sum(inside, axis=-1)
    ends = _horner(x, np.array([-1.2, 1.2]))
    total += np.sum(np.where(ends < threshold, (ends - threshold) ** 2, 0.0), axis=-1)
    return total


def inverse_hilbert(x):
    """Sum of absolute entries of ``H Z - I`` with ``Z`` the square reshape of ``x``."""
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    n = int(round(np.sqrt(d)))
    if n * n != d:
        raise ValueError(f"inverse_hilbert needs a square dimension, got {d}")
    idx = np.arange(n)
    hilbert = 1.0 / (idx[:, None] + idx[None, :] + 1.0)
    z = x.reshape(x.shape[:-1] + (n, n))
    w = hilbert @ z - np.eye(n)
    return np.sum(np.abs(w), axis=(-2, -1))


def lennard_jones(x):
    """Lennard-Jones cluster energy shifted so the 6-atom optimum is 0."""
    x = np.asarray(x, dtype=np.float64)
    d = x.shape[-1]
    if d % 3:
        raise ValueError(f"lennard_jones needs a multiple of 3 coordinates, got {d}")
    atoms = x.reshape(x.shape[:-1] + (d // 3, 3))
    diff = atoms[..., :, None, :] - atoms[..., None, :, :]
    r2 = np.sum(diff**2, axis=-1)
    iu = np.triu_indices(d // 3, k=1)
    r2 = r2[..., iu[0], iu[1]]
    r2 = np.maximum(r2, 1e-16)
    inv6 = 1.0 / r2**3
    energy = np.sum(inv6 * inv6 - 2.0 * inv6, axis=-1)
    return LJ_MIN_ENERGY_6 + energy


def _rastrigin(z):
    return np.sum(z**2 - 10.0 * np.cos(2.0 * np.pi * z) + 10.0, axis=-1)


def cec_rastrigin(x):
    return _rastrigin(np.asarray(x, dtype=np.float64) * (5.12 / 100.0))


def cec_griewank(x):
    z = np.asarray(x, dtype=np.float64) * (600.0 / 100.0)
    i = np.arange(1, z.shape[-1] + 1)
    return np.sum(z**2, axis=-1) / 4000.0 - np.prod(np.cos(z / np.sqrt(i)), axis=-1) + 1.0


def weierstrass(x, a=0.5, b=3.0, kmax=20):
    z = np.asarray(x, dtype=np.float64) * (0.5 / 100.0)
    d = z.shape[-1]
    k = np.arange(kmax + 1)
    ak, bk = a**k, b**k
    terms = np.sum(ak * np.cos(2.0 * np.pi * bk * (z[..., None] + 0.5)), axis=-1)
    offset = np.sum(ak * np.cos(2.0 * np.pi * bk * 0.5))
    return np.sum(terms, axis=-1) - d * offset


def modified_schwefel(x):
    z = np.asarray(x, dtype=np.float64) * (1000.0 / 100.0) + SCHWEFEL_SHIFT
    d = z.shape[-1]
    az = np.abs(z)
    g = z * np.sin(np.sqrt(az))
    hi = 500.0 - np.fmod(z, 500.0)
    g_hi = hi * np.sin(np.sqrt(np.abs(hi))) - (z - 500.0) ** 2 / (10000.0 * d)
    lo = np.fmod(az, 500.0) - 500.0
    g_lo = lo * np.sin(np.sqrt(np.abs(lo))) - (z + 500.0) ** 2 / (10000.0 * d)
    g = np.where(z > 500.0, g_hi, np.where(z < -500.0, g_lo, g))
    return SCHWEFEL_CONSTANT * d - np.sum(g, axis=-1)


def _schaffer_f6(u, v):
    s = u**2 + v**2
    return 0.5 + (np.sin(np.sqrt(s)) ** 2 - 0.5) / (1.0 + 0.001 * s) ** 2


def expanded_schaffer_f6(x):
    z = np.asarray(x, dtype=np.float64)
    return np.sum(_schaffer_f6(z, np.roll(z, -1, axis=-1)), axis=-1)


def happy_cat(x, alpha=0.125):
    z = np.asarray(x, dtype=np.float64) * (5.0 / 100.0) - 1.0
    d = z.shape[-1]
    r2 = np.sum(z**2, axis=-1)
    return np.abs(r2 - d) ** (2 * alpha) + (0.5 * r2 + np.sum(z, axis=-1)) / d + 0.5


def cec_ackley(x):
    z = np.asarray(x, dtype=np.float64)
    d = z.shape[-1]
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(z**2, axis=-1) / d))
        - np.exp(np.sum(np.cos(2.0 * np.pi * z), axis=-1) / d)
        + 20.0
        + np.e
    )


def _biased(base):
    def f(x):
        return base(x) + BIAS

    f.__name__ = base.__name__
    f.base = base
    return f


def _chebyshev_optimum(dim):
    # coefficients of T_{dim-1}, descending powers
    t_prev, t = np.array([1.0]), np.array([1.0, 0.0])
    for _ in range(dim - 2):
        t_prev, t = t, np.concatenate([2.0 * t, [0.0]]) - np.concatenate([[0.0, 0.0], t_prev])
    return t


def _hilbert_optimum(dim):
    n = int(round(np.sqrt(dim)))
    idx = np.arange(n)
    return np.linalg.inv(1.0 / (idx[:, None] + idx[None, :] + 1.0)).ravel()


def _lennard_jones_optimum():
    # regular octahedron; with u = edge**-6 the energy is 12.046875 u^2 - 24.75 u
    u = 24.75 / (2.0 * 12.046875)
    half_diag = u ** (-1.0 / 6.0) / np.sqrt(2.0)
    return (half_diag * np.vstack([np.eye(3), -np.eye(3)])).ravel()


def cec2019_suite() -> list[BenchmarkFn]:
    """CEC01-CEC10 with the competition dimensions and ranges."""
    cat = "cec2019"
    box = SearchSpace.uniform_box
    z10 = np.zeros(10)
    spec = [
        ("CEC01", "Storn's Chebyshev polynomial fitting", box(-8192, 8192, 9), chebyshev_fitting, _chebyshev_optimum(9)),
        ("CEC02", "Inverse Hilbert matrix", box(-16384, 16384, 16), inverse_hilbert, _hilbert_optimum(16)),
        ("CEC03", "Lennard-Jones minimum energy cluster", box(-4, 4, 18), lennard_jones, _lennard_jones_optimum()),
        ("CEC04", "Rastrigin", box(-100, 100, 10), cec_rastrigin, z10),
        ("CEC05", "Griewank", box(-100, 100, 10), cec_griewank, z10),
        ("CEC06", "Weierstrass", box(-100, 100, 10), weierstrass, z10),
        ("CEC07", "Modified Schwefel", box(-100, 100, 10), modified_schwefel, z10),
        ("CEC08", "Expanded Schaffer F6", box(-100, 100, 10), expanded_schaffer_f6, z10),
        ("CEC09", "Happy Cat", box(-100, 100, 10), happy_cat, z10),
        ("CEC10", "Ackley", box(-100, 100, 10), cec_ackley, z10),
    ]
    return [
        BenchmarkFn(fid, name, space, _biased(base), cat, BIAS, minimizer, bias=BIAS)
        for fid, name, space, base, minimizer in spec
    ]
