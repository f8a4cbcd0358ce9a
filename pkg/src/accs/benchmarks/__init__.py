"""Benchmark objectives: classical F1-F19 and the CEC-2019 base functions."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from ..core import AccsError
from .base import BenchmarkFn, OptimumRecord, evaluate
from .cec2019 import cec2019_suite
from .classical import classical_suite, penalty_u

__all__ = [
    "BenchmarkFn",
    "OptimumRecord",
    "UnsupportedFunctionError",
    "catalog",
    "cec2019_suite",
    "classical_suite",
    "evaluate",
    "get_function",
    "known_optimum",
    "penalty_u",
    "resolve_functions",
]

CATEGORY_GROUPS = {
    "classical": lambda f: f.id.startswith("F"),
    "cec2019": lambda f: f.id.startswith("CEC"),
    "unimodal": lambda f: f.category == "unimodal",
    "multimodal": lambda f: f.category == "multimodal",
    "fixed": lambda f: f.category == "fixed-dimension",
}


class UnsupportedFunctionError(AccsError, KeyError):
    pass


@lru_cache(maxsize=None)
def _registry() -> dict[str, BenchmarkFn]:
    return {f.id: f for f in classical_suite() + cec2019_suite()}


def get_function(fid: str) -> BenchmarkFn:
    reg = _registry()
    key = fid.upper()
    if key not in reg:
        raise UnsupportedFunctionError(f"unknown function id {fid!r}")
    return reg[key]


def resolve_functions(spec) -> list[BenchmarkFn]:
    """Expand ``all``, a group name (``classical``, ``cec2019``, ...) or a comma list of ids."""
    if isinstance(spec, str):
        spec = [s.strip() for s in spec.split(",") if s.strip()]
    reg = _registry()
    out = []
    for item in spec:
        name = item.lower()
        if name == "all":
            out.extend(reg.values())
        elif name in CATEGORY_GROUPS:
            out.extend(f for f in reg.values() if CATEGORY_GROUPS[name](f))
        else:
            out.append(get_function(item))
    seen, unique = set(), []
    for f in out:
        if f.id not in seen:
            seen.add(f.id)
            unique.append(f)
    return unique


def known_optimum(fid: str) -> OptimumRecord:
    """Literature minimizer with the tabulated minimum value of a classical function."""
    fn = get_function(fid)
    if not fn.id.startswith("F"):
        raise UnsupportedFunctionError(f"{fn.id}: no authoritative optimum without the official shift data")
    return OptimumRecord(fn.id, np.array(fn.minimizer, dtype=float), float(fn.fmin), fn.tolerance)


def catalog() -> list[dict]:
    return [f.catalog_row() for f in _registry().values()]
