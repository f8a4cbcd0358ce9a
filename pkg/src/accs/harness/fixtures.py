"""Literature reference tables and band-based comparison against them."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

from ..core import ConfigurationError
from .io import format_float
from .stats import Cell, SummaryTable

__all__ = [
    "Band",
    "CompareReport",
    "CompareRow",
    "compare_to_fixture",
    "default_policy",
    "load_fixture",
    "load_policy",
    "printed_accs_ranks",
]

_BUILTIN = {
    "classical": "literature_classical.csv",
    "cec2019": "literature_cec2019.csv",
}


def _data_text(name: str) -> str:
    return resources.files("accs").joinpath("data", name).read_text(encoding="utf-8")


def load_fixture(source: str = "classical", runs: int = 30) -> SummaryTable:
    """Load a ``function,algorithm,mean,std`` table (built-in name or path)."""
    text = _data_text(_BUILTIN[source]) if source in _BUILTIN else Path(source).read_text(encoding="utf-8")
    cells = {}
    reader = csv.DictReader(io.StringIO(text))
    if not {"function", "algorithm", "mean"} <= set(reader.fieldnames or ()):
        raise ConfigurationError(f"fixture {source!r} lacks function/algorithm/mean columns")
    for r in reader:
        std = float(r.get("std") or "nan")
        cells[r["function"], r["algorithm"]] = Cell(float(r["mean"]), std, runs)
    return SummaryTable(cells)


def printed_accs_ranks() -> dict:
    reader = csv.DictReader(io.StringIO(_data_text("printed_accs_ranks.csv")))
    return {r["function"]: int(r["rank"]) for r in reader}


@dataclass(frozen=True)
class Band:
    """Acceptance band: ``max`` upper bound, ``range`` closed interval, or ``abs``/``rel`` tolerance around the fixture."""

    kind: str
    value: object

    @classmethod
    def from_spec(cls, spec: dict) -> Band:
        if len(spec) != 1:
            raise ConfigurationError(f"band needs exactly one of max/range/abs/rel, got {spec}")
        (kind, value), = spec.items()
        if kind not in ("max", "range", "abs", "rel"):
            raise ConfigurationError(f"unknown band kind {kind!r}")
        if kind == "range":
            lo, hi = value
            value = (float(lo), float(hi))
        else:
            value = float(value)
        return cls(kind, value)

    def contains(self, measured: float, reference: float) -> bool:
        if math.isnan(measured):
            return False
        if self.kind == "max":
            return measured <= self.value
        if self.kind == "range":
            lo, hi = self.value
            return lo <= measured <= hi
        if self.kind == "abs":
            return abs(measured - reference) <= self.value
        return abs(measured - reference) <= self.value * abs(reference)

    def describe(self) -> str:
        if self.kind == "max":
            return f"<= {self.value:g}"
        if self.kind == "range":
            return f"[{self.value[0]:g}, {self.value[1]:g}]"
        return f"{self.kind} {self.value:g}"


@dataclass(frozen=True)
class CompareRow:
    function: str
    measured: float
    fixture: float
    band: Band
    passed: bool
    required: bool = False

    @property
    def delta(self) -> float:
        return self.measured - self.fixture


@dataclass
class CompareReport:
    rows: list

    @property
    def passed(self) -> bool:
        """All bands met."""
        return all(r.passed for r in self.rows)

    @property
    def required_passed(self) -> bool:
        return all(r.passed for r in self.rows if r.required)

    def failures(self) -> list:
        return [r for r in self.rows if not r.passed]

    def row(self, function) -> CompareRow:
        for r in self.rows:
            if r.function == function:
                return r
        raise KeyError(function)

    def render(self) -> str:
        lines = ["function,measured,fixture,delta,band,required,status"]
        for r in self.rows:
            lines.append(
                ",".join(
                    [r.function, format_float(r.measured), format_float(r.fixture), format_float(r.delta),
                     r.band.describe(), "yes" if r.required else "no", "PASS" if r.passed else "FAIL"]
                )
            )
        return "\n".join(lines) + "\n"


def load_policy(path: Optional[str] = None) -> dict:
    text = Path(path).read_text(encoding="utf-8") if path else _data_text("acceptance_bands.json")
    policy = json.loads(text)
    policy["bands"] = {f: Band.from_spec(b) for f, b in policy["bands"].items()}
    policy.setdefault("required", [])
    return policy


def default_policy() -> dict:
    return load_policy(None)


def compare_to_fixture(
    summary: SummaryTable,
    fixture: SummaryTable,
    policy: Optional[dict] = None,
    algorithm: Optional[str] = None,
    fixture_algorithm: Optional[str] = None,
) -> CompareReport:
    """Check measured means against bands for each function the policy names.

    Cells missing on either side are skipped; the report is always produced.
    """
    policy = policy or default_policy()
    algorithm = algorithm or policy.get("algorithm", "accs")
    fixture_algorithm = fixture_algorithm or policy.get("fixture_algorithm", algorithm)
    rows = []
    for fid, band in policy["bands"].items():
        if (fid, algorithm) not in summary or (fid, fixture_algorithm) not in fixture:
            continue
        measured = summary[fid, algorithm].mean
        reference = fixture[fid, fixture_algorithm].mean
        rows.append(
            CompareRow(fid, measured, reference, band, band.contains(measured, reference), fid in policy["required"])
        )
    return CompareReport(rows)
