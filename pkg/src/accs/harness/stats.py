from __future__ import annotations

import csv
import io
import json
import math
import statistics
from dataclasses import asdict, dataclass
from typing import Iterable, Optional

from ..core import AccsError
from .io import RunRow, _rows, format_float

__all__ = ["Cell", "MissingDataError", "SummaryTable", "summarize"]


class MissingDataError(AccsError, LookupError):
    pass


@dataclass(frozen=True)
class Cell:
    mean: float
    std: float
    n: int
    best: float = float("nan")
    worst: float = float("nan")


def _mean_std(values: list[float]) -> tuple[float, float]:
    # statistics works on exact rationals, so constant samples give std exactly 0
    mean = statistics.mean(values)
    if len(values) < 2:
        return mean, float("nan")
    return mean, statistics.stdev(values, mean)


class SummaryTable:
    """Mean/std/best/worst of final bests per ``(function, algorithm)`` cell."""

    def __init__(self, cells: dict, functions: Optional[list] = None, algorithms: Optional[list] = None, finals=None):
        self.cells = dict(cells)
        self.functions = list(functions) if functions else list(dict.fromkeys(f for f, _ in self.cells))
        self.algorithms = list(algorithms) if algorithms else list(dict.fromkeys(a for _, a in self.cells))
        self.finals = finals or {}

    def __getitem__(self, key) -> Cell:
        try:
            return self.cells[key]
        except KeyError:
            raise MissingDataError(f"no data for function {key[0]!r}, algorithm {key[1]!r}") from None

    def __contains__(self, key):
        return key in self.cells

    def __eq__(self, other):
        if not isinstance(other, SummaryTable):
            return NotImplemented
        return self.to_csv() == other.to_csv()

    def mean(self, function, algorithm) -> float:
        return self[function, algorithm].mean

    def subset(self, functions=None, algorithms=None) -> SummaryTable:
        fs = [f for f in self.functions if functions is None or f in functions]
        al = [a for a in self.algorithms if algorithms is None or a in algorithms]
        cells = {(f, a): c for (f, a), c in self.cells.items() if f in fs and a in al}
        return SummaryTable(cells, fs, al)

    def to_rows(self) -> list[dict]:
        rows = []
        for f in self.functions:
            for a in self.algorithms:
                if (f, a) in self.cells:
                    rows.append({"function": f, "algorithm": a, **asdict(self.cells[f, a])})
        return rows

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["function", "algorithm", "mean", "std", "n", "best", "worst"])
        for r in self.to_rows():
            w.writerow(
                [r["function"], r["algorithm"], format_float(r["mean"]), format_float(r["std"]), r["n"],
                 format_float(r["best"]), format_float(r["worst"])]
            )
        return buf.getvalue()

    def to_json(self) -> str:
        def clean(v):
            return None if isinstance(v, float) and math.isnan(v) else v

        rows = [{k: clean(v) for k, v in r.items()} for r in self.to_rows()]
        return json.dumps(rows, indent=2)

    @classmethod
    def from_csv(cls, text: str) -> SummaryTable:
        cells = {}
        for r in csv.DictReader(io.StringIO(text)):
            cells[r["function"], r["algorithm"]] = Cell(
                float(r["mean"]), float(r["std"]), int(r["n"]), float(r["best"]), float(r["worst"])
            )
        return cls(cells)


def summarize(records: Iterable) -> SummaryTable:
    """Aggregate run records (or CSV rows) into a :class:`SummaryTable`.

    The standard deviation uses the ``n - 1`` divisor.
    """
    rows: list[RunRow] = _rows(records)
    if not rows:
        raise MissingDataError("no run records to summarize")
    finals: dict = {}
    for row in rows:
        finals.setdefault((row.function, row.algorithm), []).append(row.final_best)
    cells = {}
    for key, values in finals.items():
        mean, std = _mean_std(values)
        cells[key] = Cell(mean, std, len(values), min(values), max(values))
    return SummaryTable(cells, finals=finals)
