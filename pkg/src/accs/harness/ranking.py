"""Per-function ranking of algorithms by mean final value."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from ..benchmarks import UnsupportedFunctionError, get_function
from .stats import MissingDataError, SummaryTable

__all__ = ["RankTable", "competition_ranks", "rank_algorithms"]


def competition_ranks(values: dict) -> dict:
    """Ascending "1224" ranks; equal values share the better rank, NaN ranks last."""
    def key(v):
        return (1, 0.0) if math.isnan(v) else (0, v)

    ordered = sorted(values.items(), key=lambda kv: key(kv[1]))
    ranks, prev, prev_rank = {}, None, 0
    for pos, (name, v) in enumerate(ordered, start=1):
        k = key(v)
        rank = prev_rank if k == prev else pos
        ranks[name] = rank
        prev, prev_rank = k, rank
    return ranks


def _category(function_id):
    try:
        return get_function(function_id).category
    except UnsupportedFunctionError:
        return "other"


@dataclass
class RankTable:
    functions: list
    algorithms: list
    ranks: dict  # function -> {algorithm: rank}
    categories: dict = field(default_factory=dict)  # category -> [function ids]

    def ordering(self, function) -> list[list[str]]:
        """Algorithms grouped by shared rank, best first."""
        groups: dict = {}
        for a, r in sorted(self.ranks[function].items(), key=lambda kv: (kv[1], self.algorithms.index(kv[0]))):
            groups.setdefault(r, []).append(a)
        return [groups[r] for r in sorted(groups)]

    def flat_order(self, function) -> list[str]:
        return [a for group in self.ordering(function) for a in group]

    def rank_sum(self, algorithm, functions: Optional[list] = None) -> int:
        fs = self.functions if functions is None else functions
        return sum(self.ranks[f][algorithm] for f in fs)

    def average_rank(self, algorithm, functions: Optional[list] = None) -> float:
        fs = self.functions if functions is None else functions
        return self.rank_sum(algorithm, fs) / len(fs)

    def category_average(self, algorithm, category) -> float:
        return self.average_rank(algorithm, self.categories[category])

    def render(self) -> str:
        """Text table: one row per function with algorithms in rank order."""
        n = len(self.algorithms)
        head = ["F"] + [f"#{k}" for k in range(1, n + 1)] + ["ranks"]
        lines = ["\t".join(head)]
        for f in self.functions:
            slots = [""] * n
            for group in self.ordering(f):
                slots[self.ranks[f][group[0]] - 1] = ", ".join(group)
            ranks = " ".join(f"{a}={self.ranks[f][a]}" for a in self.algorithms)
            lines.append("\t".join([f] + slots + [ranks]))
        lines.append("")
        for a in self.algorithms:
            total = self.rank_sum(a)
            parts = [f"{a}: total {total}, overall {total}/{len(self.functions)}={self.average_rank(a):.3f}"]
            for cat, fs in self.categories.items():
                parts.append(f"{cat} {self.rank_sum(a, fs)}/{len(fs)}={self.average_rank(a, fs):.3f}")
            lines.append("; ".join(parts))
        return "\n".join(lines) + "\n"


def rank_algorithms(summary: SummaryTable, functions: Optional[list] = None, algorithms: Optional[list] = None) -> RankTable:
    """Rank algorithms on every function by ascending mean (minimization)."""
    functions = list(functions or summary.functions)
    algorithms = list(algorithms or summary.algorithms)
    if not functions or not algorithms:
        raise MissingDataError("nothing to rank")
    ranks = {}
    for f in functions:
        means = {}
        for a in algorithms:
            if (f, a) not in summary:
                raise MissingDataError(f"missing cell ({f}, {a})")
            means[a] = summary[f, a].mean
        ranks[f] = competition_ranks(means)
    categories: dict = {}
    for f in functions:
        categories.setdefault(_category(f), []).append(f)
    return RankTable(functions, algorithms, ranks, categories)
