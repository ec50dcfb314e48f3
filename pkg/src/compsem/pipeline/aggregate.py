"""Cross-project comparison of algorithms (win counts per metric and scheme)."""

from __future__ import annotations

import statistics
from collections import defaultdict
from dataclasses import asdict, dataclass, field
from typing import Iterable, Mapping

from ..semmetrics import MetricsReport

# metric field -> True when larger is better
METRICS = {
    "coh": True,
    "sep": False,
    "silhouette": True,
    "dep_sim_r": False,  # the more negative correlation wins
}
METRIC_LABELS = {
    "coh": "Cohesion",
    "sep": "Separation",
    "silhouette": "Silhouette",
    "dep_sim_r": "Dep-Sim Corr",
}
TIE_TOLERANCE = 1e-12


@dataclass
class WinCell:
    metric: str
    scheme: str
    wins: dict[str, int]
    ties: int = 0
    n: int = 0

    @property
    def empty(self) -> bool:
        return self.n == 0


@dataclass
class CohesionOverSeparation:
    algorithm: str
    scheme: str
    count: int
    n: int

    @property
    def percent(self) -> float | None:
        return 100.0 * self.count / self.n if self.n else None


@dataclass
class AggregateReport:
    algorithms: list[str]
    schemes: list[str]
    n_projects: int
    wins: list[WinCell] = field(default_factory=list)
    cohesion_gt_separation: list[CohesionOverSeparation] = field(default_factory=list)
    community_stats: dict[str, dict[str, dict[str, float]]] = field(default_factory=dict)
    failures: list[dict[str, str]] = field(default_factory=list)

    def cell(self, metric: str, scheme: str) -> WinCell:
        for c in self.wins:
            if c.metric == metric and c.scheme == scheme:
                return c
        raise KeyError((metric, scheme))

    def coh_gt_sep(self, algorithm: str, scheme: str) -> CohesionOverSeparation:
        for c in self.cohesion_gt_separation:
            if c.algorithm == algorithm and c.scheme == scheme:
                return c
        raise KeyError((algorithm, scheme))

    def to_dict(self) -> dict:
        out = asdict(self)
        for c, raw in zip(self.cohesion_gt_separation, out["cohesion_gt_separation"]):
            raw["percent"] = c.percent
        return out

    @classmethod
    def from_dict(cls, data: Mapping) -> "AggregateReport":
        data = dict(data)
        data["wins"] = [WinCell(**c) for c in data.get("wins", [])]
        data["cohesion_gt_separation"] = [
            CohesionOverSeparation(**{k: v for k, v in c.items() if k != "percent"})
            for c in data.get("cohesion_gt_separation", [])
        ]
        return cls(**data)


def _summary(values: list[float]) -> dict[str, float]:
    if not values:
        return {"n": 0}
    return {
        "n": len(values),
        "min": min(values),
        "median": statistics.median(values),
        "mean": statistics.fmean(values),
        "max": max(values),
    }


def aggregate(reports: Iterable[MetricsReport], algorithms: list[str] | None = None,
              schemes: list[str] | None = None, failures: list[dict[str, str]] | None = None) -> AggregateReport:
    """Count, per metric and scheme, the projects on which each algorithm is strictly best."""
    reports = list(reports)
    algorithms = algorithms or sorted({r.algorithm for r in reports})
    schemes = schemes or sorted({r.scheme for r in reports})
    index: dict[tuple[str, str], dict[str, MetricsReport]] = defaultdict(dict)
    for r in reports:
        index[(r.project_id, r.scheme)][r.algorithm] = r
    projects = sorted({r.project_id for r in reports})

    out = AggregateReport(list(algorithms), list(schemes), len(projects), failures=list(failures or []))
    for metric, larger_better in METRICS.items():
        for scheme in schemes:
            cell = WinCell(metric, scheme, dict.fromkeys(algorithms, 0))
            for pid in projects:
                by_algo = index.get((pid, scheme), {})
                values = {a: getattr(by_algo[a], metric) for a in algorithms if a in by_algo}
                if len(values) != len(algorithms) or any(v is None for v in values.values()):
                    continue
                cell.n += 1
                best = max(values.values()) if larger_better else min(values.values())
                leaders = [a for a, v in values.items() if abs(v - best) <= TIE_TOLERANCE]
                if len(leaders) == 1:
                    cell.wins[leaders[0]] += 1
                else:
                    cell.ties += 1
            out.wins.append(cell)

    for scheme in schemes:
        for algorithm in algorithms:
            flags = [
                index[(pid, scheme)][algorithm].cohesion_exceeds_separation()
                for pid in projects
                if algorithm in index.get((pid, scheme), {})
            ]
            flags = [f for f in flags if f is not None]
            out.cohesion_gt_separation.append(CohesionOverSeparation(algorithm, scheme, sum(flags), len(flags)))

    for algorithm in algorithms:
        counts, sizes = [], []
        for pid in projects:
            first = next((index[(pid, s)][algorithm] for s in schemes
                          if algorithm in index.get((pid, s), {}) and index[(pid, s)][algorithm].error is None), None)
            if first is None:
                continue
            counts.append(first.n_communities)
            sizes.extend(first.community_sizes)
        out.community_stats[algorithm] = {"count": _summary(counts), "size": _summary(sizes)}
    return out


def format_table(agg: AggregateReport) -> str:
    """Aligned plain-text table: metrics by rows, scheme x algorithm by columns.

    The best algorithm of each cell group carries a ``*``.
    """
    header1 = ["Metric"]
    header2 = [""]
    for scheme in agg.schemes:
        for i, algorithm in enumerate(agg.algorithms):
            header1.append(scheme if i == 0 else "")
            header2.append(algorithm)
    header1.append("")
    header2.append("ties/n")
    rows = [header1, header2]

    def mark(values: dict[str, int | float]) -> dict[str, str]:
        top = max(values.values()) if values else None
        leaders = [a for a, v in values.items() if v == top]
        return {a: (f"*{v}" if len(leaders) == 1 and a in leaders and top else str(v)) for a, v in values.items()}

    for metric, label in METRIC_LABELS.items():
        row = [label]
        extra = []
        for scheme in agg.schemes:
            cell = agg.cell(metric, scheme)
            if cell.empty:
                row.extend(["-"] * len(agg.algorithms))
            else:
                marked = mark(cell.wins)
                row.extend(marked[a] for a in agg.algorithms)
            extra.append(f"{cell.ties}/{cell.n}")
        row.append(" ".join(extra))
        rows.append(row)

    row = ["Cohesion > Separation (%)"]
    for scheme in agg.schemes:
        cells = {a: agg.coh_gt_sep(a, scheme) for a in agg.algorithms}
        marked = mark({a: c.count for a, c in cells.items()})
        for a in agg.algorithms:
            c = cells[a]
            row.append("-" if c.n == 0 else f"{marked[a]} ({c.percent:.0f}%)")
    row.append("")
    rows.append(row)

    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip() for r in rows]
    lines.insert(2, "-" * max(len(line) for line in lines))
    summary = [f"projects: {agg.n_projects}, failures: {len(agg.failures)}"]
    for f in agg.failures:
        summary.append(f"  failed {f['project_id']}: {f['reason']}")
    return "\n".join(lines + [""] + summary) + "\n"
