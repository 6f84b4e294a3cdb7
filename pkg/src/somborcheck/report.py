"""Row shaping, scan aggregation, and CSV/JSON emission for the CLI.

Numbers are serialized with ``repr`` in both CSV and JSON (shortest
round-trip form), so the two emissions of one scan carry identical numeric
values and diff cleanly.
"""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass
from typing import Mapping, Sequence, TextIO

from .bounds import BoundReport, DEFAULT_TOL
from .enumeration import HuntHit
from .indices import IndexSet

__all__ = [
    "INDICES_FIELDS",
    "BOUND_FIELDS",
    "HUNT_FIELDS",
    "indices_row",
    "bound_row",
    "hunt_row",
    "PerBoundStats",
    "ScanSummary",
    "ScanAccumulator",
    "write_csv",
    "dump_json",
]

INDICES_FIELDS = (
    "source", "line", "n", "m", "delta", "Delta",
    "so", "so_red", "so_ave", "forgotten", "ag", "ga", "sdd",
)

BOUND_FIELDS = (
    "source", "line", "bound", "mode", "applicable", "reason",
    "lower", "upper", "target", "slack_lower", "slack_upper",
    "rel_slack_lower", "rel_slack_upper", "holds", "strictness",
    "best_case_lower",
)

HUNT_FIELDS = (
    "family", "params", "certificate", "bound", "mode",
    "lower", "upper", "target", "slack_lower", "slack_upper", "holds",
)


def indices_row(source: str, line: int, s: IndexSet) -> dict:
    row = {"source": source, "line": line}
    row.update(asdict(s))
    return row


def bound_row(source: str, line: int, r: BoundReport) -> dict:
    return {
        "source": source,
        "line": line,
        "bound": r.bound_id,
        "mode": r.mode,
        "applicable": r.applicable,
        "reason": r.reason,
        "lower": r.lower,
        "upper": r.upper,
        "target": r.target,
        "slack_lower": r.slack_lower,
        "slack_upper": r.slack_upper,
        "rel_slack_lower": r.rel_slack_lower,
        "rel_slack_upper": r.rel_slack_upper,
        "holds": r.holds,
        "strictness": r.strictness,
        "best_case_lower": r.best_case_lower,
    }


def hunt_row(hit: HuntHit) -> dict:
    r = hit.report
    return {
        "family": hit.family,
        "params": ",".join(f"{k}={v}" for k, v in hit.params),
        "certificate": hit.certificate,
        "bound": r.bound_id,
        "mode": r.mode,
        "lower": r.lower,
        "upper": r.upper,
        "target": r.target,
        "slack_lower": r.slack_lower,
        "slack_upper": r.slack_upper,
        "holds": r.holds,
    }


# ---------------------------------------------------------------------------
# Scan aggregation


@dataclass(frozen=True)
class PerBoundStats:
    evaluated: int
    violations: int
    equality_cases: int
    min_rel_slack: float | None
    mean_rel_slack: float | None


@dataclass(frozen=True)
class ScanSummary:
    graphs_scanned: int
    reports: int
    violations: int
    per_bound: dict[str, PerBoundStats]
    tightest_bound_histogram: dict[str, int]


@dataclass
class _Agg:
    evaluated: int = 0
    violations: int = 0
    equality_cases: int = 0
    min_rel: float | None = None
    rel_sum: float = 0.0
    rel_count: int = 0


class ScanAccumulator:
    """Streams per-graph report groups into a ScanSummary.

    Reports within one group must be in ascending bound-id order (as
    ``evaluate_all`` emits them); ties for the tightest lower bound then
    resolve to the lowest id. The tightest-bound metric uses the relative
    slack of lower bounds only, falling back to absolute slack when the
    target is zero, so every scanned graph lands in exactly one bucket.
    """

    def __init__(self, tol: float = DEFAULT_TOL):
        self.tol = tol
        self.graphs_scanned = 0
        self.reports = 0
        self.violations = 0
        self._bounds: dict[str, _Agg] = {}
        self._histogram: dict[str, int] = {}

    def add_graph(self, reports: Sequence[BoundReport]) -> None:
        self.graphs_scanned += 1
        best_id = None
        best_metric = None
        for r in reports:
            self.reports += 1
            agg = self._bounds.setdefault(r.bound_id, _Agg())
            if not r.applicable:
                continue
            agg.evaluated += 1
            if not r.holds:
                agg.violations += 1
                self.violations += 1
            tol_eff = self.tol * max(1.0, abs(r.target))
            if any(
                s is not None and abs(s) <= tol_eff
                for s in (r.slack_lower, r.slack_upper)
            ):
                agg.equality_cases += 1
            rels = [x for x in (r.rel_slack_lower, r.rel_slack_upper) if x is not None]
            if rels:
                tight = min(rels)
                agg.min_rel = tight if agg.min_rel is None else min(agg.min_rel, tight)
                agg.rel_sum += tight
                agg.rel_count += 1
            if r.lower is not None:
                metric = (
                    r.rel_slack_lower
                    if r.rel_slack_lower is not None
                    else abs(r.slack_lower)
                )
                if best_metric is None or metric < best_metric:
                    best_metric = metric
                    best_id = r.bound_id
        if best_id is not None:
            self._histogram[best_id] = self._histogram.get(best_id, 0) + 1

    def summary(self) -> ScanSummary:
        per_bound = {
            bid: PerBoundStats(
                evaluated=a.evaluated,
                violations=a.violations,
                equality_cases=a.equality_cases,
                min_rel_slack=a.min_rel,
                mean_rel_slack=(a.rel_sum / a.rel_count) if a.rel_count else None,
            )
            for bid, a in sorted(self._bounds.items(), key=lambda kv: _bound_order(kv[0]))
        }
        hist = dict(sorted(self._histogram.items(), key=lambda kv: _bound_order(kv[0])))
        return ScanSummary(
            graphs_scanned=self.graphs_scanned,
            reports=self.reports,
            violations=self.violations,
            per_bound=per_bound,
            tightest_bound_histogram=hist,
        )


def _bound_order(bound_id: str) -> int:
    try:
        return int(bound_id.lstrip("Bb"))
    except ValueError:
        return 10_000


# ---------------------------------------------------------------------------
# Emission


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    return value


def write_csv(rows: Sequence[Mapping], fields: Sequence[str], stream: TextIO) -> None:
    writer = csv.DictWriter(stream, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(row.get(k)) for k in fields})


def dump_json(obj, stream: TextIO) -> None:
    json.dump(obj, stream, indent=2, default=_jsonable)
    stream.write("\n")


def _jsonable(value):
    if isinstance(value, (ScanSummary, PerBoundStats)):
        return asdict(value)
    raise TypeError(f"not JSON-serializable: {type(value).__name__}")
