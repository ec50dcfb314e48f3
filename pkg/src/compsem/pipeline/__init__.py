"""Corpus orchestration: analysis, aggregation and report files."""

from .aggregate import AggregateReport, aggregate, format_table
from .analyze import ProjectResult, analyze_project
from .config import ConfigError, RunConfig, read_manifest
from .outputs import emit_outputs, read_aggregate, read_partition, read_report
from .runner import RunResult, run_corpus

__all__ = [
    "AggregateReport",
    "ConfigError",
    "ProjectResult",
    "RunConfig",
    "RunResult",
    "aggregate",
    "analyze_project",
    "emit_outputs",
    "format_table",
    "read_aggregate",
    "read_manifest",
    "read_partition",
    "read_report",
    "run_corpus",
]
