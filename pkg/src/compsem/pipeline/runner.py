"""Corpus driver: analyze every project, aggregate, write outputs."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from pathlib import Path

from ..lexsem import WordVectorTable, load_word_vectors
from .aggregate import AggregateReport, aggregate
from .analyze import ProjectResult, analyze_project
from .config import RunConfig
from .outputs import emit_outputs

log = logging.getLogger(__name__)


@dataclass
class RunResult:
    results: list[ProjectResult]
    aggregate: AggregateReport
    written: list[Path]

    @property
    def failures(self) -> list[ProjectResult]:
        return [r for r in self.results if r.failure is not None]


def _analyze_safely(cfg: RunConfig, table: WordVectorTable | None, project: Path) -> ProjectResult:
    try:
        return analyze_project(cfg, project, table)
    except Exception as exc:  # one broken project must not sink the corpus
        log.exception("project %s failed", project)
        res = ProjectResult(Path(project).resolve().name)
        res.failure = f"internal_error: {type(exc).__name__}: {exc}"
        return res


def run_corpus(cfg: RunConfig, write: bool = True) -> RunResult:
    table = load_word_vectors(cfg.vectors) if "word-vector" in cfg.schemes else None
    work = partial(_analyze_safely, cfg, table)
    if cfg.workers > 1 and len(cfg.projects) > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = list(pool.map(work, cfg.projects))
    else:
        results = [work(p) for p in cfg.projects]

    failures = [{"project_id": r.project_id, "reason": r.failure} for r in results if r.failure is not None]
    reports = [rep for r in results for rep in r.reports]
    agg = aggregate(reports, list(cfg.algorithms), list(cfg.schemes), failures)
    written = emit_outputs(results, agg, cfg) if write else []
    return RunResult(results, agg, written)
