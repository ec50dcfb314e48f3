"""Per-project analysis: graph, communities, embeddings, metrics."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path

from ..communities import ALGORITHMS, DomainError, Partition, map_equation, modularity
from ..depgraph.graph import DependencyGraph, UndirectedGraph, symmetrize
from ..depgraph.java import EmptyProjectError, ProjectSources, extract_project
from ..lexsem import (
    AlignmentError,
    EmbeddingMatrix,
    TokenDocument,
    VectorFileError,
    WordVectorTable,
    build_tfidf,
    default_keywords,
    default_stoplist,
    embed_documents,
    identifier_tokens,
    import_embeddings,
    load_term_list,
    name_tokens,
)
from ..semmetrics import MetricsReport, evaluate
from .config import RunConfig, project_id

log = logging.getLogger(__name__)


@dataclass
class ProjectResult:
    project_id: str
    reports: list[MetricsReport] = field(default_factory=list)
    graph: DependencyGraph | None = None
    partitions: dict[str, Partition] = field(default_factory=dict)
    qualities: dict[str, float | None] = field(default_factory=dict)
    embeddings: dict[str, EmbeddingMatrix] = field(default_factory=dict)
    names: list[TokenDocument] = field(default_factory=list)
    identifiers: list[TokenDocument] = field(default_factory=list)
    failure: str | None = None


def _quality(algorithm: str, g: UndirectedGraph, p: Partition, resolution: float) -> float | None:
    try:
        if algorithm == "leiden":
            return modularity(g, p, resolution)
        active = [n for n in g.sorted_nodes() if n not in set(g.isolated_nodes())]
        sub = g.subgraph(active)
        return map_equation(sub, Partition.from_labels(active, [p.assignment[n] for n in active]))
    except DomainError:
        return None


class _Lexicon:
    def __init__(self, cfg: RunConfig):
        self.keywords = load_term_list(cfg.keywords) if cfg.keywords else default_keywords()
        self.stoplist = load_term_list(cfg.stoplist) if cfg.stoplist else default_stoplist()


def _embed(scheme: str, cfg: RunConfig, pid: str, sources: ProjectSources, lex: _Lexicon,
           table: WordVectorTable | None) -> EmbeddingMatrix:
    units = sources.units
    nodes = list(units)
    if scheme == "tfidf":
        docs = [identifier_tokens(units[n].raw_text, lex.keywords, lex.stoplist, True, node=n) for n in nodes]
        return build_tfidf(docs, cfg.vocab_cap)
    if scheme == "word-vector":
        docs = [identifier_tokens(units[n].raw_text, lex.keywords, lex.stoplist, False, node=n) for n in nodes]
        return embed_documents(docs, table)
    path = Path(cfg.embeddings_dir) / pid / f"{scheme}.vec"
    return import_embeddings(path, nodes, scheme=scheme)


def analyze_project(cfg: RunConfig, project: str | Path, table: WordVectorTable | None = None) -> ProjectResult:
    """Run every configured algorithm x scheme on one project.

    Project-level problems (unreadable or empty tree) set ``failure``;
    problems confined to one scheme or algorithm land in the report's
    ``undefined``/``error`` fields.  Nothing here raises for bad input data.
    """
    pid = project_id(Path(project))
    result = ProjectResult(pid)
    try:
        sources = extract_project(project)
    except EmptyProjectError:
        result.failure = "empty_project"
        return result
    except OSError as exc:
        result.failure = f"unreadable_project: {exc}"
        return result

    result.graph = sources.graph
    graph = symmetrize(sources.graph)
    cd_graph = graph.unweighted() if cfg.unweighted else graph
    lex = _Lexicon(cfg)
    result.names = [name_tokens(n, lex.keywords, lex.stoplist) for n in sources.units]
    result.identifiers = [
        identifier_tokens(u.raw_text, lex.keywords, lex.stoplist, False, node=n) for n, u in sources.units.items()
    ]

    errors: dict[str, str] = {}
    for algorithm in cfg.algorithms:
        try:
            part = ALGORITHMS[algorithm](cd_graph, cfg.params)
        except DomainError as exc:
            errors[algorithm] = f"detection_failed: {exc}"
            continue
        result.partitions[algorithm] = part
        result.qualities[algorithm] = _quality(algorithm, cd_graph, part, cfg.params.resolution)

    for scheme in cfg.schemes:
        try:
            result.embeddings[scheme] = _embed(scheme, cfg, pid, sources, lex, table)
        except FileNotFoundError as exc:
            errors[scheme] = f"embedding_unavailable: {exc.filename}"
        except (AlignmentError, VectorFileError, ValueError) as exc:
            errors[scheme] = f"embedding_failed: {exc}"

    for algorithm in cfg.algorithms:
        for scheme in cfg.schemes:
            if algorithm in errors or scheme in errors:
                report = MetricsReport(pid, algorithm, scheme, n_nodes=len(graph.nodes), n_edges=len(graph.edges))
                report.error = errors.get(algorithm) or errors.get(scheme)
                result.reports.append(report)
                continue
            result.reports.append(evaluate(
                pid, algorithm, graph, result.partitions[algorithm], result.embeddings[scheme],
                cfg.min_community_size, cfg.unweighted, result.qualities[algorithm],
            ))
    return result
