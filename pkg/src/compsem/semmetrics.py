"""Semantic cohesion, separation, silhouette and dependency-similarity correlation.

All similarities are cosine similarities; a zero vector has similarity 0
with everything (including itself) so fully filtered documents never turn
into NaNs.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Mapping

import numpy as np

from .communities.partition import Partition
from .depgraph.graph import UndirectedGraph
from .lexsem.embedding import EmbeddingMatrix

log = logging.getLogger(__name__)

MIN_COMMUNITY_SIZE = 4


class UndefinedMetricError(ValueError):
    """A metric has no value for this input; ``reason`` is a stable code."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class CommunitySet:
    communities: tuple[tuple[int, tuple[str, ...]], ...]
    min_size: int
    retained_fraction: float = 1.0
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        seen: set[str] = set()
        for cid, members in self.communities:
            if len(members) < self.min_size:
                raise ValueError(f"community {cid} is smaller than {self.min_size}")
            if seen.intersection(members):
                raise ValueError("community node lists overlap")
            seen.update(members)

    def __len__(self):
        return len(self.communities)

    @property
    def nodes(self) -> list[str]:
        return [n for _, members in self.communities for n in members]

    @property
    def sizes(self) -> list[int]:
        return [len(m) for _, m in self.communities]


def filter_small(p: Partition, min_size: int = MIN_COMMUNITY_SIZE) -> CommunitySet:
    """Keep only communities with at least ``min_size`` nodes."""
    kept = tuple(
        (cid, tuple(members)) for cid, members in enumerate(p.communities()) if len(members) >= min_size
    )
    total = len(p.assignment)
    retained = sum(len(m) for _, m in kept)
    warnings = ()
    if not kept:
        msg = f"no community has {min_size} or more nodes"
        log.warning(msg)
        warnings = (msg,)
    return CommunitySet(kept, min_size, retained / total if total else 0.0, warnings)


def _unit_rows(x: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    norms = np.linalg.norm(x, axis=1)
    zero = norms == 0
    out = np.zeros_like(x, dtype=float)
    out[~zero] = x[~zero] / norms[~zero, None]
    return out, zero


def cosine_matrix(x: np.ndarray) -> np.ndarray:
    u, _ = _unit_rows(np.asarray(x, dtype=float))
    return np.clip(u @ u.T, -1.0, 1.0)


def _require(cs: CommunitySet, at_least: int, metric: str) -> None:
    if len(cs) < at_least:
        reason = "no_communities" if len(cs) == 0 else "fewer_than_two_communities"
        raise UndefinedMetricError(reason, f"{metric} needs {at_least} or more communities, got {len(cs)}")


@dataclass(frozen=True)
class CohesionResult:
    per_community: tuple[float, ...]
    coh: float
    diagnostics: tuple[str, ...] = ()


def cohesion(cs: CommunitySet, emb: EmbeddingMatrix) -> CohesionResult:
    """Mean pairwise similarity inside each community, then the plain mean over communities."""
    _require(cs, 1, "cohesion")
    values, diagnostics = [], []
    for cid, members in cs.communities:
        x = emb.rows(members)
        sims = cosine_matrix(x)
        zero = ~np.any(x != 0, axis=1)
        if zero.any():
            diagnostics.append(f"community {cid}: {int(zero.sum())} zero vector(s) count as similarity 0")
        iu = np.triu_indices(len(members), k=1)
        # a lone node is trivially cohesive with itself
        values.append(float(sims[iu].mean()) if len(iu[0]) else 1.0)
    return CohesionResult(tuple(values), float(np.mean(values)), tuple(diagnostics))


def centroids(cs: CommunitySet, emb: EmbeddingMatrix) -> np.ndarray:
    return np.array([emb.rows(members).mean(axis=0) for _, members in cs.communities])


def separation(cs: CommunitySet, emb: EmbeddingMatrix) -> float:
    """Mean similarity over all unordered pairs of community centroids."""
    _require(cs, 2, "separation")
    sims = cosine_matrix(centroids(cs, emb))
    iu = np.triu_indices(len(cs), k=1)
    return float(sims[iu].mean())


@dataclass(frozen=True)
class SilhouetteResult:
    per_node: Mapping[str, float]
    mean: float


def silhouette(cs: CommunitySet, emb: EmbeddingMatrix) -> SilhouetteResult:
    """Silhouette coefficient with cosine distance, over the retained nodes only."""
    _require(cs, 2, "silhouette")
    nodes = cs.nodes
    labels = np.concatenate([np.full(len(m), k) for k, (_, m) in enumerate(cs.communities)])
    dist = 1.0 - cosine_matrix(emb.rows(nodes))
    np.fill_diagonal(dist, 0.0)  # a zero vector is not "far" from itself
    k = len(cs)
    # mean distance from every node to every community
    member = np.zeros((len(nodes), k))
    member[np.arange(len(nodes)), labels] = 1.0
    sums = dist @ member
    sizes = member.sum(axis=0)
    own = sizes[labels]
    a = np.where(own > 1, sums[np.arange(len(nodes)), labels] / np.maximum(own - 1, 1), 0.0)
    mean_to = sums / sizes
    mean_to[np.arange(len(nodes)), labels] = np.inf
    b = mean_to.min(axis=1)
    denom = np.maximum(a, b)
    s = np.where(denom > 0, (b - a) / np.where(denom > 0, denom, 1.0), 0.0)
    s[own <= 1] = 0.0
    s = np.clip(s, -1.0, 1.0)
    return SilhouetteResult(dict(zip(nodes, s.tolist())), float(s.mean()))


def inter_community_weights(g: UndirectedGraph, cs: CommunitySet, unweighted: bool = False) -> np.ndarray:
    """Symmetric matrix of total undirected edge weight between retained communities."""
    where = {n: k for k, (_, members) in enumerate(cs.communities) for n in members}
    out = np.zeros((len(cs), len(cs)))
    for (a, b), w in g.edges.items():
        ka, kb = where.get(a), where.get(b)
        if ka is None or kb is None or ka == kb:
            continue
        w = 1.0 if unweighted else float(w)
        out[ka, kb] += w
        out[kb, ka] += w
    return out


def pearson(x: np.ndarray, y: np.ndarray) -> float | None:
    """Pearson's r, or ``None`` when either variable has zero variance."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    dx = x - x.mean()
    dy = y - y.mean()
    sxx = float(dx @ dx)
    syy = float(dy @ dy)
    # relative guard: a constant sample may carry rounding noise around its mean
    if sxx <= 1e-24 * max(1.0, float(x @ x)) or syy <= 1e-24 * max(1.0, float(y @ y)):
        return None
    return float(np.clip((dx @ dy) / np.sqrt(sxx * syy), -1.0, 1.0))


def dep_sim_correlation(g: UndirectedGraph, cs: CommunitySet, emb: EmbeddingMatrix,
                        unweighted: bool = False) -> float | None:
    """Pearson r between inter-community dependency weight and centroid similarity.

    Every unordered community pair enters, including pairs with no edges.
    Returns ``None`` when r is undefined (zero variance on either side).
    """
    _require(cs, 2, "dependency-similarity correlation")
    deps = inter_community_weights(g, cs, unweighted)
    sims = cosine_matrix(centroids(cs, emb))
    iu = np.triu_indices(len(cs), k=1)
    return pearson(deps[iu], sims[iu])


@dataclass
class MetricsReport:
    project_id: str
    algorithm: str
    scheme: str
    n_communities: int = 0
    community_sizes: list[int] = field(default_factory=list)
    cohesion: list[float] = field(default_factory=list)
    coh: float | None = None
    sep: float | None = None
    silhouette: float | None = None
    dep_sim_r: float | None = None
    quality: float | None = None
    n_nodes: int = 0
    n_edges: int = 0
    retained_fraction: float = 0.0
    undefined: dict[str, str] = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Mapping) -> "MetricsReport":
        return cls(**dict(data))

    def cohesion_exceeds_separation(self) -> bool | None:
        if self.coh is None or self.sep is None:
            return None
        return self.coh > self.sep


def evaluate(project_id: str, algorithm: str, graph: UndirectedGraph, partition: Partition,
             emb: EmbeddingMatrix, min_size: int = MIN_COMMUNITY_SIZE, unweighted: bool = False,
             quality: float | None = None) -> MetricsReport:
    """Filter ``partition`` and compute every metric; undefined ones get a reason code."""
    cs = filter_small(partition, min_size)
    report = MetricsReport(
        project_id, algorithm, emb.scheme,
        n_communities=len(cs),
        community_sizes=cs.sizes,
        quality=quality,
        n_nodes=len(graph.nodes),
        n_edges=len(graph.edges),
        retained_fraction=cs.retained_fraction,
        diagnostics=list(cs.warnings),
    )
    emb = emb.restrict(cs.nodes) if len(cs) else emb

    def attempt(name, fn):
        try:
            return fn()
        except UndefinedMetricError as exc:
            report.undefined[name] = exc.reason
            return None

    coh = attempt("coh", lambda: cohesion(cs, emb))
    if coh is not None:
        report.cohesion = list(coh.per_community)
        report.coh = coh.coh
        report.diagnostics.extend(coh.diagnostics)
    report.sep = attempt("sep", lambda: separation(cs, emb))
    sil = attempt("silhouette", lambda: silhouette(cs, emb))
    report.silhouette = None if sil is None else sil.mean
    r = attempt("dep_sim_r", lambda: dep_sim_correlation(graph, cs, emb, unweighted))
    if r is None and "dep_sim_r" not in report.undefined:
        report.undefined["dep_sim_r"] = "zero_variance"
    report.dep_sim_r = r
    return report
