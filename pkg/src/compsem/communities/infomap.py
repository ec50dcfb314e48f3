"""Two-level Infomap: greedy map-equation search with node moves and aggregation."""

from __future__ import annotations

import math

import numpy as np

from ..depgraph.graph import UndirectedGraph
from . import kernels
from ._csr import CSRGraph, relabel
from .partition import CDParams, DomainError, Partition


def _infomap_pass(csr: CSRGraph, labels: np.ndarray, rng: np.random.Generator, params: CDParams) -> np.ndarray:
    graph = csr
    memb = labels.astype(np.int64).copy()
    mapping = np.arange(csr.n, dtype=np.int64)
    while True:
        order = rng.permutation(graph.n).astype(np.int64)
        kernels.move_nodes_mapequation(
            graph.indptr, graph.indices, graph.weights, graph.node_weight, memb, order,
            params.tolerance, params.max_sweeps,
        )
        memb, k = relabel(memb)
        if k == graph.n:
            break
        graph = graph.aggregate(memb, k)
        mapping = memb[mapping]
        memb = np.arange(k, dtype=np.int64)
    return memb[mapping]


def _run(flow: CSRGraph, labels: np.ndarray, rng: np.random.Generator, params: CDParams) -> np.ndarray:
    # repeat until stable so the result is node-move optimal on the original graph
    for _ in range(params.max_sweeps):
        new = relabel(_infomap_pass(flow, labels, rng, params))[0]
        if np.array_equal(new, labels):
            break
        labels = new
    return labels


def _plogp(x: float) -> float:
    return x * math.log2(x) if x > 0 else 0.0


def _codelength(flow: CSRGraph, labels: np.ndarray) -> float:
    agg = flow.aggregate(labels, int(labels.max()) + 1)
    exits = np.asarray(agg.matrix().sum(axis=1)).ravel()
    # fsum so that the trial comparison never hinges on summation order
    return math.fsum([
        _plogp(math.fsum(exits)),
        -2 * math.fsum(map(_plogp, exits.tolist())),
        -math.fsum(map(_plogp, flow.node_weight.tolist())),
        math.fsum(map(_plogp, (exits + agg.node_weight).tolist())),
    ])


def infomap(g: UndirectedGraph, params: CDParams = CDParams()) -> Partition:
    """Partition ``g`` by minimising the map equation.

    Isolated nodes carry no flow; they are left out of the search and
    reported as singleton communities.
    """
    nodes = g.sorted_nodes()
    isolated = set(g.isolated_nodes())
    active = [n for n in nodes if n not in isolated]
    if not active:
        raise DomainError("infomap needs at least one edge; every node is isolated")

    csr = CSRGraph.from_graph(g.subgraph(active), active)
    flow = csr.scaled(1.0 / csr.node_weight.sum())
    start = np.arange(len(active), dtype=np.int64)
    labels, best_len = None, np.inf
    for seq in np.random.SeedSequence(params.seed).spawn(params.trials):
        found = _run(flow, start, np.random.default_rng(seq), params)
        length = _codelength(flow, found)
        if length < best_len - 1e-12:
            labels, best_len = found, length

    all_nodes = active + sorted(isolated)
    all_labels = list(labels) + list(range(len(active), len(active) + len(isolated)))
    return Partition.from_labels(all_nodes, all_labels)
