"""Leiden community detection maximising modularity."""

from __future__ import annotations

import math

import numpy as np

from ..depgraph.graph import UndirectedGraph
from . import kernels
from ._csr import CSRGraph, relabel, split_disconnected
from .partition import CDParams, DomainError, Partition

# Temperature of the randomised merge in the refinement phase.
REFINE_RANDOMNESS = 0.01


def _leiden_pass(csr: CSRGraph, labels: np.ndarray, rng: np.random.Generator, params: CDParams) -> np.ndarray:
    graph = csr
    memb = labels.astype(np.int64).copy()
    mapping = np.arange(csr.n, dtype=np.int64)
    while True:
        order = rng.permutation(graph.n).astype(np.int64)
        kernels.move_nodes_modularity(
            graph.indptr, graph.indices, graph.weights, graph.node_weight, memb, order,
            params.resolution, params.tolerance, params.max_sweeps,
        )
        memb, k = relabel(memb)
        if k == graph.n:
            break
        order = rng.permutation(graph.n).astype(np.int64)
        draws = rng.random(graph.n)
        refined, kr = relabel(kernels.refine_partition(
            graph.indptr, graph.indices, graph.weights, graph.node_weight, memb, order, draws,
            params.resolution, REFINE_RANDOMNESS,
        ))
        if kr == graph.n:
            # refinement merged nothing; aggregate on the moved partition so the level shrinks
            groups, start = memb, np.arange(k, dtype=np.int64)
            kr = k
        else:
            groups = refined
            start = np.zeros(kr, dtype=np.int64)
            start[refined] = memb
        graph = graph.aggregate(groups, kr)
        mapping = groups[mapping]
        memb = start
    return memb[mapping]


def leiden(g: UndirectedGraph, params: CDParams = CDParams()) -> Partition:
    """Partition ``g`` by Leiden; isolated nodes come back as singleton communities."""
    nodes = g.sorted_nodes()
    if not nodes:
        raise DomainError("cannot partition an empty graph")
    csr = CSRGraph.from_graph(g, nodes)
    labels = np.arange(len(nodes), dtype=np.int64)
    if csr.weights.size == 0:
        return Partition.from_labels(nodes, labels)

    best, best_q = None, -np.inf
    for seq in np.random.SeedSequence(params.seed).spawn(params.trials):
        found = _run(csr, labels, np.random.default_rng(seq), params)
        q = _modularity(csr, found, params.resolution)
        if q > best_q + 1e-12:
            best, best_q = found, q
    return Partition.from_labels(nodes, best)


def _run(csr: CSRGraph, labels: np.ndarray, rng: np.random.Generator, params: CDParams) -> np.ndarray:
    # iterate until a pass leaves the partition unchanged: then no single node move helps
    for _ in range(params.max_sweeps):
        new = relabel(_leiden_pass(csr, labels, rng, params))[0]
        if np.array_equal(new, labels):
            break
        labels = new
    return split_disconnected(csr, labels)


def _modularity(csr: CSRGraph, labels: np.ndarray, resolution: float) -> float:
    two_m = csr.node_weight.sum()
    k = labels.max() + 1
    agg = csr.aggregate(labels, k)
    inner = (agg.node_weight - np.asarray(agg.matrix().sum(axis=1)).ravel()) / two_m
    return math.fsum(inner - resolution * (agg.node_weight / two_m) ** 2)
