"""Quality functions evaluated directly from their definitions."""

from __future__ import annotations

import math
from collections import defaultdict

from ..depgraph.graph import UndirectedGraph
from .partition import DomainError, Partition


class UndefinedQualityError(DomainError):
    pass


def modularity(g: UndirectedGraph, p: Partition, resolution: float = 1.0) -> float:
    """Newman modularity ``sum_c e_c/m - resolution * (d_c / 2m)^2``."""
    p.check_covers(g.nodes)
    m = g.total_weight
    if m <= 0:
        raise UndefinedQualityError("modularity is undefined for a graph without edges")
    inner = defaultdict(float)
    degree = defaultdict(float)
    for (a, b), w in g.edges.items():
        ca, cb = p.assignment[a], p.assignment[b]
        degree[ca] += w
        degree[cb] += w
        if ca == cb:
            inner[ca] += w
    # fsum keeps the value independent of iteration order
    return math.fsum(inner[c] / m - resolution * (degree[c] / (2 * m)) ** 2 for c in degree)


def _plogp(x: float) -> float:
    return x * math.log2(x) if x > 0 else 0.0


def map_equation(g: UndirectedGraph, p: Partition) -> float:
    """Two-level map equation in bits for an undirected random walk without teleportation."""
    p.check_covers(g.nodes)
    strength = g.strength()
    isolated = sorted(n for n, s in strength.items() if s == 0)
    if isolated:
        raise DomainError(
            f"map equation needs every node to carry flow; strip isolated nodes first: {isolated[:5]}"
        )
    two_m = 2 * g.total_weight
    exit_flow = defaultdict(float)
    for (a, b), w in g.edges.items():
        ca, cb = p.assignment[a], p.assignment[b]
        if ca != cb:
            exit_flow[ca] += w / two_m
            exit_flow[cb] += w / two_m
    mod_flow = defaultdict(float)
    for n, s in strength.items():
        mod_flow[p.assignment[n]] += s / two_m
    total_exit = math.fsum(exit_flow.values())
    return math.fsum([
        _plogp(total_exit),
        -2 * math.fsum(_plogp(q) for q in exit_flow.values()),
        -math.fsum(_plogp(s / two_m) for s in strength.values()),
        math.fsum(_plogp(exit_flow[c] + mod_flow[c]) for c in mod_flow),
    ])
