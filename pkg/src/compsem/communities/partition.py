"""Partitions of a graph's nodes and detection parameters."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np


class DomainError(ValueError):
    """Inputs fall outside the domain an operation is defined on."""


@dataclass(frozen=True)
class CDParams:
    seed: int = 0
    resolution: float = 1.0
    max_sweeps: int = 100
    tolerance: float = 1e-9
    trials: int = 3

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError("seed must be a non-negative integer")
        if not self.resolution > 0:
            raise ValueError("resolution must be positive")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be positive")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.tolerance < 0:
            raise ValueError("tolerance must be non-negative")


def canonical_labels(labels: Sequence[int] | np.ndarray) -> np.ndarray:
    """Relabel so community ids follow first appearance: 0, 1, 2, ..."""
    labels = np.asarray(labels)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    return rank[inverse.reshape(-1)]


@dataclass(frozen=True)
class Partition:
    """Total assignment of nodes to dense community ids ``0..N-1``."""

    assignment: Mapping[str, int]

    def __post_init__(self):
        ids = set(self.assignment.values())
        if ids != set(range(len(ids))):
            raise DomainError("community ids must be contiguous from 0")

    @classmethod
    def from_labels(cls, nodes: Sequence[str], labels: Iterable[int]) -> "Partition":
        """Build from per-node labels; ids are renumbered by first appearance in sorted node order."""
        pairs = sorted(zip(nodes, labels))
        canon = canonical_labels([lab for _, lab in pairs]) if pairs else []
        return cls({n: int(c) for (n, _), c in zip(pairs, canon)})

    @classmethod
    def from_communities(cls, communities: Iterable[Iterable[str]]) -> "Partition":
        nodes, labels = [], []
        for i, members in enumerate(communities):
            for n in members:
                nodes.append(n)
                labels.append(i)
        if len(set(nodes)) != len(nodes):
            raise DomainError("a node appears in more than one community")
        return cls.from_labels(nodes, labels)

    @classmethod
    def singletons(cls, nodes: Iterable[str]) -> "Partition":
        return cls({n: i for i, n in enumerate(sorted(nodes))})

    @property
    def nodes(self) -> frozenset[str]:
        return frozenset(self.assignment)

    @property
    def n_communities(self) -> int:
        return len(set(self.assignment.values()))

    def communities(self) -> list[list[str]]:
        out: list[list[str]] = [[] for _ in range(self.n_communities)]
        for n in sorted(self.assignment):
            out[self.assignment[n]].append(n)
        return out

    def sizes(self) -> list[int]:
        return [len(c) for c in self.communities()]

    def check_covers(self, nodes: Iterable[str]) -> None:
        nodes = frozenset(nodes)
        if nodes != self.nodes:
            missing = sorted(nodes - self.nodes)[:5]
            extra = sorted(self.nodes - nodes)[:5]
            raise DomainError(f"partition does not cover the graph (missing {missing}, extra {extra})")
