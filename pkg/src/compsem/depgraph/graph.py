"""Directed and undirected class dependency graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping


class GraphError(ValueError):
    """A graph violates one of its structural invariants."""


@dataclass(frozen=True)
class SourceUnit:
    qualified_name: str
    file_path: str
    raw_text: str


@dataclass(frozen=True)
class DependencyGraph:
    """Directed class-use graph; ``edges`` maps ``(source, target)`` to a use count."""

    nodes: frozenset[str]
    edges: Mapping[tuple[str, str], int] = field(default_factory=dict)

    @classmethod
    def build(cls, nodes: Iterable[str], edges: Mapping[tuple[str, str], int] | Iterable = ()):
        if isinstance(edges, Mapping):
            items = edges.items()
        else:
            items = (((s, t), w) for s, t, w in edges)
        g = cls(frozenset(nodes), dict(sorted(items)))
        validate_graph(g)
        return g

    @property
    def total_weight(self) -> int:
        return sum(self.edges.values())

    def sorted_nodes(self) -> list[str]:
        return sorted(self.nodes)


@dataclass(frozen=True)
class UndirectedGraph:
    """Undirected weighted graph; each pair key is stored with the smaller name first."""

    nodes: frozenset[str]
    edges: Mapping[tuple[str, str], float] = field(default_factory=dict)

    @classmethod
    def build(cls, nodes: Iterable[str], edges: Iterable[tuple[str, str, float]] = ()):
        acc: dict[tuple[str, str], float] = {}
        for a, b, w in edges:
            if a == b:
                raise GraphError(f"self-loop on {a!r}")
            key = (a, b) if a < b else (b, a)
            acc[key] = acc.get(key, 0) + w
        g = cls(frozenset(nodes), dict(sorted(acc.items())))
        for (a, b), w in g.edges.items():
            if a not in g.nodes or b not in g.nodes:
                raise GraphError(f"edge ({a}, {b}) has an endpoint outside the node set")
            if w <= 0:
                raise GraphError(f"edge ({a}, {b}) has non-positive weight {w}")
        return g

    @property
    def total_weight(self) -> float:
        return sum(self.edges.values())

    def sorted_nodes(self) -> list[str]:
        return sorted(self.nodes)

    def strength(self) -> dict[str, float]:
        s = dict.fromkeys(sorted(self.nodes), 0)
        for (a, b), w in self.edges.items():
            s[a] += w
            s[b] += w
        return s

    def isolated_nodes(self) -> list[str]:
        return sorted(n for n, s in self.strength().items() if s == 0)

    def subgraph(self, keep: Iterable[str]) -> "UndirectedGraph":
        keep = frozenset(keep)
        return UndirectedGraph(
            keep, {k: w for k, w in self.edges.items() if k[0] in keep and k[1] in keep}
        )

    def unweighted(self) -> "UndirectedGraph":
        return UndirectedGraph(self.nodes, {k: 1 for k in self.edges})


def validate_graph(g: DependencyGraph) -> None:
    """Raise :class:`GraphError` unless ``g`` satisfies the DependencyGraph invariants."""
    for (s, t), w in g.edges.items():
        if s == t:
            raise GraphError(f"self-loop on {s!r}")
        if s not in g.nodes or t not in g.nodes:
            raise GraphError(f"edge {s} -> {t} has an endpoint outside the node set")
        if not isinstance(w, int) or isinstance(w, bool) or w < 1:
            raise GraphError(f"edge {s} -> {t} has invalid weight {w!r}")
    for n in g.nodes:
        if not n:
            raise GraphError("empty node name")


def symmetrize(g: DependencyGraph) -> UndirectedGraph:
    """Fold reciprocal edges into one undirected edge carrying the summed use count."""
    acc: dict[tuple[str, str], int] = {}
    for (s, t), w in g.edges.items():
        key = (s, t) if s < t else (t, s)
        acc[key] = acc.get(key, 0) + w
    return UndirectedGraph(g.nodes, dict(sorted(acc.items())))
