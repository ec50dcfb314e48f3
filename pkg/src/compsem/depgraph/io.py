"""Tab-separated edge-list files.

One record per line, ``source<TAB>target<TAB>weight``.  Isolated nodes are
written as ``node<TAB>-<TAB>0`` and lines starting with ``#`` are comments.
"""

from __future__ import annotations

from pathlib import Path

from .graph import DependencyGraph, GraphError, validate_graph

ISOLATED_MARK = "-"


class EdgeListParseError(GraphError):
    def __init__(self, path, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


def format_edge_list(g: DependencyGraph) -> str:
    lines = [f"# nodes={len(g.nodes)} edges={len(g.edges)}"]
    touched = set()
    for (s, t), w in sorted(g.edges.items()):
        lines.append(f"{s}\t{t}\t{w}")
        touched.add(s)
        touched.add(t)
    for n in sorted(g.nodes - touched):
        lines.append(f"{n}\t{ISOLATED_MARK}\t0")
    return "\n".join(lines) + "\n"


def write_edge_list(g: DependencyGraph, path: str | Path) -> None:
    validate_graph(g)
    Path(path).write_text(format_edge_list(g), encoding="utf-8")


def parse_edge_list(text: str, source="<string>") -> DependencyGraph:
    nodes: set[str] = set()
    edges: dict[tuple[str, str], int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 3:
            raise EdgeListParseError(source, lineno, f"expected 3 tab-separated fields, got {len(fields)}")
        s, t, raw = fields
        if not s:
            raise EdgeListParseError(source, lineno, "empty node name")
        if t == ISOLATED_MARK and raw == "0":
            nodes.add(s)
            continue
        try:
            w = int(raw)
        except ValueError:
            raise EdgeListParseError(source, lineno, f"weight {raw!r} is not an integer") from None
        if w < 1:
            raise EdgeListParseError(source, lineno, f"weight must be >= 1, got {w}")
        if not t:
            raise EdgeListParseError(source, lineno, "empty node name")
        if s == t:
            raise EdgeListParseError(source, lineno, f"self-loop on {s!r}")
        if (s, t) in edges:
            raise EdgeListParseError(source, lineno, f"duplicate edge {s} -> {t}")
        edges[(s, t)] = w
        nodes.update((s, t))
    return DependencyGraph(frozenset(nodes), dict(sorted(edges.items())))


def read_edge_list(path: str | Path) -> DependencyGraph:
    path = Path(path)
    return parse_edge_list(path.read_text(encoding="utf-8"), source=path)
