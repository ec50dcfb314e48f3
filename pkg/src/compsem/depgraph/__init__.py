"""Class dependency graphs: extraction from Java sources, symmetrization, edge-list files."""

from .graph import DependencyGraph, GraphError, SourceUnit, UndirectedGraph, symmetrize, validate_graph
from .io import EdgeListParseError, parse_edge_list, read_edge_list, write_edge_list
from .java import JAVA, EmptyProjectError, LanguageProfile, ProjectSources, extract_dependencies, extract_project


def graph_io(g, file, direction):
    """Read (``g`` ignored) or write an edge-list file."""
    if direction == "write":
        write_edge_list(g, file)
        return None
    if direction == "read":
        return read_edge_list(file)
    raise ValueError("direction must be 'read' or 'write'")


__all__ = [
    "JAVA",
    "DependencyGraph",
    "EdgeListParseError",
    "EmptyProjectError",
    "GraphError",
    "LanguageProfile",
    "ProjectSources",
    "SourceUnit",
    "UndirectedGraph",
    "extract_dependencies",
    "extract_project",
    "graph_io",
    "parse_edge_list",
    "read_edge_list",
    "symmetrize",
    "validate_graph",
    "write_edge_list",
]
