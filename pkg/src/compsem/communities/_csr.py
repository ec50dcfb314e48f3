"""Compact array form of an undirected graph used by the kernels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import sparse
from scipy.sparse.csgraph import connected_components

from ..depgraph.graph import UndirectedGraph


@dataclass
class CSRGraph:
    indptr: np.ndarray  # int64
    indices: np.ndarray  # int64
    weights: np.ndarray  # float64, symmetric, no diagonal
    node_weight: np.ndarray  # float64; degree including folded self-loops

    @property
    def n(self) -> int:
        return len(self.node_weight)

    @classmethod
    def from_matrix(cls, mat: sparse.csr_matrix, node_weight: np.ndarray) -> "CSRGraph":
        mat = sparse.csr_matrix(mat)
        mat.setdiag(0)
        mat.eliminate_zeros()
        mat.sort_indices()
        return cls(
            mat.indptr.astype(np.int64),
            mat.indices.astype(np.int64),
            mat.data.astype(np.float64),
            np.asarray(node_weight, dtype=np.float64),
        )

    @classmethod
    def from_graph(cls, g: UndirectedGraph, nodes: list[str]) -> "CSRGraph":
        index = {n: i for i, n in enumerate(nodes)}
        rows, cols, vals = [], [], []
        for (a, b), w in g.edges.items():
            i, j = index[a], index[b]
            rows += [i, j]
            cols += [j, i]
            vals += [float(w), float(w)]
        n = len(nodes)
        mat = sparse.csr_matrix((vals, (rows, cols)), shape=(n, n), dtype=np.float64)
        return cls.from_matrix(mat, np.asarray(mat.sum(axis=1)).ravel())

    def matrix(self) -> sparse.csr_matrix:
        return sparse.csr_matrix((self.weights, self.indices, self.indptr), shape=(self.n, self.n))

    def scaled(self, factor: float) -> "CSRGraph":
        return CSRGraph(self.indptr, self.indices, self.weights * factor, self.node_weight * factor)

    def aggregate(self, labels: np.ndarray, k: int) -> "CSRGraph":
        """Collapse each label class into one node; internal weight folds into node_weight."""
        member = sparse.csr_matrix(
            (np.ones(self.n), (np.arange(self.n), labels)), shape=(self.n, k)
        )
        agg = (member.T @ self.matrix() @ member).tocsr()
        node_weight = np.zeros(k)
        np.add.at(node_weight, labels, self.node_weight)
        return CSRGraph.from_matrix(agg, node_weight)


def relabel(labels) -> tuple[np.ndarray, int]:
    """Dense labels in first-appearance order and the number of classes."""
    labels = np.asarray(labels, dtype=np.int64)
    _, first, inverse = np.unique(labels, return_index=True, return_inverse=True)
    rank = np.empty(len(first), dtype=np.int64)
    rank[np.argsort(first, kind="stable")] = np.arange(len(first))
    return rank[inverse.reshape(-1)], len(first)


def split_disconnected(csr: CSRGraph, labels: np.ndarray) -> np.ndarray:
    """Split every community into the connected pieces of its induced subgraph."""
    mat = csr.matrix().tocoo()
    keep = labels[mat.row] == labels[mat.col]
    inner = sparse.csr_matrix((mat.data[keep], (mat.row[keep], mat.col[keep])), shape=mat.shape)
    _, pieces = connected_components(inner, directed=False)
    return relabel(pieces)[0]
