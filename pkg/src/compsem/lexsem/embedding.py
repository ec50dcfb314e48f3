"""Per-node dense vectors under one feature scheme."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

SCHEMES = ("name-import", "code-import", "word-vector", "tfidf")


class AlignmentError(ValueError):
    """Embedding rows do not line up with the analysed graph's nodes."""

    def __init__(self, missing: Sequence[str]):
        self.missing = list(missing)
        shown = ", ".join(self.missing[:10])
        more = f" (+{len(self.missing) - 10} more)" if len(self.missing) > 10 else ""
        super().__init__(f"no embedding for {len(self.missing)} node(s): {shown}{more}")


@dataclass(frozen=True, eq=False)
class EmbeddingMatrix:
    scheme: str
    nodes: tuple[str, ...]
    matrix: np.ndarray
    diagnostics: tuple[str, ...] = ()
    features: tuple[str, ...] | None = field(default=None, repr=False)

    def __post_init__(self):
        validate_embedding(self)

    @classmethod
    def from_vectors(cls, scheme: str, vectors: Mapping[str, Sequence[float]], **kw) -> "EmbeddingMatrix":
        nodes = tuple(sorted(vectors))
        mat = np.array([np.asarray(vectors[n], dtype=float) for n in nodes], dtype=float)
        if not nodes:
            mat = mat.reshape(0, 0)
        return cls(scheme, nodes, mat, **kw)

    @property
    def dimension(self) -> int:
        return self.matrix.shape[1]

    @property
    def vectors(self) -> dict[str, np.ndarray]:
        return {n: self.matrix[i] for i, n in enumerate(self.nodes)}

    def rows(self, nodes: Iterable[str]) -> np.ndarray:
        """Vectors of ``nodes`` in the given order; raises :class:`AlignmentError` on gaps."""
        index = {n: i for i, n in enumerate(self.nodes)}
        nodes = list(nodes)
        missing = sorted(n for n in nodes if n not in index)
        if missing:
            raise AlignmentError(missing)
        return self.matrix[[index[n] for n in nodes]] if nodes else np.zeros((0, self.dimension))

    def restrict(self, nodes: Iterable[str]) -> "EmbeddingMatrix":
        nodes = tuple(sorted(nodes))
        return EmbeddingMatrix(self.scheme, nodes, self.rows(nodes), self.diagnostics, self.features)

    def scaled(self, factor: float) -> "EmbeddingMatrix":
        return EmbeddingMatrix(self.scheme, self.nodes, self.matrix * factor, self.diagnostics, self.features)


def validate_embedding(emb: EmbeddingMatrix) -> None:
    if emb.scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {emb.scheme!r}")
    if emb.matrix.ndim != 2 or emb.matrix.shape[0] != len(emb.nodes):
        raise ValueError("embedding matrix must have one row per node")
    if emb.nodes and emb.matrix.shape[1] < 1:
        raise ValueError("embedding dimension must be positive")
    if len(set(emb.nodes)) != len(emb.nodes):
        raise ValueError("duplicate node in embedding")
    if not np.all(np.isfinite(emb.matrix)):
        raise ValueError("embedding contains non-finite entries")
