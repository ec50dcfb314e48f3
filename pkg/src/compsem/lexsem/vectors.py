"""Word-vector tables and precomputed per-node embedding files."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Collection, Iterable

import numpy as np

from .embedding import AlignmentError, EmbeddingMatrix
from .tokens import TokenDocument

log = logging.getLogger(__name__)


class VectorFileError(ValueError):
    def __init__(self, path, lineno: int, message: str):
        super().__init__(f"{path}:{lineno}: {message}")
        self.path = path
        self.lineno = lineno


@dataclass(frozen=True, eq=False)
class WordVectorTable:
    dimension: int
    entries: dict[str, np.ndarray]

    def __contains__(self, word: str) -> bool:
        return word in self.entries

    def __len__(self):
        return len(self.entries)


def _floats(fields: list[str], path, lineno: int) -> np.ndarray:
    try:
        vec = np.array([float(x) for x in fields], dtype=float)
    except ValueError:
        raise VectorFileError(path, lineno, "non-numeric vector component") from None
    if not np.all(np.isfinite(vec)):
        raise VectorFileError(path, lineno, "non-finite vector component")
    return vec


def load_word_vectors(path: str | Path, vocabulary: Collection[str] | None = None) -> WordVectorTable:
    """Read the ``count dim`` header text format (word2vec/fastText ``.vec``).

    With ``vocabulary`` only those words are kept, which keeps big pretrained
    files cheap to load.
    """
    path = Path(path)
    entries: dict[str, np.ndarray] = {}
    with path.open(encoding="utf-8", errors="strict") as fh:
        header = fh.readline()
        parts = header.split()
        if len(parts) != 2:
            raise VectorFileError(path, 1, "missing or malformed 'count dim' header")
        try:
            count, dim = int(parts[0]), int(parts[1])
        except ValueError:
            raise VectorFileError(path, 1, "header fields must be integers") from None
        if dim < 1 or count < 0:
            raise VectorFileError(path, 1, "header needs count >= 0 and dim >= 1")
        rows = 0
        for lineno, line in enumerate(fh, start=2):
            fields = line.rstrip("\n").rstrip(" ").split(" ")
            if fields == [""]:
                continue
            rows += 1
            if len(fields) != dim + 1:
                raise VectorFileError(path, lineno, f"expected word and {dim} values, got {len(fields) - 1} values")
            word = fields[0].lower()
            if vocabulary is not None and word not in vocabulary:
                continue
            if word in entries:
                log.warning("%s:%d: duplicate word %r, keeping the last vector", path, lineno, word)
            entries[word] = _floats(fields[1:], path, lineno)
    if rows != count:
        log.warning("%s: header announces %d rows, found %d", path, count, rows)
    return WordVectorTable(dim, entries)


@dataclass(frozen=True)
class DocumentVector:
    vector: np.ndarray
    oov: int


def embed_with_vectors(doc: TokenDocument, table: WordVectorTable) -> DocumentVector:
    """Mean of the in-vocabulary token vectors; OOV tokens are skipped and counted."""
    hits = [table.entries[t] for t in doc.tokens if t in table.entries]
    oov = len(doc.tokens) - len(hits)
    if not hits:
        return DocumentVector(np.zeros(table.dimension), oov)
    return DocumentVector(np.mean(hits, axis=0), oov)


def embed_documents(docs: Iterable[TokenDocument], table: WordVectorTable) -> EmbeddingMatrix:
    vectors, diagnostics = {}, []
    for d in docs:
        out = embed_with_vectors(d, table)
        if out.oov == len(d.tokens):
            diagnostics.append(f"no in-vocabulary token for {d.node} ({out.oov} OOV)")
        vectors[d.node] = out.vector
    return EmbeddingMatrix.from_vectors("word-vector", vectors, diagnostics=tuple(diagnostics))


def import_embeddings(path: str | Path, expected_nodes: Collection[str],
                      scheme: str = "code-import") -> EmbeddingMatrix:
    """Load ``node<TAB>v1 v2 ...`` rows under a ``#dim <d>`` header."""
    path = Path(path)
    expected = frozenset(expected_nodes)
    vectors: dict[str, np.ndarray] = {}
    dim = None
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.rstrip("\n")
            if dim is None:
                parts = line.split()
                if len(parts) != 2 or parts[0] != "#dim":
                    raise VectorFileError(path, lineno, "first line must be '#dim <d>'")
                try:
                    dim = int(parts[1])
                except ValueError:
                    raise VectorFileError(path, lineno, "dimension must be an integer") from None
                if dim < 1:
                    raise VectorFileError(path, lineno, "dimension must be positive")
                continue
            if not line.strip() or line.startswith("#"):
                continue
            node, sep, rest = line.partition("\t")
            if not sep:
                raise VectorFileError(path, lineno, "expected 'node<TAB>values'")
            vec = _floats(rest.split(), path, lineno)
            if len(vec) != dim:
                raise VectorFileError(path, lineno, f"expected {dim} values, got {len(vec)}")
            if node not in expected:
                log.warning("%s:%d: node %r is not in the graph; skipped", path, lineno, node)
                continue
            vectors[node] = vec
    if dim is None:
        raise VectorFileError(path, 1, "empty file: missing '#dim <d>' header")
    missing = sorted(expected - vectors.keys())
    if missing:
        raise AlignmentError(missing)
    emb = EmbeddingMatrix.from_vectors(scheme, vectors)
    if not vectors:
        emb = EmbeddingMatrix(scheme, (), np.zeros((0, dim)))
    return emb


def write_embeddings(emb: EmbeddingMatrix, path: str | Path) -> None:
    lines = [f"#dim {emb.dimension}"]
    for node, row in zip(emb.nodes, emb.matrix):
        lines.append(node + "\t" + " ".join(repr(float(x)) for x in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
