"""TF-IDF document vectors over a capped vocabulary."""

from __future__ import annotations

import math
from collections import Counter
from typing import Sequence

import numpy as np

from .embedding import EmbeddingMatrix
from .tokens import TokenDocument


def select_vocabulary(docs: Sequence[TokenDocument], vocab_cap: int) -> list[str]:
    """Most frequent terms across the corpus; equal counts sort alphabetically."""
    totals = Counter()
    for d in docs:
        totals.update(d.tokens)
    ranked = sorted(totals.items(), key=lambda kv: (-kv[1], kv[0]))
    return sorted(t for t, _ in ranked[:vocab_cap])


def build_tfidf(docs: Sequence[TokenDocument], vocab_cap: int = 1000) -> EmbeddingMatrix:
    """Raw term count times smoothed idf ``ln((1+N)/(1+df)) + 1``, rows L2-normalised."""
    if not docs:
        raise ValueError("TF-IDF needs at least one document")
    if vocab_cap < 1:
        raise ValueError("vocab_cap must be positive")
    vocab = select_vocabulary(docs, vocab_cap)
    if not vocab:
        raise ValueError("TF-IDF corpus has no terms after cleaning")
    col = {t: j for j, t in enumerate(vocab)}

    counts = np.zeros((len(docs), len(vocab)))
    for i, d in enumerate(docs):
        for t, c in Counter(d.tokens).items():
            j = col.get(t)
            if j is not None:
                counts[i, j] = c
    df = np.count_nonzero(counts, axis=0)
    n_docs = len(docs)
    idf = np.array([math.log((1 + n_docs) / (1 + f)) + 1 for f in df])
    weights = counts * idf
    norms = np.linalg.norm(weights, axis=1)
    nonzero = norms > 0
    weights[nonzero] /= norms[nonzero, None]

    diagnostics = tuple(f"empty tfidf document: {d.node}" for d, ok in zip(docs, nonzero) if not ok)
    order = sorted(range(n_docs), key=lambda i: docs[i].node)
    return EmbeddingMatrix(
        "tfidf",
        tuple(docs[i].node for i in order),
        weights[order],
        diagnostics=diagnostics,
        features=tuple(vocab),
    )
