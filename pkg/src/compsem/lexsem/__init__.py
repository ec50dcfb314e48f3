"""Lexical and semantic document representations of source files."""

from .embedding import SCHEMES, AlignmentError, EmbeddingMatrix, validate_embedding
from .lemma import lemmatize
from .tfidf import build_tfidf
from .tokens import (
    TokenDocument,
    clean_tokens,
    default_keywords,
    default_stoplist,
    identifier_tokens,
    load_term_list,
    name_tokens,
    split_identifier,
)
from .vectors import (
    VectorFileError,
    WordVectorTable,
    embed_documents,
    embed_with_vectors,
    import_embeddings,
    load_word_vectors,
    write_embeddings,
)

__all__ = [
    "SCHEMES",
    "AlignmentError",
    "EmbeddingMatrix",
    "TokenDocument",
    "VectorFileError",
    "WordVectorTable",
    "build_tfidf",
    "clean_tokens",
    "default_keywords",
    "default_stoplist",
    "embed_documents",
    "embed_with_vectors",
    "identifier_tokens",
    "import_embeddings",
    "lemmatize",
    "load_term_list",
    "load_word_vectors",
    "name_tokens",
    "split_identifier",
    "validate_embedding",
    "write_embeddings",
]
