"""Identifier cleaning: camel-case splitting, keyword and stoplist removal."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable

from ..depgraph.java import strip_comments_and_literals
from .lemma import lemmatize as _lemmatize

_WORD = re.compile(r"[A-Z]+(?=[A-Z][a-z])|[A-Z]?[a-z]+\d*|[A-Z]+\d*|\d+")
_IDENTIFIER = re.compile(r"(?<![\w$])[A-Za-z_$][\w$]*")


@dataclass(frozen=True)
class TokenDocument:
    node: str
    tokens: tuple[str, ...]

    def __len__(self):
        return len(self.tokens)


def parse_term_list(text: str) -> frozenset[str]:
    """One term per line; ``#`` starts a comment, anywhere on the line."""
    terms = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            terms.add(line.lower())
    return frozenset(terms)


def load_term_list(path: str | Path) -> frozenset[str]:
    """Read a one-term-per-line list; ``#`` starts a comment line."""
    return parse_term_list(Path(path).read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def _bundled(name: str) -> frozenset[str]:
    return parse_term_list(resources.files(__package__).joinpath("data", name).read_text(encoding="utf-8"))


def default_keywords() -> frozenset[str]:
    return _bundled("java_keywords.txt")


def default_stoplist() -> frozenset[str]:
    return _bundled("stoplist.txt")


def split_identifier(identifier: str) -> list[str]:
    """``getHTTPResponse_code2`` -> ``['get', 'http', 'response', 'code2']``."""
    words = []
    for part in re.split(r"[_$\W]+", identifier):
        words.extend(w.lower() for w in _WORD.findall(part))
    return words


def clean_tokens(words: Iterable[str], keywords: Iterable[str] | None = None,
                 stoplist: Iterable[str] | None = None, lemmatize: bool = False) -> list[str]:
    keywords = default_keywords() if keywords is None else frozenset(keywords)
    stoplist = default_stoplist() if stoplist is None else frozenset(stoplist)
    out = []
    for word in words:
        for tok in split_identifier(word):
            if lemmatize:
                tok = _lemmatize(tok)
            if tok and tok not in keywords and tok not in stoplist:
                out.append(tok)
    return out


def name_tokens(qualified_name: str, keywords=None, stoplist=None) -> TokenDocument:
    """Tokens of a package-qualified class name, minus the two leading organisation segments."""
    if not qualified_name or not qualified_name.strip("."):
        raise ValueError("qualified name must be non-empty")
    segments = [s for s in qualified_name.split(".") if s]
    drop = min(2, len(segments) - 1)
    return TokenDocument(qualified_name, tuple(clean_tokens(segments[drop:], keywords, stoplist)))


def identifier_tokens(source: str, keywords=None, stoplist=None, lemmatize: bool = False,
                      node: str = "") -> TokenDocument:
    """Every identifier occurrence in ``source`` (comments and literals excluded), cleaned."""
    code = strip_comments_and_literals(source)
    idents = _IDENTIFIER.findall(code)
    return TokenDocument(node, tuple(clean_tokens(idents, keywords, stoplist, lemmatize)))
