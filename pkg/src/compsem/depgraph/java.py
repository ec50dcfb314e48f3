"""Lexical class-dependency extraction for Java source trees.

Resolution is purely lexical: a name counts as a use of project class ``X``
when it is a fully qualified occurrence of ``X``, or a simple name brought
into scope by a single-type import, the enclosing package, or a wildcard
import of ``X``'s package.  JDK and third-party types never become nodes.
"""

from __future__ import annotations

import logging
import os
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .graph import DependencyGraph, SourceUnit, validate_graph

log = logging.getLogger(__name__)


class EmptyProjectError(ValueError):
    """No parsable source file was found under the project root."""


@dataclass(frozen=True)
class LanguageProfile:
    name: str
    suffixes: tuple[str, ...]


JAVA = LanguageProfile("java", (".java",))


@dataclass(frozen=True)
class Diagnostic:
    file_path: str
    message: str

    def __str__(self):
        return f"{self.file_path}: {self.message}"


@dataclass
class ParsedFile:
    file_path: str
    package: str
    imports: list[tuple[str, bool, bool]]  # (name, is_static, is_wildcard)
    types: list[tuple[str, int, int]]  # top-level (name, span start, span end)
    declared: set[str]  # every type name declared in the file, nested included
    code: str  # comments and literals blanked out

    def qualify(self, name: str) -> str:
        return f"{self.package}.{name}" if self.package else name

    @property
    def primary(self) -> str:
        stem = Path(self.file_path).stem
        for name, _, _ in self.types:
            if name == stem:
                return name
        return self.types[0][0]


@dataclass
class ProjectSources:
    """Everything extracted from one project tree."""

    root: Path
    graph: DependencyGraph
    units: dict[str, SourceUnit]
    diagnostics: list[Diagnostic]


# A single pass over the text keeps comment markers inside strings (and vice versa) honest.
_LEXICAL = re.compile(
    r'"""[\s\S]*?"""'  # text block
    r'|"(?:\\.|[^"\\\n])*"'
    r"|'(?:\\.|[^'\\\n])*'"
    r"|//[^\n]*"
    r"|/\*[\s\S]*?\*/"
)
_PACKAGE = re.compile(r"^\s*package\s+([\w$]+(?:\s*\.\s*[\w$]+)*)\s*;", re.M)
_IMPORT = re.compile(r"^\s*import\s+(static\s+)?([\w$]+(?:\s*\.\s*[\w$]+)*)(\s*\.\s*\*)?\s*;", re.M)
_TYPE_DECL = re.compile(r"(?<![\w$.@])(?:(@\s*interface)|class|interface|enum|record)\s+([A-Za-z_$][\w$]*)")
_CHAIN = re.compile(r"[A-Za-z_$][\w$]*(?:\s*\.\s*[A-Za-z_$][\w$]*)*")


def strip_comments_and_literals(text: str) -> str:
    """Blank out comments and string/char literals, keeping offsets and newlines."""

    def blank(m: re.Match) -> str:
        s = m.group(0)
        if s.startswith(("//", "/*")):
            return re.sub(r"[^\n]", " ", s)
        # keep the quotes so `"a" + b` still tokenizes as two operands
        q = s[0]
        return q + re.sub(r"[^\n]", " ", s[1:-1]) + q if len(s) >= 2 else s

    return _LEXICAL.sub(blank, text)


def _dotted(s: str) -> str:
    return re.sub(r"\s+", "", s)


class ParseFailure(ValueError):
    pass


def parse_java(text: str, file_path: str) -> ParsedFile:
    code = strip_comments_and_literals(text)
    if "/*" in code:
        raise ParseFailure("unterminated block comment")

    m = _PACKAGE.search(code)
    package = _dotted(m.group(1)) if m else ""
    imports = [
        (_dotted(im.group(2)), bool(im.group(1)), bool(im.group(3)))
        for im in _IMPORT.finditer(code)
    ]

    # brace depth at every declaration keyword
    depth = 0
    marks = {m.start(): m for m in _TYPE_DECL.finditer(code)}
    types: list[tuple[str, int, int]] = []
    declared: set[str] = set()
    open_top: tuple[str, int] | None = None
    pending_top: tuple[str, int] | None = None
    for i, ch in enumerate(code):
        decl = marks.get(i)
        if decl is not None:
            declared.add(decl.group(2))
            if depth == 0 and open_top is None:
                pending_top = (decl.group(2), i)
        if ch == "{":
            if depth == 0 and pending_top is not None:
                open_top, pending_top = pending_top, None
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise ParseFailure(f"unbalanced '}}' at offset {i}")
            if depth == 0 and open_top is not None:
                types.append((open_top[0], open_top[1], i + 1))
                open_top = None
    if depth != 0:
        raise ParseFailure("unbalanced braces at end of file")
    if not types:
        raise ParseFailure("no top-level type declaration")
    return ParsedFile(file_path, package, imports, types, declared, code)


@dataclass
class _SymbolTable:
    fqns: set[str]
    by_package: dict[str, dict[str, str]]

    @classmethod
    def from_files(cls, files: list[ParsedFile]) -> "_SymbolTable":
        fqns: set[str] = set()
        by_package: dict[str, dict[str, str]] = {}
        for f in files:
            for name, _, _ in f.types:
                q = f.qualify(name)
                fqns.add(q)
                by_package.setdefault(f.package, {})[name] = q
        return cls(fqns, by_package)

    def longest_prefix(self, segments: list[str]) -> tuple[str, int] | None:
        for k in range(len(segments), 1, -1):
            q = ".".join(segments[:k])
            if q in self.fqns:
                return q, k
        return None


def _scope(f: ParsedFile, table: _SymbolTable) -> dict[str, str]:
    """Simple name -> project class visible in ``f`` (Java shadowing order reversed into a dict)."""
    scope: dict[str, str] = {}
    for imp, is_static, wildcard in f.imports:
        if wildcard and not is_static:
            scope.update(table.by_package.get(imp, {}))
    scope.update(table.by_package.get(f.package, {}))
    for imp, is_static, wildcard in f.imports:
        if wildcard or is_static:
            continue
        if imp in table.fqns:
            scope[imp.rsplit(".", 1)[-1]] = imp
    top = {t[0] for t in f.types}
    for name in f.declared:
        # nested types of this file are folded into their owner and never count
        scope[name] = f.qualify(name) if name in top else ""
    return scope


def count_references(f: ParsedFile, table: _SymbolTable) -> dict[tuple[str, str], int]:
    """Use counts ``(source class, target class) -> n`` for one parsed file."""
    counts: Counter[tuple[str, str]] = Counter()
    primary = f.qualify(f.primary)
    scope = _scope(f, table)

    def owner(pos: int) -> str:
        for name, start, end in f.types:
            if start <= pos < end:
                return f.qualify(name)
        return primary

    def add(src: str, dst: str) -> None:
        if dst and dst != src:
            counts[(src, dst)] += 1

    for im in _IMPORT.finditer(f.code):
        hit = table.longest_prefix(_dotted(im.group(2)).split("."))
        if hit is not None:
            add(primary, hit[0])

    blanked = _IMPORT.sub(lambda m: " " * len(m.group(0)), f.code)
    blanked = _PACKAGE.sub(lambda m: " " * len(m.group(0)), blanked)
    for m in _CHAIN.finditer(blanked):
        j = m.start() - 1
        while j >= 0 and blanked[j].isspace():
            j -= 1
        if j >= 0 and blanked[j] == ".":
            continue  # member of a preceding expression
        segments = _dotted(m.group(0)).split(".")
        src = owner(m.start())
        hit = table.longest_prefix(segments)
        if hit is not None:
            add(src, hit[0])
            continue
        target = scope.get(segments[0])
        if target:
            add(src, target)
    return dict(counts)


def _iter_sources(root: Path, profile: LanguageProfile):
    for dirpath, dirnames, filenames in os.walk(root):
        dirnames.sort()
        for fn in sorted(filenames):
            if fn.endswith(profile.suffixes):
                yield Path(dirpath) / fn


def extract_project(project_root: str | Path, profile: LanguageProfile = JAVA) -> ProjectSources:
    if profile is not JAVA and profile.name != "java":
        raise ValueError(f"unsupported language profile {profile.name!r}")
    root = Path(project_root)
    if not root.is_dir():
        raise NotADirectoryError(f"project root {root} is not a readable directory")
    os.listdir(root)  # surfaces permission errors

    diagnostics: list[Diagnostic] = []
    parsed: list[ParsedFile] = []
    texts: dict[str, str] = {}
    for path in _iter_sources(root, profile):
        rel = path.relative_to(root).as_posix()
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            diagnostics.append(Diagnostic(rel, f"unreadable: {exc}"))
            continue
        try:
            parsed.append(parse_java(text, rel))
            texts[rel] = text
        except ParseFailure as exc:
            diagnostics.append(Diagnostic(rel, f"skipped: {exc}"))

    # duplicate class names: first file (in sorted path order) wins
    seen: dict[str, str] = {}
    kept: list[ParsedFile] = []
    for f in parsed:
        dup = [n for n, _, _ in f.types if f.qualify(n) in seen]
        if dup:
            diagnostics.append(
                Diagnostic(f.file_path, f"skipped: {f.qualify(dup[0])} already defined in {seen[f.qualify(dup[0])]}")
            )
            continue
        for n, _, _ in f.types:
            seen[f.qualify(n)] = f.file_path
        kept.append(f)

    if not kept:
        raise EmptyProjectError(f"no parsable {profile.name} files under {root}")

    table = _SymbolTable.from_files(kept)
    edges: Counter[tuple[str, str]] = Counter()
    units: dict[str, SourceUnit] = {}
    for f in kept:
        edges.update(count_references(f, table))
        text = texts[f.file_path]
        for name, start, end in f.types:
            q = f.qualify(name)
            # every top-level type of a file shares the file's text
            units[q] = SourceUnit(q, f.file_path, text)

    for d in diagnostics:
        log.warning("%s", d)
    graph = DependencyGraph(frozenset(units), dict(sorted(edges.items())))
    validate_graph(graph)
    return ProjectSources(root, graph, dict(sorted(units.items())), diagnostics)


def extract_dependencies(project_root: str | Path, profile: LanguageProfile = JAVA) -> DependencyGraph:
    return extract_project(project_root, profile).graph
