"""Run configuration for corpus analyses."""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from ..communities import ALGORITHMS, CDParams
from ..lexsem.embedding import SCHEMES
from ..semmetrics import MIN_COMMUNITY_SIZE


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    projects: tuple[Path, ...]
    out_dir: Path
    algorithms: tuple[str, ...] = ("leiden", "infomap")
    schemes: tuple[str, ...] = ("tfidf",)
    params: CDParams = field(default_factory=CDParams)
    min_community_size: int = MIN_COMMUNITY_SIZE
    stoplist: Path | None = None
    keywords: Path | None = None
    vectors: Path | None = None
    embeddings_dir: Path | None = None
    unweighted: bool = False
    report_format: str = "json"
    vocab_cap: int = 1000
    workers: int = 1

    def __post_init__(self):
        if not self.projects:
            raise ConfigError("at least one project is required")
        if not self.algorithms:
            raise ConfigError("at least one algorithm is required")
        if not self.schemes:
            raise ConfigError("at least one scheme is required")
        for a in self.algorithms:
            if a not in ALGORITHMS:
                raise ConfigError(f"unknown algorithm {a!r} (choose from {', '.join(ALGORITHMS)})")
        for s in self.schemes:
            if s not in SCHEMES:
                raise ConfigError(f"unknown scheme {s!r} (choose from {', '.join(SCHEMES)})")
        if len(set(self.algorithms)) != len(self.algorithms) or len(set(self.schemes)) != len(self.schemes):
            raise ConfigError("algorithms and schemes must not repeat")
        if "word-vector" in self.schemes and self.vectors is None:
            raise ConfigError("scheme word-vector needs --vectors FILE")
        if {"name-import", "code-import"} & set(self.schemes) and self.embeddings_dir is None:
            raise ConfigError("schemes name-import/code-import need --embeddings-dir DIR")
        for label, path in (("stoplist", self.stoplist), ("keywords", self.keywords), ("vectors", self.vectors)):
            if path is not None and not Path(path).is_file():
                raise ConfigError(f"{label} file {path} does not exist")
        if self.embeddings_dir is not None and not Path(self.embeddings_dir).is_dir():
            raise ConfigError(f"embeddings directory {self.embeddings_dir} does not exist")
        if self.min_community_size < 1:
            raise ConfigError("min community size must be >= 1")
        if self.report_format not in ("json", "csv"):
            raise ConfigError("report format must be json or csv")
        if self.workers < 1:
            raise ConfigError("workers must be >= 1")
        ids = [project_id(p) for p in self.projects]
        dupes = sorted({i for i in ids if ids.count(i) > 1})
        if dupes:
            raise ConfigError(f"project ids must be unique; repeated: {', '.join(dupes)}")


def project_id(path: Path) -> str:
    return Path(path).resolve().name


def read_manifest(path: str | Path) -> list[Path]:
    """One project root per line; relative paths resolve against the manifest's folder."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read manifest {path}: {exc}") from None
    roots = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        p = Path(line)
        roots.append(p if p.is_absolute() else path.parent / p)
    return roots
