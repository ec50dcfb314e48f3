"""Command line entry point: ``compsem analyze``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .communities import CDParams
from .communities.kernels import BACKEND
from .lexsem.embedding import SCHEMES
from .pipeline import ConfigError, RunConfig, read_manifest, run_corpus
from .pipeline.outputs import OutputError

EXIT_OK, EXIT_CONFIG, EXIT_CORPUS_FAILED = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _csv_list(value: str) -> tuple[str, ...]:
    return tuple(v.strip() for v in value.split(",") if v.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="compsem", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="detect components and score them semantically")
    p.add_argument("root", nargs="?", type=Path, help="project root (one project)")
    p.add_argument("--manifest", type=Path, help="file listing project roots, one per line")
    p.add_argument("--algorithms", type=_csv_list, default=("leiden", "infomap"))
    p.add_argument("--schemes", type=_csv_list, default=None,
                   help=f"comma list from {','.join(SCHEMES)}; default: every scheme whose inputs are given")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--resolution", type=float, default=1.0)
    p.add_argument("--trials", type=int, default=CDParams.trials, help="independent restarts per algorithm")
    p.add_argument("--max-sweeps", type=int, default=CDParams.max_sweeps)
    p.add_argument("--min-community-size", type=int, default=4)
    p.add_argument("--vectors", type=Path, help="pretrained word vectors, 'count dim' text format")
    p.add_argument("--embeddings-dir", type=Path,
                   help="precomputed vectors at DIR/<project>/<scheme>.vec for the *-import schemes")
    p.add_argument("--stoplist", type=Path)
    p.add_argument("--keywords", type=Path)
    p.add_argument("--vocab-cap", type=int, default=1000)
    p.add_argument("--unweighted", action="store_true", help="ignore use counts in detection and correlation")
    p.add_argument("--out", type=Path, default=Path("compsem-out"))
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--workers", type=int, default=1)
    return parser


def _default_schemes(args) -> tuple[str, ...]:
    schemes = []
    if args.embeddings_dir is not None:
        schemes += ["name-import", "code-import"]
    schemes.append("tfidf")
    if args.vectors is not None:
        schemes.append("word-vector")
    return tuple(schemes)


def config_from_args(args) -> RunConfig:
    if (args.root is None) == (args.manifest is None):
        raise ConfigError("give exactly one of a project root or --manifest")
    projects = read_manifest(args.manifest) if args.manifest else [args.root]
    try:
        params = CDParams(seed=args.seed, resolution=args.resolution, trials=args.trials,
                          max_sweeps=args.max_sweeps)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return RunConfig(
        projects=tuple(projects),
        out_dir=args.out,
        algorithms=args.algorithms,
        schemes=args.schemes or _default_schemes(args),
        params=params,
        min_community_size=args.min_community_size,
        stoplist=args.stoplist,
        keywords=args.keywords,
        vectors=args.vectors,
        embeddings_dir=args.embeddings_dir,
        unweighted=args.unweighted,
        report_format=args.format,
        vocab_cap=args.vocab_cap,
        workers=args.workers,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
    except ConfigError as exc:
        print(f"compsem: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    logging.getLogger(__name__).info("kernel backend: %s", BACKEND)

    try:
        run = run_corpus(cfg)
    except OutputError as exc:
        print(f"compsem: {exc}", file=sys.stderr)
        return EXIT_CORPUS_FAILED
    except (OSError, ValueError) as exc:  # e.g. unreadable vector file
        print(f"compsem: config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    print((Path(cfg.out_dir) / "aggregate.txt").read_text(encoding="utf-8"), end="")
    if len(run.failures) == len(run.results):
        print("compsem: every project failed", file=sys.stderr)
        return EXIT_CORPUS_FAILED
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
