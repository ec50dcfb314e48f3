"""Files written by a corpus run, and readers for the machine-readable ones."""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path
from typing import Iterable

from ..communities import Partition
from ..depgraph.io import format_edge_list
from ..semmetrics import MetricsReport, filter_small
from .aggregate import AggregateReport, format_table
from .analyze import ProjectResult
from .config import RunConfig

_LIST_FIELDS = ("community_sizes", "cohesion", "diagnostics")
_DICT_FIELDS = ("undefined",)


class OutputError(OSError):
    pass


def _write(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc.strerror or exc}") from exc


def dumps_json(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, allow_nan=False) + "\n"


def format_report(report: MetricsReport, fmt: str = "json") -> str:
    data = report.to_dict()
    if fmt == "json":
        return dumps_json(data)
    buf = io.StringIO()
    fields = list(data)
    writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    row = {}
    for k, v in data.items():
        if k in _LIST_FIELDS or k in _DICT_FIELDS:
            row[k] = json.dumps(v, sort_keys=True)
        elif v is None:
            row[k] = ""
        else:
            row[k] = repr(v) if isinstance(v, float) else v
    writer.writerow(row)
    return buf.getvalue()


def parse_report(text: str, fmt: str = "json") -> MetricsReport:
    if fmt == "json":
        return MetricsReport.from_dict(json.loads(text))
    (row,) = list(csv.DictReader(io.StringIO(text)))
    data: dict = {}
    types = MetricsReport.__annotations__
    for k, v in row.items():
        kind = types[k]
        if k in _LIST_FIELDS or k in _DICT_FIELDS:
            data[k] = json.loads(v)
        elif v == "":
            data[k] = None
        elif kind.startswith("int"):
            data[k] = int(v)
        elif kind.startswith("float"):
            data[k] = float(v)
        else:
            data[k] = v
    return MetricsReport.from_dict(data)


def read_report(path: str | Path) -> MetricsReport:
    path = Path(path)
    return parse_report(path.read_text(encoding="utf-8"), "csv" if path.suffix == ".csv" else "json")


def format_partition(p: Partition, algorithm: str, seed: int, resolution: float, quality: float | None) -> str:
    lines = [
        f"# algorithm={algorithm}",
        f"# seed={seed}",
        f"# resolution={resolution!r}",
        f"# quality={'undefined' if quality is None else repr(quality)}",
    ]
    lines += [f"{n}\t{c}" for n, c in sorted(p.assignment.items())]
    return "\n".join(lines) + "\n"


def read_partition(path: str | Path) -> tuple[Partition, dict[str, str]]:
    meta: dict[str, str] = {}
    assignment: dict[str, int] = {}
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), start=1):
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            meta[key] = value
            continue
        if not line.strip():
            continue
        node, sep, cid = line.partition("\t")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected 'node<TAB>community_id'")
        assignment[node] = int(cid)
    return Partition(assignment), meta


def format_embedding_export(result: ProjectResult, algorithm: str, scheme: str, min_size: int) -> str:
    """``node, community_id, v1..vd`` rows for the retained nodes, ready for 2-D projection."""
    emb = result.embeddings[scheme]
    cs = filter_small(result.partitions[algorithm], min_size)
    header = ["node", "community_id"] + [f"v{i + 1}" for i in range(emb.dimension)]
    lines = ["\t".join(header)]
    for cid, members in cs.communities:
        for node, row in zip(members, emb.rows(members)):
            lines.append("\t".join([node, str(cid)] + [repr(float(x)) for x in row]))
    return "\n".join(lines) + "\n"


def format_tokens(result: ProjectResult) -> str:
    lines = ["node\tname_tokens\tidentifier_tokens"]
    for name_doc, ident_doc in zip(result.names, result.identifiers):
        lines.append(f"{name_doc.node}\t{' '.join(name_doc.tokens)}\t{' '.join(ident_doc.tokens)}")
    return "\n".join(lines) + "\n"


def report_path(out: Path, report: MetricsReport, fmt: str) -> Path:
    return out / "reports" / f"{report.project_id}.{report.algorithm}.{report.scheme}.{fmt}"


def emit_outputs(results: Iterable[ProjectResult], agg: AggregateReport, cfg: RunConfig) -> list[Path]:
    """Write every per-project file plus the aggregate; returns the written paths."""
    out = Path(cfg.out_dir)
    written: list[Path] = []

    def put(path: Path, text: str) -> None:
        _write(path, text)
        written.append(path)

    for res in results:
        if res.failure is not None:
            continue
        put(out / "graphs" / f"{res.project_id}.tsv", format_edge_list(res.graph))
        put(out / "tokens" / f"{res.project_id}.tsv", format_tokens(res))
        for algorithm, part in res.partitions.items():
            put(
                out / "partitions" / f"{res.project_id}.{algorithm}.tsv",
                format_partition(part, algorithm, cfg.params.seed, cfg.params.resolution, res.qualities[algorithm]),
            )
        for report in res.reports:
            put(report_path(out, report, cfg.report_format), format_report(report, cfg.report_format))
            if report.error is None:
                put(
                    out / "embeddings" / f"{res.project_id}.{report.algorithm}.{report.scheme}.tsv",
                    format_embedding_export(res, report.algorithm, report.scheme, cfg.min_community_size),
                )

    if cfg.report_format == "json":
        put(out / "aggregate.json", dumps_json(agg.to_dict()))
    else:
        put(out / "aggregate.csv", format_aggregate_csv(agg))
    put(out / "aggregate.txt", format_table(agg))
    return written


def format_aggregate_csv(agg: AggregateReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "metric", "scheme", "algorithm", "value", "ties", "n"])
    for c in agg.wins:
        for a in agg.algorithms:
            w.writerow(["wins", c.metric, c.scheme, a, c.wins[a], c.ties, c.n])
    for c in agg.cohesion_gt_separation:
        pct = "" if c.percent is None else repr(c.percent)
        w.writerow(["coh_gt_sep", "coh>sep", c.scheme, c.algorithm, c.count, pct, c.n])
    for f in agg.failures:
        w.writerow(["failure", "", "", "", f["project_id"], f["reason"], ""])
    return buf.getvalue()


def read_aggregate(path: str | Path) -> AggregateReport:
    return AggregateReport.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))
