"""Pipeline steps shared by the CLI: tables -> pairs -> networks -> files."""
from __future__ import annotations

import json
import logging
import os
from collections import Counter
from dataclasses import asdict, dataclass
from pathlib import Path

from . import __version__, graph, pajek
from ._io import atomic_write, sha256_file
from .ingest import Corpus
from .normalize import FoldMode, fold_case
from .tabular import TableSet

log = logging.getLogger(__name__)

KINDS = {
    "institution": ("addresses", "institution"),
    "country": ("addresses", "country"),
    "full-address": ("addresses", "full_address"),
    "author": ("authors", "author_name"),
    "cited-ref": ("citations", "cited_ref"),
}
PROJECTIONS = ("columns", "rows", "none")


@dataclass
class PipelineConfig:
    kind: str = "institution"
    fold: FoldMode = FoldMode.UPPER
    project: str = "columns"
    out_dir: str = "."
    stem: str | None = None
    encoding: str = "utf-8"
    max_pairs: int | None = graph.DEFAULT_MAX_PAIRS
    edge_list: bool = False
    strict: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown attribute kind {self.kind!r} (choose from {', '.join(KINDS)})")
        if self.project not in PROJECTIONS:
            raise ValueError(f"unknown projection {self.project!r} (choose from {', '.join(PROJECTIONS)})")
        self.fold = FoldMode.parse(self.fold)

    @property
    def file_stem(self) -> str:
        return self.stem or self.kind

    def as_dict(self) -> dict:
        d = asdict(self)
        d["fold"] = self.fold.value
        del d["out_dir"]
        return d


def attribute_pairs(tables: TableSet, kind: str, fold: FoldMode | str = FoldMode.NONE) -> list[tuple[str, str]]:
    """(doc_id, attribute) pairs for one attribute kind; empty values skipped."""
    table_name, column = KINDS[kind]
    table = getattr(tables, table_name)
    ci = table.columns.index(column)
    fold = FoldMode.parse(fold)
    pairs = []
    for row in table.rows:
        val = row[ci]
        if val:
            pairs.append((str(row[0]), fold_case(val, fold)))
    return pairs


def summarize(corpus: Corpus, tables: TableSet) -> dict:
    n = len(corpus)
    with_tag: Counter = Counter()
    for rec in corpus.records:
        with_tag.update(t for t, vals in rec.fields.items() if vals)

    def pct(k: int) -> float:
        return round(100.0 * k / n, 2) if n else 0.0

    docs_addr = {r[0] for r in tables.addresses.rows}
    docs_country = {r[0] for r in tables.addresses.rows if r[3]}
    return {
        "records": n,
        "source_files": list(corpus.source_files),
        "warnings": len(corpus.warnings) + len(tables.warnings),
        "rows": {t.name: len(t) for t in tables.tables()},
        "distinct_full_addresses": len({r[1] for r in tables.addresses.rows}),
        "documents_with_address": {"count": len(docs_addr), "percent": pct(len(docs_addr))},
        "documents_with_country": {"count": len(docs_country), "percent": pct(len(docs_country))},
        "field_coverage": {t: {"count": c, "percent": pct(c)} for t, c in sorted(with_tag.items())},
    }


def _dump_json(obj) -> bytes:
    return (json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n").encode("utf-8")


def write_ingest_outputs(corpus: Corpus, tables: TableSet, out_dir) -> dict[str, Path]:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = tables.save(out)
    summary = out / "summary.json"
    atomic_write(summary, _dump_json(summarize(corpus, tables)))
    warn_path = out / "warnings.txt"
    lines = [str(w) for w in corpus.warnings] + [str(w) for w in tables.warnings]
    atomic_write(warn_path, "".join(f"{ln}\n" for ln in lines).encode("utf-8"))
    paths["summary"] = summary
    paths["warnings"] = warn_path
    return paths


def run_network(tables: TableSet, config: PipelineConfig) -> dict[str, Path]:
    """Write the 2-mode net and, with a projection, the 1-mode outputs."""
    out = Path(config.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    stem = config.file_stem
    pairs = attribute_pairs(tables, config.kind, config.fold)
    bn = graph.build_bipartite(pairs)
    log.info("%s: %d documents x %d attributes, %d pairs", config.kind, bn.n_rows, bn.n_cols, len(pairs))

    paths: dict[str, Path] = {}
    p = out / f"{stem}.2mode.net"
    pajek.write_net(pajek.from_bipartite(bn), p, encoding=config.encoding)
    paths["2mode"] = p
    if config.project == "none":
        return paths

    if config.project == "columns":
        net = graph.project_columns(bn, config.max_pairs)
    else:
        net = graph.project_rows(bn, config.max_pairs)
    n = net.node_count
    part = graph.weak_components(net)

    paths["1mode"] = out / f"{stem}.1mode.net"
    pajek.write_net(pajek.from_one_mode(net), paths["1mode"], encoding=config.encoding)
    paths["components"] = out / f"{stem}.components.clu"
    pajek.write_clu(part, paths["components"], n)
    paths["wdegree"] = out / f"{stem}.wdegree.vec"
    pajek.write_vec(graph.weighted_degree(net), paths["wdegree"], n)
    paths["occurrence"] = out / f"{stem}.occurrence.vec"
    pajek.write_vec(graph.occurrence_vector(bn, config.project), paths["occurrence"], n)
    paths["census"] = out / f"{stem}.census.txt"
    census = graph.component_census(part)
    text = "size\tcount\n" + "".join(f"{s}\t{c}\n" for s, c in census)
    atomic_write(paths["census"], text.encode("ascii"))
    if config.edge_list:
        paths["edges"] = out / f"{stem}.edges.csv"
        graph.write_edge_list(net, paths["edges"])
    return paths


def write_manifest(path, command: str, inputs, config: dict, outputs: dict[str, Path]) -> Path:
    """Record inputs, config and output hashes (no timestamps, for diffing runs)."""
    manifest = {
        "tool": "wosnet",
        "version": __version__,
        "command": command,
        "config": config,
        "inputs": [{"path": os.fspath(p), "sha256": sha256_file(p)} for p in inputs],
        "outputs": {Path(p).name: sha256_file(p) for p in outputs.values()},
    }
    atomic_write(path, _dump_json(manifest))
    return Path(path)
