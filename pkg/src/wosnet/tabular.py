"""Relational tables keyed by document number, and their CSV exchange.

Four tables: ``documents``, ``authors``, ``addresses`` (with institution and
country columns) and ``citations``. CSV is written with RFC-4180 quoting so
the files open cleanly in Excel.
"""
from __future__ import annotations

import csv
import io
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from . import normalize
from ._io import atomic_write
from .ingest import Corpus, ParseWarning, split_addresses
from .normalize import FoldMode, fold_case

log = logging.getLogger(__name__)

SCHEMA: dict[str, tuple[str, ...]] = {
    "documents": ("doc_id", "source_title", "pub_year", "title"),
    "authors": ("doc_id", "author_name", "position"),
    "addresses": ("doc_id", "full_address", "institution", "country"),
    "citations": ("doc_id", "cited_ref"),
}
_INT_COLUMNS = {"doc_id", "position"}


class PairFormatError(ValueError):
    def __init__(self, message: str, line: int):
        self.line = line
        super().__init__(f"line {line}: {message}")


@dataclass
class Table:
    name: str
    columns: tuple[str, ...]
    rows: list[tuple] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.rows)

    def column(self, name: str) -> list:
        i = self.columns.index(name)
        return [r[i] for r in self.rows]


@dataclass
class TableSet:
    documents: Table
    authors: Table
    addresses: Table
    citations: Table
    warnings: list[ParseWarning] = field(default_factory=list, compare=False)

    def tables(self) -> list[Table]:
        return [self.documents, self.authors, self.addresses, self.citations]

    def check_integrity(self) -> None:
        ids = {r[0] for r in self.documents.rows}
        for t in (self.authors, self.addresses, self.citations):
            for r in t.rows:
                if r[0] not in ids:
                    raise ValueError(f"{t.name}: doc_id {r[0]} not in documents")

    def save(self, directory: str | os.PathLike) -> dict[str, Path]:
        out = Path(directory)
        out.mkdir(parents=True, exist_ok=True)
        paths = {}
        for t in self.tables():
            p = out / f"{t.name}.csv"
            export_csv(t, p)
            paths[t.name] = p
        return paths

    @classmethod
    def load(cls, directory: str | os.PathLike) -> "TableSet":
        d = Path(directory)
        return cls(**{name: import_csv(d / f"{name}.csv", name) for name in SCHEMA})


def _empty(name: str) -> Table:
    return Table(name, SCHEMA[name], [])


def build_tables(corpus: Corpus) -> TableSet:
    docs, authors, addresses, citations = (_empty(n) for n in SCHEMA)
    warnings: list[ParseWarning] = []
    for rec in corpus.records:
        d = rec.doc_id
        docs.rows.append((d, rec.joined("SO"), rec.first("PY"), rec.joined("TI")))
        for pos, name in enumerate(rec.get("AU"), start=1):
            authors.rows.append((d, name, pos))
        for addr, _scope in split_addresses(rec):
            try:
                inst = normalize.extract_institution(addr)
            except normalize.AddressError as exc:
                warnings.append(ParseWarning(rec.source, rec.record_index, f"doc {d}: {exc}"))
                continue
            try:
                country = normalize.extract_country(addr)
            except normalize.AddressError:
                country = ""
            addresses.rows.append((d, addr, inst, country))
        for ref in rec.get("CR"):
            citations.rows.append((d, ref))
    return TableSet(docs, authors, addresses, citations, warnings)


def _to_csv_text(table: Table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(table.columns)
    try:
        w.writerows(table.rows)
    except csv.Error as exc:
        raise ValueError(f"{table.name}: cannot write row as CSV ({exc})") from None
    return buf.getvalue()


def export_csv(table: Table, destination: str | os.PathLike) -> int:
    """Write ``table`` as UTF-8 CSV; returns the number of data rows."""
    atomic_write(destination, _to_csv_text(table).encode("utf-8"))
    return len(table.rows)


def import_csv(source: str | os.PathLike, name: str | None = None) -> Table:
    path = Path(source)
    name = name or path.stem
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        try:
            header = tuple(next(reader))
        except StopIteration:
            raise ValueError(f"{path}: empty CSV, header expected") from None
        conv = [int if c in _INT_COLUMNS else str for c in header]
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if len(row) != len(header):
                raise ValueError(f"{path}:{lineno}: expected {len(header)} fields, got {len(row)}")
            rows.append(tuple(f(v) for f, v in zip(conv, row)))
    return Table(name, header, rows)


def import_pairs(source, sep: str = ",", fold: FoldMode | str = FoldMode.NONE,
                 strict: bool = True, header: bool = False,
                 warnings: list[str] | None = None) -> list[tuple[str, str]]:
    """Read a two-column text file into (row_label, column_label) pairs.

    ``source`` is a path, a text stream or a str holding the file content
    (a str containing no newline and naming an existing file is a path).
    Folding applies to the column label only. In lenient mode bad lines are
    skipped and described in ``warnings``.
    """
    if isinstance(source, os.PathLike) or (isinstance(source, str) and "\n" not in source
                                           and os.path.exists(source)):
        with open(source, encoding="utf-8-sig", newline="") as fh:
            text = fh.read()
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
        if isinstance(text, bytes):
            text = text.decode("utf-8-sig")
    fold = FoldMode.parse(fold)
    pairs = []
    reader = csv.reader(io.StringIO(text, newline=""), delimiter=sep)
    for row in reader:
        lineno = reader.line_num
        if header and lineno == 1:
            continue
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 2 or not row[0].strip(" \t") or not row[1].strip(" \t"):
            msg = f"expected 2 non-empty fields, got {row!r}"
            if strict:
                raise PairFormatError(msg, lineno)
            if warnings is not None:
                warnings.append(f"line {lineno}: {msg}")
            log.warning("line %d: %s", lineno, msg)
            continue
        r, c = row[0].strip(" \t"), row[1].strip(" \t")
        pairs.append((r, fold_case(c, fold)))
    return pairs


def write_pairs(pairs: Iterable[tuple[str, str]], destination, sep: str = ",") -> int:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=sep, lineterminator="\n")
    n = 0
    for p in pairs:
        w.writerow(p)
        n += 1
    atomic_write(destination, buf.getvalue().encode("utf-8"))
    return n
