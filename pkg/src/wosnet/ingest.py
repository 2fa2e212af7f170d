"""Parser for Web-of-Science tagged plain-text exports.

A file looks like::

    FN Clarivate Analytics Web of Science
    VR 1.0
    PT J
    AU Khan, GF
       Leydesdorff, L
    C1 [Khan, G.F.] UNIST, Sch Technol Management, Ulsan, South Korea
    ER

    EF

Each line indented by three spaces continues the previous tag as a new value.
"""
from __future__ import annotations

import io
import logging
import os
import re
from dataclasses import dataclass, field
from typing import BinaryIO, Iterable, NamedTuple

log = logging.getLogger(__name__)

_TAG = re.compile(r"[A-Z0-9]{2}")
_HEADER_TAGS = ("FN", "VR")
_CONTINUATION = "   "
_UTF8_BOM = b"\xef\xbb\xbf"


class WosFormatError(ValueError):
    def __init__(self, message: str, source: str = "<stream>", line: int | None = None):
        self.source = source
        self.line = line
        where = f"{source}:{line}: " if line is not None else f"{source}: "
        super().__init__(where + message)


class ParseWarning(NamedTuple):
    file: str
    line: int
    message: str

    def __str__(self) -> str:
        return f"{self.file}:{self.line}: {self.message}"


@dataclass(frozen=True)
class ParseOptions:
    encoding: str = "auto"  # "auto" tries BOM, then UTF-8, then Latin-1
    strict: bool = False  # raise on the first malformed line instead of warning


@dataclass(frozen=True)
class WosRecord:
    record_index: int  # 1-based position within its source file
    doc_id: int
    fields: dict[str, list[str]]
    source: str = "<stream>"

    def get(self, tag: str) -> list[str]:
        return self.fields.get(tag, [])

    def first(self, tag: str, default: str = "") -> str:
        values = self.fields.get(tag)
        return values[0] if values else default

    def joined(self, tag: str) -> str:
        """Free-text tags (TI, AB) wrapped over several lines, re-joined."""
        return " ".join(self.fields.get(tag, []))


@dataclass(frozen=True)
class Corpus:
    records: list[WosRecord] = field(default_factory=list)
    source_files: list[str] = field(default_factory=list)
    warnings: list[ParseWarning] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records)


def decode(data: bytes, encoding: str = "auto") -> str:
    if encoding != "auto":
        return data.decode(encoding)
    if data.startswith(_UTF8_BOM):
        return data[len(_UTF8_BOM):].decode("utf-8", errors="replace")
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        return data.decode("latin-1")


def _read_bytes(stream) -> tuple[bytes, str]:
    if isinstance(stream, (bytes, bytearray)):
        return bytes(stream), "<bytes>"
    if isinstance(stream, (str, os.PathLike)):
        with open(stream, "rb") as fh:
            return fh.read(), os.fspath(stream)
    data = stream.read()
    if isinstance(data, str):
        data = data.encode("utf-8")
    return data, getattr(stream, "name", "<stream>")


def parse_export(stream: BinaryIO | bytes | str | os.PathLike,
                 options: ParseOptions | None = None,
                 *, source: str | None = None, first_doc_id: int = 1) -> Corpus:
    """Parse one export (or several concatenated exports) into a Corpus.

    ``stream`` is a binary file object, raw bytes, or a path. Unreadable
    input raises ``OSError``.
    """
    options = options or ParseOptions()
    data, name = _read_bytes(stream)
    name = source or name
    text = decode(data, options.encoding)

    records: list[WosRecord] = []
    warnings: list[ParseWarning] = []
    fields: dict[str, list[str]] | None = None
    tag: str | None = None
    record_start = 0
    saw_content = False
    first_content_line = None
    saw_ef = False
    file_index = 0

    def warn(lineno: int, msg: str) -> None:
        if options.strict:
            raise WosFormatError(msg, name, lineno)
        warnings.append(ParseWarning(name, lineno, msg))

    for lineno, raw in enumerate(io.StringIO(text, newline=None), start=1):
        line = raw.rstrip("\r\n")
        if not line.strip():
            continue
        if line.startswith(_CONTINUATION):
            if fields is None or tag is None:
                warn(lineno, "continuation line outside a record")
                continue
            fields[tag].append(line.strip(" \t"))
            continue

        head = line[:2]
        if not _TAG.fullmatch(head) or (len(line) > 2 and line[2] != " "):
            warn(lineno, f"malformed line {line[:40]!r}")
            continue
        value = line[3:].strip(" \t")

        if fields is None:
            if head in _HEADER_TAGS:
                saw_ef = False
                continue
            if head == "EF":
                saw_ef = True
                continue
            if head == "ER":
                warn(lineno, "ER without a record")
                continue
            saw_content = True
            if first_content_line is None:
                first_content_line = lineno
            fields = {}
            record_start = lineno
            saw_ef = False

        if head == "ER":
            file_index += 1
            records.append(WosRecord(file_index, first_doc_id + len(records), fields, name))
            fields, tag = None, None
            continue
        if head == "EF":
            warn(lineno, f"record starting at line {record_start} not terminated by ER")
            fields, tag = None, None
            saw_ef = True
            continue

        tag = head
        values = fields.setdefault(tag, [])
        if value:
            values.append(value)

    if fields is not None:
        warn(record_start, "record not terminated by ER before end of input")
    if records and not saw_ef:
        # EF absence is never fatal, even in strict mode
        warnings.append(ParseWarning(name, lineno if text else 0, "missing EF terminator"))

    if not records and saw_content:
        bad = warnings[0].line if warnings else first_content_line
        raise WosFormatError("no records parsed", name, bad)
    if not records and warnings and not saw_content:
        # only malformed lines, no tagged content at all
        raise WosFormatError("no records parsed", name, warnings[0].line)

    log.debug("parsed %d records from %s (%d warnings)", len(records), name, len(warnings))
    return Corpus(records, [name], warnings)


def parse_files(paths: Iterable[str | os.PathLike], options: ParseOptions | None = None) -> Corpus:
    """Parse several export files into one corpus with dense doc ids."""
    records: list[WosRecord] = []
    names: list[str] = []
    warnings: list[ParseWarning] = []
    for path in paths:
        part = parse_export(path, options, first_doc_id=len(records) + 1)
        records.extend(part.records)
        names.extend(part.source_files)
        warnings.extend(part.warnings)
    return Corpus(records, names, warnings)


def concat(corpora: Iterable[Corpus]) -> Corpus:
    """Join independently parsed corpora, renumbering doc ids 1..N."""
    records: list[WosRecord] = []
    names: list[str] = []
    warnings: list[ParseWarning] = []
    for c in corpora:
        for r in c.records:
            records.append(WosRecord(r.record_index, len(records) + 1, r.fields, r.source))
        names.extend(c.source_files)
        warnings.extend(c.warnings)
    return Corpus(records, names, warnings)


def format_record(record: WosRecord) -> str:
    """Canonical tagged text for one record, ``ER`` line included."""
    out = []
    for tag, values in record.fields.items():
        if not values:
            out.append(tag)
            continue
        out.append(f"{tag} {values[0]}")
        out.extend(_CONTINUATION + v for v in values[1:])
    out.append("ER")
    return "\n".join(out) + "\n"


def format_corpus(records: Iterable[WosRecord]) -> str:
    parts = ["FN Clarivate Analytics Web of Science\nVR 1.0\n"]
    for r in records:
        parts.append(format_record(r))
        parts.append("\n")
    parts.append("EF\n")
    return "".join(parts)


def split_addresses(record: WosRecord) -> list[tuple[str, list[str]]]:
    """One (address, author_scope) row per C1 value, duplicates kept."""
    rows = []
    for value in record.get("C1"):
        scope: list[str] = []
        addr = value
        if value.startswith("["):
            close = value.find("]")
            if close != -1:
                scope = [a.strip(" \t") for a in value[1:close].split(";") if a.strip(" \t")]
                addr = value[close + 1:]
        rows.append((addr.strip(" \t"), scope))
    return rows
