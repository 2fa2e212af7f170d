"""Pajek ``.net``, ``.clu`` and ``.vec`` files.

Written files use one fixed layout so that identical networks give identical
bytes::

    *Vertices 3 1
    1 "d1"
    2 "UNIST"
    3 "KAIST"
    *Edges
    1 2 1
    1 3 1

Two-mode files declare the number of row vertices as the second number on the
``*Vertices`` line; rows come first. Labels are always quoted, with ``"``
doubled inside. Weights are always written.
"""
from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from ._io import atomic_write
from .graph import BipartiteNetwork, OneModeNetwork, from_indices

log = logging.getLogger(__name__)

ONE_MODE = "one-mode"
TWO_MODE = "two-mode"
_VERTEX_LINE = re.compile(r"([^ \t]+)[ \t]*(.*)", re.S)


class PajekError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class PajekValidationError(PajekError):
    """Document violates the format invariants; nothing was written."""


@dataclass
class PajekDocument:
    kind: str
    labels: list[str]  # vertex i (1-based) has label labels[i - 1]
    edges: list[tuple[int, int, int | float]] = field(default_factory=list)
    n_rows: int = 0  # two-mode only
    warnings: list[str] = field(default_factory=list, compare=False, repr=False)

    @property
    def n_vertices(self) -> int:
        return len(self.labels)

    @property
    def vertices(self) -> list[tuple[int, str]]:
        return list(enumerate(self.labels, start=1))

    def validate(self) -> None:
        n = len(self.labels)
        if self.kind not in (ONE_MODE, TWO_MODE):
            raise PajekValidationError(f"unknown kind {self.kind!r}")
        for i, lab in enumerate(self.labels, start=1):
            if not isinstance(lab, str) or not lab:
                raise PajekValidationError(f"vertex {i} has an empty label")
            if "\n" in lab or "\r" in lab:
                raise PajekValidationError(f"vertex {i} label contains a line break")
        if self.kind == TWO_MODE and not 0 <= self.n_rows <= n:
            raise PajekValidationError(f"row count {self.n_rows} outside 0..{n}")
        for k, (u, v, w) in enumerate(self.edges, start=1):
            if not (1 <= u <= n and 1 <= v <= n):
                raise PajekValidationError(f"edge {k} ({u}, {v}) out of range 1..{n}")
            if self.kind == TWO_MODE and not (u <= self.n_rows < v):
                raise PajekValidationError(f"edge {k} ({u}, {v}) does not join a row to a column")
            if isinstance(w, bool) or not isinstance(w, (int, float, np.integer, np.floating)):
                raise PajekValidationError(f"edge {k} weight {w!r} is not a number")


def quote(label: str) -> str:
    return '"' + label.replace('"', '""') + '"'


def _num(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))  # "2.0" stays distinct from "2" across round trips


def _parse_num(tok: str, line: int) -> int | float:
    try:
        return int(tok)
    except ValueError:
        pass
    try:
        return float(tok)
    except ValueError:
        raise PajekError(f"not a number: {tok!r}", line) from None


def format_net(doc: PajekDocument) -> str:
    doc.validate()
    n = doc.n_vertices
    head = f"*Vertices {n} {doc.n_rows}" if doc.kind == TWO_MODE else f"*Vertices {n}"
    lines = [head]
    lines.extend(f"{i} {quote(lab)}" for i, lab in enumerate(doc.labels, start=1))
    lines.append("*Edges")
    lines.extend(f"{u} {v} {_num(w)}" for u, v, w in doc.edges)
    return "\n".join(lines) + "\n"


def write_net(doc: PajekDocument, destination, encoding: str = "utf-8") -> int:
    """Validate then write; returns the number of bytes written."""
    data = format_net(doc).encode(encoding)
    return atomic_write(destination, data)


def _split_label(rest: str, line: int) -> tuple[str, str]:
    """Split a vertex line remainder into (label, trailing text)."""
    rest = rest.lstrip(" \t")
    if not rest:
        raise PajekError("vertex line has no label", line)
    if rest[0] != '"':
        tok, *tail = rest.split(None, 1)
        return tok, tail[0] if tail else ""
    out = []
    i = 1
    while True:
        j = rest.find('"', i)
        if j == -1:
            raise PajekError("unterminated quoted label", line)
        out.append(rest[i:j])
        if j + 1 < len(rest) and rest[j + 1] == '"':
            out.append('"')
            i = j + 2
            continue
        return "".join(out), rest[j + 1:]


def _read_text(stream, encoding: str) -> str:
    if isinstance(stream, (bytes, bytearray)):
        data = bytes(stream)
    elif isinstance(stream, (str, os.PathLike)):
        with open(stream, "rb") as fh:
            data = fh.read()
    else:
        data = stream.read()
        if isinstance(data, str):
            return data
    if data.startswith(b"\xef\xbb\xbf"):
        data = data[3:]
    try:
        return data.decode(encoding)
    except UnicodeDecodeError as exc:
        raise PajekError(f"cannot decode as {encoding}: {exc}") from None


def read_net(stream, encoding: str = "utf-8") -> PajekDocument:
    """Parse a ``.net`` file (path, bytes or binary stream).

    Accepts CRLF, ``%`` comments, unquoted labels and extra vertex fields
    (coordinates are ignored with a warning). ``*Arcs`` are symmetrised:
    the edge weight of {u, v} is w(u->v) + w(v->u).
    """
    text = _read_text(stream, encoding)
    warnings: list[str] = []
    n = None
    n_rows = 0
    kind = ONE_MODE
    labels: list[str | None] = []
    edges: list[tuple[int, int, int | float]] = []
    arcs: dict[tuple[int, int], int] = {}  # pair -> position in edges
    section = None

    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip(" \t\r")
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            parts = line.split()
            key = parts[0].lower()
            if key == "*vertices":
                if n is not None:
                    raise PajekError("second *Vertices section", lineno)
                if len(parts) not in (2, 3):
                    raise PajekError("*Vertices needs a vertex count", lineno)
                try:
                    n = int(parts[1])
                    if len(parts) == 3:
                        n_rows = int(parts[2])
                        kind = TWO_MODE
                except ValueError:
                    raise PajekError(f"bad *Vertices line {line!r}", lineno) from None
                if n < 0 or not 0 <= n_rows <= n:
                    raise PajekError(f"bad vertex counts in {line!r}", lineno)
                labels = [None] * n
                section = "vertices"
            elif key in ("*edges", "*arcs"):
                if n is None:
                    raise PajekError(f"{parts[0]} before *Vertices", lineno)
                section = key[1:]
                if section == "arcs":
                    warnings.append(f"line {lineno}: *Arcs symmetrised into undirected edges")
            elif key in ("*edgeslist", "*arcslist"):
                raise PajekError(f"{parts[0]} sections are not supported", lineno)
            elif key == "*network":
                continue
            else:
                raise PajekError(f"unsupported section {parts[0]}", lineno)
            continue

        if section is None:
            raise PajekError("data before *Vertices", lineno)
        head, rest = _VERTEX_LINE.match(line).groups()
        if section == "vertices":
            try:
                idx = int(head)
            except ValueError:
                raise PajekError(f"bad vertex index {head!r}", lineno) from None
            if not 1 <= idx <= n:
                raise PajekError(f"vertex {idx} outside 1..{n}", lineno)
            if labels[idx - 1] is not None:
                raise PajekError(f"vertex {idx} listed twice", lineno)
            label, tail = _split_label(rest, lineno)
            if not label:
                raise PajekError(f"vertex {idx} has an empty label", lineno)
            if tail.strip():
                warnings.append(f"line {lineno}: extra vertex fields ignored")
            labels[idx - 1] = label
            continue

        toks = line.split()
        if len(toks) < 2:
            raise PajekError(f"edge line needs two vertices: {line!r}", lineno)
        try:
            a, b = int(toks[0]), int(toks[1])
        except ValueError:
            raise PajekError(f"bad edge endpoints in {line!r}", lineno) from None
        w = _parse_num(toks[2], lineno) if len(toks) > 2 else 1
        if len(toks) > 3:
            warnings.append(f"line {lineno}: extra edge fields ignored")
        if not (1 <= a <= n and 1 <= b <= n):
            raise PajekError(f"edge ({a}, {b}) outside 1..{n}", lineno)
        if kind == TWO_MODE:
            if (a <= n_rows) == (b <= n_rows):
                raise PajekError(f"edge ({a}, {b}) does not join a row to a column", lineno)
            if a > b:
                a, b = b, a
        if section == "arcs":
            key = (a, b) if a <= b else (b, a)
            pos = arcs.get(key)
            if pos is None:
                arcs[key] = len(edges)
                edges.append((key[0], key[1], w))
            else:
                edges[pos] = (key[0], key[1], edges[pos][2] + w)
        else:
            edges.append((a, b, w))

    if n is None:
        raise PajekError("no *Vertices section")
    missing = [i + 1 for i, lab in enumerate(labels) if lab is None]
    if missing:
        warnings.append(f"{len(missing)} vertices without a label line; index used as label")
        for i in missing:
            labels[i - 1] = str(i)
    for msg in warnings:
        log.debug(msg)
    return PajekDocument(kind, labels, edges, n_rows if kind == TWO_MODE else 0, warnings)


def _format_column(values: Sequence, n: int | None, what: str) -> str:
    if n is not None and len(values) != n:
        raise PajekValidationError(f"{what} has {len(values)} entries, network has {n} vertices")
    out = [f"*Vertices {len(values)}"]
    out.extend(_num(x) for x in (values.tolist() if hasattr(values, "tolist") else values))
    return "\n".join(out) + "\n"


def write_clu(partition, destination, n_vertices: int | None = None) -> int:
    vals = np.asarray(partition)
    if vals.size and (vals.dtype.kind not in "iu" or vals.min() < 0):
        raise PajekValidationError("partition entries must be non-negative integers")
    return atomic_write(destination, _format_column(vals, n_vertices, "partition").encode("ascii"))


def write_vec(vector, destination, n_vertices: int | None = None) -> int:
    vals = vector if isinstance(vector, list) else np.asarray(vector)
    return atomic_write(destination, _format_column(vals, n_vertices, "vector").encode("ascii"))


def _read_column(stream) -> list[int | float]:
    text = _read_text(stream, "ascii")
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("%")]
    if not lines or not lines[0].lower().startswith("*vertices"):
        raise PajekError("missing *Vertices header", 1)
    parts = lines[0].split()
    try:
        n = int(parts[1])
    except (IndexError, ValueError):
        raise PajekError("bad *Vertices header", 1) from None
    vals = [_parse_num(tok, i) for i, tok in enumerate(lines[1:], start=2)]
    if len(vals) != n:
        raise PajekError(f"header declares {n} values, found {len(vals)}")
    return vals


def read_clu(stream) -> list[int]:
    vals = _read_column(stream)
    if any(not isinstance(x, int) or x < 0 for x in vals):
        raise PajekError("partition values must be non-negative integers")
    return vals


def read_vec(stream) -> list[int | float]:
    return _read_column(stream)


def from_bipartite(bn: BipartiteNetwork) -> PajekDocument:
    nr = bn.n_rows
    edges = [(r + 1, nr + c + 1, m) for r, c, m in bn.entries()]
    return PajekDocument(TWO_MODE, list(bn.row_labels) + list(bn.col_labels), edges, nr)


def from_one_mode(net: OneModeNetwork) -> PajekDocument:
    edges = [(a + 1, b + 1, w) for a, b, w in net.edges]
    return PajekDocument(ONE_MODE, list(net.labels), edges)


def to_bipartite(doc: PajekDocument) -> BipartiteNetwork:
    if doc.kind != TWO_MODE:
        raise PajekError("not a two-mode document")
    nr = doc.n_rows
    rows = [u - 1 for u, _, _ in doc.edges]
    cols = [v - nr - 1 for _, v, _ in doc.edges]
    counts = [int(w) for _, _, w in doc.edges]
    return from_indices(doc.labels[:nr], doc.labels[nr:], rows, cols, counts)


def to_one_mode(doc: PajekDocument) -> OneModeNetwork:
    return OneModeNetwork.from_edges(doc.labels, ((u - 1, v - 1, w) for u, v, w in doc.edges))
