"""Two-mode document x attribute networks and their weighted projections.

The incidence matrix ``A`` (documents x attributes, integer multiplicities)
is stored sparsely in CSR form. Projections give the off-diagonal part of
``A.T @ A`` (attributes) or ``A @ A.T`` (documents) without ever building a
dense matrix, so the number of attributes is bounded only by memory.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from ._io import atomic_write

DEFAULT_MAX_PAIRS = 200_000_000


class ProjectionCapError(MemoryError):
    """Estimated pair count of a projection exceeds the configured cap."""

    def __init__(self, estimate: int, cap: int, hub_label: str, hub_degree: int, hub_kind: str):
        self.estimate = estimate
        self.cap = cap
        self.hub_label = hub_label
        self.hub_degree = hub_degree
        super().__init__(
            f"projection would accumulate ~{estimate:,} pairs (cap {cap:,}); "
            f"dominant {hub_kind} {hub_label!r} has {hub_degree:,} distinct entries"
        )


def _i64(a) -> np.ndarray:
    return np.ascontiguousarray(a, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class BipartiteNetwork:
    row_labels: list[str]
    col_labels: list[str]
    indptr: np.ndarray  # CSR over rows, column indices ascending within a row
    indices: np.ndarray
    counts: np.ndarray  # multiplicity of each stored (row, col) entry

    @property
    def n_rows(self) -> int:
        return len(self.row_labels)

    @property
    def n_cols(self) -> int:
        return len(self.col_labels)

    @property
    def n_entries(self) -> int:
        return int(self.indices.shape[0])

    @property
    def total_multiplicity(self) -> int:
        return int(self.counts.sum())

    def row_indices(self) -> np.ndarray:
        return np.repeat(np.arange(self.n_rows, dtype=np.int64), np.diff(self.indptr))

    def entries(self) -> Iterable[tuple[int, int, int]]:
        """(row, col, multiplicity) triples in row-major order."""
        return zip(self.row_indices().tolist(), self.indices.tolist(), self.counts.tolist())

    def multiplicity(self, row: int, col: int) -> int:
        lo, hi = self.indptr[row], self.indptr[row + 1]
        k = lo + np.searchsorted(self.indices[lo:hi], col)
        if k < hi and self.indices[k] == col:
            return int(self.counts[k])
        return 0

    def to_dense(self) -> np.ndarray:
        m = np.zeros((self.n_rows, self.n_cols), dtype=np.int64)
        m[self.row_indices(), self.indices] = self.counts
        return m

    def csc(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Column-major view: (colptr, row indices ascending, counts)."""
        rows = self.row_indices()
        order = np.lexsort((rows, self.indices))
        colptr = np.zeros(self.n_cols + 1, dtype=np.int64)
        np.cumsum(np.bincount(self.indices, minlength=self.n_cols), out=colptr[1:])
        return colptr, rows[order], self.counts[order]

    def __eq__(self, other) -> bool:
        if not isinstance(other, BipartiteNetwork):
            return NotImplemented
        return (self.row_labels == other.row_labels and self.col_labels == other.col_labels
                and np.array_equal(self.indptr, other.indptr)
                and np.array_equal(self.indices, other.indices)
                and np.array_equal(self.counts, other.counts))


@dataclass(frozen=True, eq=False)
class OneModeNetwork:
    labels: list[str]
    u: np.ndarray  # u < v, sorted by (u, v)
    v: np.ndarray
    w: np.ndarray

    @property
    def node_count(self) -> int:
        return len(self.labels)

    @property
    def edge_count(self) -> int:
        return int(self.u.shape[0])

    @property
    def edges(self) -> list[tuple[int, int, int]]:
        return list(zip(self.u.tolist(), self.v.tolist(), self.w.tolist()))

    def weight_dict(self) -> dict[tuple[int, int], int]:
        return {(a, b): c for a, b, c in self.edges}

    def __eq__(self, other) -> bool:
        if not isinstance(other, OneModeNetwork):
            return NotImplemented
        return (self.labels == other.labels and np.array_equal(self.u, other.u)
                and np.array_equal(self.v, other.v) and np.array_equal(self.w, other.w))

    @classmethod
    def from_edges(cls, labels: Sequence[str], edges: Iterable[tuple[int, int, int]]) -> "OneModeNetwork":
        """Normalise arbitrary (a, b, w) triples: loops dropped, duplicates summed."""
        acc: dict[tuple[int, int], int] = {}
        n = len(labels)
        for a, b, w in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise IndexError(f"edge ({a}, {b}) out of range for {n} nodes")
            if a == b or w == 0:
                continue
            key = (a, b) if a < b else (b, a)
            acc[key] = acc.get(key, 0) + w
        keys = sorted(acc)
        u = _i64([k[0] for k in keys])
        v = _i64([k[1] for k in keys])
        w = _i64([acc[k] for k in keys])
        return cls(list(labels), u, v, w)

    def validate(self) -> None:
        n = self.node_count
        if len(set(self.labels)) != n:
            raise ValueError("duplicate node labels")
        if self.edge_count:
            if not (self.u < self.v).all():
                raise ValueError("edges must satisfy u < v")
            if self.u.min() < 0 or self.v.max() >= n:
                raise ValueError("edge index out of range")
            if (self.w < 1).any():
                raise ValueError("edge weights must be >= 1")
            keys = self.u * max(n, 1) + self.v
            if (np.diff(keys) <= 0).any():
                raise ValueError("edges must be unique and sorted")


def build_bipartite(pairs: Iterable[tuple[str, str]]) -> BipartiteNetwork:
    """Intern labels in first-encounter order and count (row, col) multiplicities."""
    row_ix: dict[str, int] = {}
    col_ix: dict[str, int] = {}
    rs: list[int] = []
    cs: list[int] = []
    for r, c in pairs:
        i = row_ix.get(r)
        if i is None:
            i = row_ix[r] = len(row_ix)
        j = col_ix.get(c)
        if j is None:
            j = col_ix[c] = len(col_ix)
        rs.append(i)
        cs.append(j)
    return from_indices(list(row_ix), list(col_ix), rs, cs)


def from_indices(row_labels: list[str], col_labels: list[str], rows, cols, counts=None) -> BipartiteNetwork:
    """Network from parallel index arrays (optionally with per-item counts)."""
    nr, nc = len(row_labels), len(col_labels)
    rows = _i64(rows)
    cols = _i64(cols)
    if rows.shape != cols.shape:
        raise ValueError("rows and cols differ in length")
    if rows.size and (rows.min() < 0 or rows.max() >= nr or cols.min() < 0 or cols.max() >= nc):
        raise IndexError("entry index out of range")
    keys = rows * max(nc, 1) + cols
    if counts is None:
        uniq, mult = np.unique(keys, return_counts=True)
    else:
        counts = _i64(counts)
        if (counts < 1).any():
            raise ValueError("multiplicities must be >= 1")
        uniq, inv = np.unique(keys, return_inverse=True)
        mult = np.bincount(inv.ravel(), weights=counts, minlength=uniq.size).astype(np.int64)
    ur = uniq // max(nc, 1)
    indptr = np.zeros(nr + 1, dtype=np.int64)
    np.cumsum(np.bincount(ur, minlength=nr), out=indptr[1:])
    return BipartiteNetwork(list(row_labels), list(col_labels), indptr,
                            _i64(uniq % max(nc, 1)), _i64(mult))


def estimate_pairs(bn: BipartiteNetwork, mode: str = "columns") -> tuple[int, int, int]:
    """(pair estimate, index of the dominant hub, its degree).

    Hubs are documents for a columns projection and attributes for rows.
    """
    if mode == "columns":
        k = np.diff(bn.indptr)
    else:
        k = np.bincount(bn.indices, minlength=bn.n_cols)
    if k.size == 0:
        return 0, -1, 0
    est = int((k * (k - 1) // 2).sum())
    top = int(np.argmax(k))
    return est, top, int(k[top])


def _check_cap(bn: BipartiteNetwork, mode: str, max_pairs: int | None) -> None:
    if max_pairs is None:
        return
    est, top, deg = estimate_pairs(bn, mode)
    if est > max_pairs:
        if mode == "columns":
            raise ProjectionCapError(est, max_pairs, bn.row_labels[top], deg, "document")
        raise ProjectionCapError(est, max_pairs, bn.col_labels[top], deg, "attribute")


def project_columns(bn: BipartiteNetwork, max_pairs: int | None = DEFAULT_MAX_PAIRS) -> OneModeNetwork:
    """Attribute co-occurrence: weight(a, b) = sum over documents of m[d,a] * m[d,b]."""
    _check_cap(bn, "columns", max_pairs)
    colptr, rows, ccounts = bn.csc()
    u, v, w = kernels.cooccurrence(colptr, rows, ccounts, _i64(bn.indptr), _i64(bn.indices),
                                   _i64(bn.counts), bn.n_cols)
    return OneModeNetwork(list(bn.col_labels), u, v, w)


def project_rows(bn: BipartiteNetwork, max_pairs: int | None = DEFAULT_MAX_PAIRS) -> OneModeNetwork:
    """Document coupling: weight(d, e) = sum over attributes of m[d,a] * m[e,a]."""
    _check_cap(bn, "rows", max_pairs)
    colptr, rows, ccounts = bn.csc()
    u, v, w = kernels.cooccurrence(_i64(bn.indptr), _i64(bn.indices), _i64(bn.counts),
                                   colptr, rows, ccounts, bn.n_rows)
    return OneModeNetwork(list(bn.row_labels), u, v, w)


def occurrence_vector(bn: BipartiteNetwork, mode: str = "columns") -> np.ndarray:
    if mode == "columns":
        return np.bincount(bn.indices, weights=bn.counts, minlength=bn.n_cols).astype(np.int64)
    if mode == "rows":
        return np.bincount(bn.row_indices(), weights=bn.counts, minlength=bn.n_rows).astype(np.int64)
    raise ValueError(f"mode must be 'rows' or 'columns', not {mode!r}")


def weighted_degree(net: OneModeNetwork) -> np.ndarray:
    n = net.node_count
    deg = np.zeros(n, dtype=np.int64)
    np.add.at(deg, net.u, net.w)
    np.add.at(deg, net.v, net.w)
    return deg


def weak_components(net: OneModeNetwork) -> np.ndarray:
    """Component id per node; 0 is the largest, ties broken by smallest member."""
    n = net.node_count
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    roots = kernels.component_roots(n, _i64(net.u), _i64(net.v))
    _, first, inv, sizes = np.unique(roots, return_index=True, return_inverse=True, return_counts=True)
    order = np.lexsort((first, -sizes))
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size)
    return rank[inv.ravel()].astype(np.int64)


def extract_component(net: OneModeNetwork, partition, comp_id: int) -> OneModeNetwork:
    part = np.asarray(partition)
    if part.shape[0] != net.node_count:
        raise ValueError("partition length differs from node count")
    keep = part == comp_id
    new_index = np.full(net.node_count, -1, dtype=np.int64)
    new_index[keep] = np.arange(int(keep.sum()))
    labels = [lab for lab, k in zip(net.labels, keep.tolist()) if k]
    sel = keep[net.u] & keep[net.v] if net.edge_count else np.zeros(0, dtype=bool)
    return OneModeNetwork(labels, new_index[net.u[sel]], new_index[net.v[sel]], net.w[sel].copy())


def component_census(partition) -> list[tuple[int, int]]:
    """[(size, how many components of that size)], largest size first."""
    part = np.asarray(partition)
    if part.size == 0:
        return []
    sizes = np.bincount(part)
    sizes = sizes[sizes > 0]
    vals, cnt = np.unique(sizes, return_counts=True)
    return [(int(s), int(c)) for s, c in zip(vals[::-1], cnt[::-1])]


def contract(net: OneModeNetwork, key) -> OneModeNetwork:
    """Merge nodes whose ``key(label)`` coincide; weights summed, loops dropped."""
    index: dict[str, int] = {}
    mapping = []
    for lab in net.labels:
        k = key(lab)
        mapping.append(index.setdefault(k, len(index)))
    m = np.asarray(mapping, dtype=np.int64)
    return OneModeNetwork.from_edges(list(index), zip(m[net.u].tolist(), m[net.v].tolist(), net.w.tolist()))


def write_edge_list(net: OneModeNetwork, destination) -> int:
    """CSV ``u_label,v_label,weight`` with a header row; returns edges written."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(("u_label", "v_label", "weight"))
    labels = net.labels
    w.writerows((labels[a], labels[b], c) for a, b, c in net.edges)
    atomic_write(destination, buf.getvalue().encode("utf-8"))
    return net.edge_count
