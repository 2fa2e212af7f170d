"""Pure-Python kernels, used when the compiled extension is unavailable.

Same signatures and outputs as ``_ckernels``.
"""
from __future__ import annotations

import numpy as np


def cooccurrence(outer_ptr, outer_idx, outer_val, inner_ptr, inner_idx, inner_val, n):
    """Off-diagonal upper triangle of ``B @ B.T`` for a sparse incidence ``B``.

    ``outer_*`` is ``B`` in CSR form (node -> hubs), ``inner_*`` is ``B.T``
    (hub -> nodes, indices ascending). Row-by-row accumulation into a dense
    scratch vector of length ``n``; returns (u, v, w) sorted by (u, v).
    """
    optr = outer_ptr.tolist()
    oidx = outer_idx.tolist()
    oval = outer_val.tolist()
    iptr = inner_ptr.tolist()
    iidx = inner_idx.tolist()
    ival = inner_val.tolist()
    acc = [0] * n
    us: list[int] = []
    vs: list[int] = []
    ws: list[int] = []
    for i in range(n):
        touched = []
        for p in range(optr[i], optr[i + 1]):
            h = oidx[p]
            x = oval[p]
            q = iptr[h + 1] - 1
            lo = iptr[h]
            while q >= lo:
                j = iidx[q]
                if j <= i:
                    break
                if acc[j] == 0:
                    touched.append(j)
                acc[j] += x * ival[q]
                q -= 1
        if touched:
            touched.sort()
            for j in touched:
                us.append(i)
                vs.append(j)
                ws.append(acc[j])
                acc[j] = 0
    return (np.asarray(us, dtype=np.int64), np.asarray(vs, dtype=np.int64),
            np.asarray(ws, dtype=np.int64))


def component_roots(n, u, v):
    """Union-find over undirected edges; returns one root id per node."""
    parent = list(range(n))
    size = [1] * n

    def find(a):
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    for a, b in zip(u.tolist(), v.tolist()):
        ra, rb = find(a), find(b)
        if ra == rb:
            continue
        if size[ra] < size[rb]:
            ra, rb = rb, ra
        parent[rb] = ra
        size[ra] += size[rb]
    return np.asarray([find(a) for a in range(n)], dtype=np.int64)
