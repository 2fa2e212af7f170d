# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: sparse co-occurrence accumulation and union-find."""
import numpy as np

from libc.stdint cimport int64_t
from libcpp.vector cimport vector
from libcpp.algorithm cimport sort


def cooccurrence(const int64_t[::1] outer_ptr, const int64_t[::1] outer_idx,
                 const int64_t[::1] outer_val, const int64_t[::1] inner_ptr,
                 const int64_t[::1] inner_idx, const int64_t[::1] inner_val,
                 Py_ssize_t n):
    cdef vector[int64_t] acc
    cdef vector[int64_t] touched
    cdef vector[int64_t] us, vs, ws
    cdef Py_ssize_t i, p, q, lo, t
    cdef int64_t h, x, j
    acc.resize(n, 0)
    with nogil:
        for i in range(n):
            touched.clear()
            for p in range(outer_ptr[i], outer_ptr[i + 1]):
                h = outer_idx[p]
                x = outer_val[p]
                lo = inner_ptr[h]
                q = inner_ptr[h + 1] - 1
                while q >= lo:
                    j = inner_idx[q]
                    if j <= i:
                        break
                    if acc[j] == 0:
                        touched.push_back(j)
                    acc[j] += x * inner_val[q]
                    q -= 1
            if touched.size() > 0:
                sort(touched.begin(), touched.end())
                for t in range(<Py_ssize_t>touched.size()):
                    j = touched[t]
                    us.push_back(i)
                    vs.push_back(j)
                    ws.push_back(acc[j])
                    acc[j] = 0

    cdef Py_ssize_t m = us.size()
    u = np.empty(m, dtype=np.int64)
    v = np.empty(m, dtype=np.int64)
    w = np.empty(m, dtype=np.int64)
    cdef int64_t[::1] uu = u, vv = v, ww = w
    for t in range(m):
        uu[t] = us[t]
        vv[t] = vs[t]
        ww[t] = ws[t]
    return u, v, w


cdef inline int64_t _find(int64_t* parent, int64_t a) noexcept nogil:
    cdef int64_t root = a, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        nxt = parent[a]
        parent[a] = root
        a = nxt
    return root


def component_roots(Py_ssize_t n, const int64_t[::1] u, const int64_t[::1] v):
    roots = np.arange(n, dtype=np.int64)
    size = np.ones(n, dtype=np.int64)
    cdef int64_t[::1] parent = roots
    cdef int64_t[::1] sz = size
    cdef Py_ssize_t e, m = u.shape[0], a
    cdef int64_t ra, rb, tmp
    if n == 0:
        return roots
    with nogil:
        for e in range(m):
            ra = _find(&parent[0], u[e])
            rb = _find(&parent[0], v[e])
            if ra == rb:
                continue
            if sz[ra] < sz[rb]:
                tmp = ra
                ra = rb
                rb = tmp
            parent[rb] = ra
            sz[ra] += sz[rb]
        for a in range(n):
            parent[a] = _find(&parent[0], a)
    return roots
