"""Compiled vs pure-Python kernels on synthetic document x attribute data.

    python benchmarks/bench_kernels.py --pairs 1000000 --attributes 100000
"""
import argparse
import random
import time

import numpy as np

from wosnet import graph, kernels


def synthetic(n_pairs, n_attrs, per_doc, seed):
    rng = random.Random(seed)
    rows = [i // per_doc for i in range(n_pairs)]
    cols = [rng.randrange(n_attrs) for _ in range(n_pairs)]
    n_docs = rows[-1] + 1 if rows else 0
    return graph.from_indices([f"d{i}" for i in range(n_docs)], [f"a{j}" for j in range(n_attrs)], rows, cols)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--pairs", type=int, default=1_000_000)
    ap.add_argument("--attributes", type=int, default=100_000)
    ap.add_argument("--per-doc", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    bn = synthetic(args.pairs, args.attributes, args.per_doc, args.seed)
    print(f"{bn.n_rows} documents x {bn.n_cols} attributes, {bn.n_entries} entries")
    colptr, rows, cc = bn.csc()
    col_args = (colptr, rows, cc, bn.indptr, bn.indices, bn.counts, bn.n_cols)
    row_args = (bn.indptr, bn.indices, bn.counts, colptr, rows, cc, bn.n_rows)

    results = {}
    for name, impl in sorted(kernels.BACKENDS.items()):
        t_col, (u, v, w) = best_of(lambda: impl.cooccurrence(*col_args), args.repeat)
        t_row, _ = best_of(lambda: impl.cooccurrence(*row_args), args.repeat)
        t_cc, roots = best_of(lambda: impl.component_roots(bn.n_cols, u, v), args.repeat)
        results[name] = (t_col, t_row, t_cc, (u, v, w))

    print(f"{'backend':<10} {'columns':>10} {'rows':>10} {'components':>11}")
    for name, (t_col, t_row, t_cc, _) in results.items():
        print(f"{name:<10} {t_col:>9.3f}s {t_row:>9.3f}s {t_cc:>10.3f}s")
    if len(results) == 2:
        c, p = results["compiled"], results["python"]
        print(f"speed-up   {p[0] / c[0]:>9.1f}x {p[1] / c[1]:>9.1f}x {p[2] / c[2]:>10.1f}x")
        assert all(np.array_equal(a, b) for a, b in zip(c[3], p[3])), "backends disagree"
    print(f"default backend: {kernels.BACKEND}")


if __name__ == "__main__":
    main()
