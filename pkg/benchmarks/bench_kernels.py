"""Compiled vs pure-Python kernels on matrices that come up in practice.

    python3 benchmarks/bench_kernels.py [--repeat N] [--quick]

Smith normal form runs on boundary matrices of subdivided corpus spaces;
sparse elimination runs on coboundary systems of the flag complex.
"""

import argparse
import random
import statistics
import time

from plchain import _snf_py, snf
from plchain.chain_algebra import _eliminate_ext, _eliminate_py, boundary_matrix
from plchain.corpus import generate
from plchain.pl_chains import subdivide_space


def clock(fn, repeat):
    runs = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t)
    return statistics.median(runs)


def snf_cases(quick):
    names = ["torus2", "sphere 3"] if quick else ["torus2", "sphere 3", "suspension(torus2)"]
    for name in names:
        X = generate(name).X
        for depth in (0, 1):
            K = X.complex
            for k in range(1, K.dim + 1):
                A = boundary_matrix(K, k)
                if A and A[0] and len(A) * len(A[0]) <= (60_000 if quick else 400_000):
                    yield f"{name} sd{depth} ∂{k} {len(A)}x{len(A[0])}", A
            X = subdivide_space(X)


def elimination_cases(quick):
    rng = random.Random(1)
    for K in ((generate("torus2").complex,) if quick else
              (generate("torus2").complex, subdivide_space(generate("sphere 3").X).complex)):
        top = K.dim
        cols = K.simplices(top - 1)
        rows = K.simplices(top)
        cidx = {s: j for j, s in enumerate(cols)}
        row_cols, row_vals = [], []
        for r in rows:
            cs = sorted(cidx[r[:i] + r[i + 1:]] for i in range(len(r)))
            row_cols.append(cs)
            row_vals.append([rng.choice([1, -1]) for _ in cs])
        rhs = [rng.randint(-1, 1) for _ in rows]
        yield f"coboundary {len(rows)}x{len(cols)}", (len(rows), len(cols), row_cols, row_vals, rhs)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    args = ap.parse_args()
    print(f"compiled SNF: {snf.BACKEND == 'cython'}, compiled elimination: {_eliminate_ext is not None}")
    print(f"{'case':40} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for label, A in snf_cases(args.quick):
        tp = clock(lambda: _snf_py.smith(A), args.repeat)
        if snf.BACKEND == "cython":
            assert snf.smith_compiled(A)[1] == _snf_py.smith(A)[1]
            tc = clock(lambda: snf.smith_compiled(A), args.repeat)
            print(f"SNF {label:36} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")
        else:
            print(f"SNF {label:36} {tp:10.4f} {'-':>11}")
    for label, sys_ in elimination_cases(args.quick):
        tp = clock(lambda: _eliminate_py(*sys_), args.repeat)
        if _eliminate_ext is not None:
            tc = clock(lambda: _eliminate_ext(*sys_), args.repeat)
            print(f"elim {label:35} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")
        else:
            print(f"elim {label:35} {tp:10.4f} {'-':>11}")


if __name__ == "__main__":
    main()
