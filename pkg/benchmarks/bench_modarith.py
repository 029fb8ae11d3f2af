"""Benchmark the numba kernels against the pure-numpy fallback.

The backend is fixed at import time by QUIVER_RPP_BACKEND, so the default
mode re-runs this script in two subprocesses (one per backend) and prints a
side-by-side table.  Invoke with --worker to time the current backend only.

    python3 benchmarks/bench_modarith.py [--sizes 32,64,128] [--repeat 5]
"""

import argparse
import json
import os
import subprocess
import sys
import time


def time_workloads(sizes, repeat):
    import numpy as np

    from quiver_rpp import modarith as fp
    from quiver_rpp.arquiver import knit
    from quiver_rpp.bijection import poset_of
    from quiver_rpp.jordan import gen_jf
    from quiver_rpp.quiver import canonical_quiver
    from quiver_rpp.dynkin import DynkinDiagram

    rng = np.random.default_rng(0)
    results = {"backend": fp.backend_name(), "kernels": {}}

    def bench(label, fn, warm=1):
        for _ in range(warm):
            fn()
        best = min(_timed(fn) for _ in range(repeat))
        results["kernels"][label] = best

    for n in sizes:
        a = fp.random_matrix(rng, n, n)
        b = fp.random_matrix(rng, n, n)
        bench(f"matmul {n}x{n}", lambda a=a, b=b: fp.matmul(a, b))
        bench(f"rref {n}x{n}", lambda a=a: fp.rref(a))
        nil = np.triu(fp.random_matrix(rng, n, n), k=1)
        bench(f"rank profile {n}x{n}", lambda m=nil: fp.nilpotent_rank_profile(m))

    # end-to-end: one generic-Jordan-data computation at E6 scale
    import random

    q = canonical_quiver(DynkinDiagram("E", 6))
    ar = knit(q)
    poset = poset_of(ar, 1)
    rep = {x: random.Random(5).randint(0, 3) for x in poset.elements}
    rep = {k: v for k, v in rep.items() if v}
    bench("gen_jf E6 m=1", lambda: gen_jf(ar, 1, rep, seed=1))
    return results


def _timed(fn):
    t = time.perf_counter()
    fn()
    return time.perf_counter() - t


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", default="32,64,128")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--worker", action="store_true")
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    if args.worker:
        print(json.dumps(time_workloads(sizes, args.repeat)))
        return

    rows = {}
    for backend in ("numba", "numpy"):
        env = dict(os.environ, QUIVER_RPP_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, __file__, "--worker", "--sizes", args.sizes,
             "--repeat", str(args.repeat)],
            env=env, capture_output=True, text=True, check=True,
        )
        data = json.loads(out.stdout.strip().splitlines()[-1])
        assert data["backend"] == backend
        rows[backend] = data["kernels"]

    labels = list(rows["numba"])
    width = max(len(l) for l in labels)
    print(f"{'kernel'.ljust(width)}  {'numba':>12}  {'numpy':>12}  {'speedup':>8}")
    for label in labels:
        nb = rows["numba"][label]
        np_ = rows["numpy"][label]
        print(
            f"{label.ljust(width)}  {nb * 1e3:10.3f}ms  {np_ * 1e3:10.3f}ms  "
            f"{np_ / nb:7.1f}x"
        )


if __name__ == "__main__":
    main()
