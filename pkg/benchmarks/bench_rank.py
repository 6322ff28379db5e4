"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_rank.py [--sizes 50 100 200] [--repeat 3]

Times rank over F_p on dense random matrices of each size (with a planted
rank deficiency), then one real workload: the weak Lefschetz test on the
52-point distraction of a monomial ideal in three variables.
"""

import argparse
import os
import random
import time

from hilbgeom.basis import monomials
from hilbgeom.modla import backend
from hilbgeom.modla.field import DEFAULT_PRIME


def random_rows(size, rng, p):
    rank = size - size // 10
    base = [{j: rng.randrange(p) for j in range(size)} for _ in range(rank)]
    rows = list(base)
    for _ in range(size - rank):
        combo = {}
        for b in base[:5]:
            c = rng.randrange(p)
            for j, v in b.items():
                combo[j] = (combo.get(j, 0) + c * v) % p
        rows.append(combo)
    return rows, rank


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workload():
    from hilbgeom.modla import PointSource, wlp_test
    from hilbgeom.monomial import distraction_points, minimalize

    J = minimalize([(3, 0, 0), (2, 2, 0), (2, 1, 2), (0, 0, 5)] + list(monomials(3, 7)), 3)
    Z, _ = distraction_points(J)
    return wlp_test(PointSource(Z), 1)


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--sizes", type=int, nargs="+", default=[50, 100, 200])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    p = DEFAULT_PRIME
    rng = random.Random(0)
    kinds = ["python"] + (["cython"] if backend.BACKEND == "cython" else [])
    print(f"default backend: {backend.BACKEND}")
    print(f"{'size':>6}" + "".join(f"{k:>12}" for k in kinds) + ("     speedup" if len(kinds) == 2 else ""))
    for size in args.sizes:
        rows, rank = random_rows(size, rng, p)
        index = {j: j for j in range(size)}
        times = []
        for kind in kinds:
            assert backend.rank(rows, index, p, kind) == rank
            times.append(best_of(lambda: backend.rank(rows, index, p, kind), args.repeat))
        line = f"{size:>6}" + "".join(f"{t:>11.4f}s" for t in times)
        if len(times) == 2:
            line += f"{times[0] / times[1]:>11.1f}x"
        print(line)

    t = best_of(workload, 1)
    print(f"WLP test on 52 points with the {backend.BACKEND} backend: {t:.3f}s")
    if backend.BACKEND == "cython" and not os.environ.get("HILBGEOM_PURE_PYTHON"):
        print("rerun with HILBGEOM_PURE_PYTHON=1 to time the workload without the extension")


if __name__ == "__main__":
    main()
