"""Time the compiled and pure-Python batched matmul kernels and a full residual.

Run with ``python3 benchmarks/bench_kernels.py``.
"""

import argparse
import random
import timeit

import numpy as np

from bidouble import corpus
from bidouble.exactlin import kernels
from bidouble.yangbaxter import canonical_solution


def random_batch(rng, batch, n, bound=5):
    def mat():
        return np.array([[rng.randint(-bound, bound) for _ in range(n * n)]
                         for _ in range(batch)], dtype=object).reshape(batch, n, n)
    return mat(), mat()


def bench_matmul(batch, n, repeat):
    a, b = random_batch(random.Random(0), batch, n)
    rows = [("python", kernels.python_batched_matmul)]
    if kernels.BACKEND == "compiled":
        rows.append(("compiled", kernels.batched_matmul))
    ref = kernels.python_batched_matmul(a, b)
    for name, fn in rows:
        assert (fn(a, b) == ref).all()
        t = min(timeit.repeat(lambda: fn(a, b), number=1, repeat=repeat))
        print(f"matmul batch={batch:4d} n={n:3d} {name:9s} {t * 1e3:9.2f} ms")


def bench_canonical(repeat):
    a = corpus.get("upper-triangular-3")
    t = min(timeit.repeat(lambda: canonical_solution(a, "AYBE").passed, number=1, repeat=repeat))
    print(f"canonical AYBE on dim-6 double ({kernels.BACKEND}) {t * 1e3:9.2f} ms")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    for batch, n in ((32, 8), (64, 16), (32, 32)):
        bench_matmul(batch, n, args.repeat)
    bench_canonical(args.repeat)


if __name__ == "__main__":
    main()
