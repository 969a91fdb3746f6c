"""Time integer row reduction in the compiled and pure-Python backends.

    python3 benchmarks/bench_rref.py [--sizes 8 16 32 48] [--repeat 5]
"""
import argparse
import random
import timeit

from leibniz2 import _kernel_py

try:
    from leibniz2 import _kernel
except ImportError:
    _kernel = None


def sample(n, m, rank, rnd):
    # a rank-deficient integer matrix, the typical shape of a coboundary operator
    left = [[rnd.randint(-3, 3) for _ in range(rank)] for _ in range(n)]
    right = [[rnd.randint(-3, 3) for _ in range(m)] for _ in range(rank)]
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*right)] for row in left]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 16, 32, 48])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if _kernel is None:
        print("compiled kernel not built; run pip install -e . --no-build-isolation")
        return 1
    rnd = random.Random(args.seed)
    print("%6s %6s %12s %12s %8s" % ("size", "rank", "cython ms", "python ms", "speedup"))
    for n in args.sizes:
        rank = max(1, 3 * n // 4)
        rows = sample(n, n, rank, rnd)
        assert _kernel.rref_int(rows, n) == _kernel_py.rref_int(rows, n)
        tc = min(timeit.repeat(lambda: _kernel.rref_int(rows, n), number=1, repeat=args.repeat))
        tp = min(timeit.repeat(lambda: _kernel_py.rref_int(rows, n), number=1, repeat=args.repeat))
        print("%6d %6d %12.3f %12.3f %8.2f" % (n, rank, 1e3 * tc, 1e3 * tp, tp / tc))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
