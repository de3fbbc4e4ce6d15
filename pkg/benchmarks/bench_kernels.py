"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernels.py [--repeat 5] [--max-n 14]

Times the Zinbiel defect scan on nulfiliform tables (a full n^3 scan, since
they satisfy the identity) and fraction-free elimination on random integer
matrices.  Both backends are checked to agree before timing.
"""

import argparse
import random
import sys
import timeit
from array import array

from zinbiel import _kernels_py
from zinbiel.catalog import CatalogKey, make

try:
    from zinbiel import _kernels as compiled
except ImportError:
    compiled = None


def defect_cases(max_n):
    for n in range(6, max_n + 1, 2):
        flat = make(CatalogKey("nulfiliform", "NF", n)).table.integer_tensor()
        yield f"defect scan NF_{n}", n, flat


def bareiss_cases(seed=0):
    rng = random.Random(seed)
    for size in (8, 16, 32):
        rows = [[rng.randint(-9, 9) for _ in range(size)] for _ in range(size)]
        yield f"bareiss {size}x{size}", size, rows


def best(fn, repeat):
    number = 1
    while timeit.timeit(fn, number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(fn, number=number, repeat=repeat)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--max-n", type=int, default=14)
    args = ap.parse_args(argv)
    if compiled is None:
        print("compiled extension not built; nothing to compare", file=sys.stderr)
        return 1

    print(f"{'case':<22} {'python':>12} {'cython':>12} {'speedup':>9}")
    for label, n, flat in defect_cases(args.max_n):
        packed = array("q", flat)
        assert compiled.first_violation(n, packed) == _kernels_py.first_violation(n, flat)
        tp = best(lambda: _kernels_py.first_violation(n, flat), args.repeat)
        tc = best(lambda: compiled.first_violation(n, packed), args.repeat)
        print(f"{label:<22} {tp * 1e3:>10.3f}ms {tc * 1e3:>10.3f}ms {tp / tc:>8.1f}x")
    for label, size, rows in bareiss_cases():
        assert compiled.bareiss_echelon([r[:] for r in rows], size) == _kernels_py.bareiss_echelon(rows, size)
        tp = best(lambda: _kernels_py.bareiss_echelon(rows, size), args.repeat)
        tc = best(lambda: compiled.bareiss_echelon([r[:] for r in rows], size), args.repeat)
        print(f"{label:<22} {tp * 1e3:>10.3f}ms {tc * 1e3:>10.3f}ms {tp / tc:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
