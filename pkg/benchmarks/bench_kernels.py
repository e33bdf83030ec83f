"""Compare the compiled and pure-Python kernels on exact-arithmetic workloads.

    python benchmarks/bench_kernels.py [--repeat N]

Prints one CSV row per (kernel, size, backend) with the best wall time and
the speedup of the compiled kernel over the fallback.
"""

import argparse
import random
import timeit
from fractions import Fraction

from newton_subres import _core_py

try:
    from newton_subres import _core
except ImportError:
    _core = None


def int_matrix(rng, n, bits):
    return [[rng.randint(-(1 << bits), 1 << bits) for _ in range(n)] for _ in range(n)]


def frac_matrix(rng, n):
    return [[Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for _ in range(n)] for _ in range(n)]


def workloads(rng):
    for n in (4, 8, 16, 24):
        m = int_matrix(rng, n, 16)
        yield "bareiss_det", n, (m,)
    for n in (4, 8, 16):
        yield "matmul", n, (frac_matrix(rng, n), frac_matrix(rng, n))


def best(fn, args, repeat):
    number = 1
    while timeit.timeit(lambda: fn(*args), number=number) < 0.05:
        number *= 2
    return min(timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)) / number


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)
    print("kernel,n,python_us,cython_us,speedup")
    for name, n, data in workloads(rng):
        py_fn = getattr(_core_py, name)
        py_t = best(py_fn, data, args.repeat)
        if _core is None:
            print(f"{name},{n},{py_t * 1e6:.1f},,")
            continue
        cy_fn = getattr(_core, name)
        assert cy_fn(*data) == py_fn(*data)
        cy_t = best(cy_fn, data, args.repeat)
        print(f"{name},{n},{py_t * 1e6:.1f},{cy_t * 1e6:.1f},{py_t / cy_t:.2f}")


if __name__ == "__main__":
    main()
