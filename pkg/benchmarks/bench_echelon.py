"""Compare the compiled and pure-Python elimination kernels.

    python benchmarks/bench_echelon.py [--repeat N] [--quick]

Cases: the rank of the degree-2 coboundary matrix of r_h (the largest
computation in the H^2 suite), banded sparse matrices and dense random
integer matrices fed straight to the kernel. Dense matrices soon outgrow
int64, where the compiled kernel hands over to the Python one. Both
backends must return identical results.
"""

from __future__ import annotations

import argparse
import random
import statistics
import time
from array import array
from fractions import Fraction
from itertools import chain

from liecoho import _backend
from liecoho.cohomology import delta_matrix
from liecoho.families import build_r_h, rh_lambda_count
from liecoho.linalg import rank

LAMBDA = (Fraction(1), Fraction(2, 3), Fraction(-5, 7), Fraction(3, 11))


def timed(fn, repeat):
    out, times = None, []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return out, statistics.median(times)


def delta_case(k, h):
    g = build_r_h(k, h, LAMBDA[: rh_lambda_count(h)])
    d = delta_matrix(g, 2)
    return f"rank delta_2, r_h k={k} h={h} ({d.rows}x{d.cols})", lambda b: rank(d, backend=b)


def fits_int64(rows, ncols):
    buf = array("q", chain.from_iterable(rows))
    try:
        _backend._echelon_c.echelon(buf, len(rows), ncols, True)
    except OverflowError:
        return False
    return True


def dense_case(size, bound, seed=0):
    rng = random.Random(seed)
    rows = [[rng.randint(-bound, bound) for _ in range(size)] for _ in range(size)]
    note = "" if fits_int64(rows, size) else " [overflow, falls back]"
    return f"dense {size}x{size}, entries in [-{bound},{bound}]{note}", lambda b: _backend.echelon(rows, size, True, b)


def banded_case(size, seed=0):
    # sparse 0/+-1 rows with short support, the shape of coboundary blocks
    rng = random.Random(seed)
    rows = []
    for i in range(size):
        row = [0] * size
        for j in range(i, min(size, i + 4)):
            row[j] = rng.choice((-1, 0, 1))
        rows.append(row)
    rng.shuffle(rows)
    return f"banded {size}x{size}, entries in {{-1,0,1}}", lambda b: _backend.echelon(rows, size, True, b)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="skip the largest cases")
    args = ap.parse_args(argv)
    if _backend._echelon_c is None:
        raise SystemExit("compiled kernel not built; run `pip install --no-build-isolation -e .` first")

    cases = [delta_case(4, 3), delta_case(4, 5), banded_case(200), dense_case(12, 2), dense_case(40, 2)]
    if not args.quick:
        cases += [delta_case(6, 7), banded_case(600)]

    print(f"{'case':64} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, fn in cases:
        py, t_py = timed(lambda: fn("python"), args.repeat)
        cy, t_cy = timed(lambda: fn("cython"), args.repeat)
        if py != cy:
            raise SystemExit(f"backends disagree on {label}")
        print(f"{label:64} {t_py:10.4f} {t_cy:10.4f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
