"""Compare the numba kernels, their numpy fallbacks and a plain-Python loop.

    python3 benchmarks/bench_kernels.py [--repeat N] [--m M]

The pair scan runs on a full Gaussian-binomial row (every pair passes, so the
whole triangle of index pairs is visited).  The 2x2-minor scan runs on a
binomial window, which is log-concave and therefore also scanned in full.
"""
from __future__ import annotations

import argparse
import statistics
import time
from math import comb

import numpy as np

from qlc import _kernels
from qlc.seqprops import gaussian_binomial


def python_pair_scan(rows: list[list[int]], sign: int):
    n = len(rows)
    for i in range(1, n - 1):
        for j in range(i, n - 1):
            a, b, c, d = rows[i], rows[j], rows[i - 1], rows[j + 1]
            diff = [0] * (len(a) + len(b) - 1)
            for s, x in enumerate(a):
                for t, y in enumerate(b):
                    diff[s + t] += x * y
            for s, x in enumerate(c):
                for t, y in enumerate(d):
                    diff[s + t] -= x * y
            for deg, v in enumerate(diff):
                if sign * v < 0:
                    return i, j, deg
    return None


def python_tp2(m: list[list[int]]):
    size = len(m)
    for r1 in range(size):
        for r2 in range(r1 + 1, size):
            for c1 in range(size):
                for c2 in range(c1 + 1, size):
                    if m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1] < 0:
                        return r1, r2, c1, c2
    return None


def timed(fn, repeat: int) -> float:
    samples = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - start)
    return statistics.median(samples)


def with_backend(name, fn):
    def run():
        _kernels.use_backend(name)
        try:
            return fn()
        finally:
            _kernels.use_backend(None)
    return run


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--m", type=int, default=24, help="Gaussian binomial row index")
    ap.add_argument("--window", type=int, default=24, help="binomial window length")
    args = ap.parse_args()

    row = [gaussian_binomial(args.m, r).coeffs for r in range(args.m + 1)]
    width = max(len(c) for c in row)
    peak = max(max(c) for c in row)
    assert _kernels.fits_int64(peak, width), "row too large for int64 kernels"
    mat = _kernels.pack(row, width)
    rows = [list(c) for c in row]

    b = [comb(args.window - 1, i) for i in range(args.window)]
    size = 2 * len(b)
    toeplitz = [[b[c - r] if 0 <= c - r < len(b) else 0 for c in range(size)] for r in range(size)]
    tmat = np.array(toeplitz, dtype=np.int64)

    if _kernels.HAVE_NUMBA:
        # compile outside the timed region
        with_backend("numba", lambda: (_kernels.pair_scan(mat, 1), _kernels.tp2_scan(tmat)))()

    cases = {
        f"pair scan, Gaussian row m={args.m}": {
            "numba": with_backend("numba", lambda: _kernels.pair_scan(mat, 1)),
            "numpy": with_backend("numpy", lambda: _kernels.pair_scan(mat, 1)),
            "python": lambda: python_pair_scan(rows, 1),
        },
        f"2x2 minors, window length {args.window}": {
            "numba": with_backend("numba", lambda: _kernels.tp2_scan(tmat)),
            "numpy": with_backend("numpy", lambda: _kernels.tp2_scan(tmat)),
            "python": lambda: python_tp2(toeplitz),
        },
    }
    if not _kernels.HAVE_NUMBA:
        for impls in cases.values():
            impls.pop("numba")

    print(f"{'case':42s} {'impl':>7s} {'median s':>10s} {'vs python':>10s}")
    for label, impls in cases.items():
        results = {name: fn() for name, fn in impls.items()}
        assert len(set(map(str, results.values()))) == 1, f"{label}: backends disagree {results}"
        times = {name: timed(fn, args.repeat) for name, fn in impls.items()}
        for name, t in times.items():
            print(f"{label:42s} {name:>7s} {t:10.5f} {times['python'] / t:9.1f}x")


if __name__ == "__main__":
    main()
