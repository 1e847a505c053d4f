"""Hot integer kernels: numba-compiled loops with a pure-numpy fallback.

Every kernel works on int64 arrays and is only called after the caller has
checked (via :func:`fits_int64`) that no intermediate value can overflow.
Anything larger stays on the exact Python-int path in the calling module.

Set ``QLC_DISABLE_NUMBA=1`` to force the numpy path.  ``QLC_THREADS`` caps
the number of numba worker threads.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
    from numba import njit, prange
    HAVE_NUMBA = True
    if "NUMBA_THREADING_LAYER_PRIORITY" not in os.environ:
        # the bundled TBB is often too old and numba warns on every probe
        numba.config.THREADING_LAYER_PRIORITY = ["omp", "workqueue", "tbb"]
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def identity(fn):
            return fn
        return identity

    prange = range

# products and their pairwise differences must stay below this
_LIMIT = 2**62

_forced: str | None = None


def backend() -> str:
    """Name of the active kernel backend, ``"numba"`` or ``"numpy"``."""
    if _forced is not None:
        return _forced
    flag = os.environ.get("QLC_DISABLE_NUMBA", "").strip().lower()
    if not HAVE_NUMBA or flag in ("1", "true", "yes", "on"):
        return "numpy"
    return "numba"


def use_backend(name: str | None) -> None:
    """Pin the backend (``None`` restores the environment-driven choice)."""
    global _forced
    if name not in (None, "numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and not HAVE_NUMBA:
        raise RuntimeError("numba is not installed")
    _forced = name


def _apply_thread_cap() -> None:
    raw = os.environ.get("QLC_THREADS")
    if not raw or not HAVE_NUMBA:
        return
    try:
        n = int(raw)
    except ValueError:
        return
    if n >= 1:
        numba.set_num_threads(min(n, numba.config.NUMBA_NUM_THREADS))


_apply_thread_cap()


def fits_int64(max_abs: int, length: int, terms: int = 2) -> bool:
    """True if ``terms`` sums of ``length`` products of magnitude ``max_abs**2`` fit."""
    return terms * max(length, 1) * max_abs * max_abs < _LIMIT


def pack(seq, width: int | None = None) -> np.ndarray:
    """Zero-padded (len(seq), width) int64 matrix of coefficient tuples."""
    if width is None:
        width = max((len(c) for c in seq), default=0)
    out = np.zeros((len(seq), max(width, 1)), dtype=np.int64)
    for r, coeffs in enumerate(seq):
        out[r, :len(coeffs)] = coeffs
    return out


# -- convolution --------------------------------------------------------------

@njit(cache=True)
def _convolve_nb(a, b):
    out = np.zeros(a.shape[0] + b.shape[0] - 1, dtype=np.int64)
    for i in range(a.shape[0]):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(b.shape[0]):
            out[i + j] += ai * b[j]
    return out


def convolve(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if backend() == "numba":
        return _convolve_nb(a, b)
    return np.convolve(a, b)


# -- pairwise product scan ----------------------------------------------------
#
# For rows x_0..x_{N-1} of ``mat`` and every 1 <= i <= j <= N-2, form
# d = x_i*x_j - x_{i-1}*x_{j+1} and report the first (i, j, degree), in
# lexicographic order, where sign*d[degree] < 0.

@njit(parallel=True, cache=True)
def _pair_scan_nb(mat, sign):
    n, d = mat.shape
    width = 2 * d - 1
    hit_j = np.full(n, -1, dtype=np.int64)
    hit_deg = np.full(n, -1, dtype=np.int64)
    for i in prange(1, n - 1):
        diff = np.empty(width, dtype=np.int64)
        for j in range(i, n - 1):
            diff[:] = 0
            for s in range(d):
                a = mat[i, s]
                c = mat[i - 1, s]
                if a == 0 and c == 0:
                    continue
                for t in range(d):
                    diff[s + t] += a * mat[j, t] - c * mat[j + 1, t]
            found = False
            for deg in range(width):
                if sign * diff[deg] < 0:
                    hit_j[i] = j
                    hit_deg[i] = deg
                    found = True
                    break
            if found:
                break
    for i in range(1, n - 1):
        if hit_j[i] >= 0:
            return i, hit_j[i], hit_deg[i]
    return -1, -1, -1


def _toeplitz(x: np.ndarray) -> np.ndarray:
    d = x.shape[0]
    t = np.zeros((2 * d - 1, d), dtype=np.int64)
    for col in range(d):
        t[col:col + d, col] = x
    return t


def _pair_scan_np(mat, sign):
    n = mat.shape[0]
    for i in range(1, n - 1):
        # column j-i holds conv(x_i, x_j) - conv(x_{i-1}, x_{j+1})
        diff = _toeplitz(mat[i]) @ mat[i:n - 1].T - _toeplitz(mat[i - 1]) @ mat[i + 1:n].T
        bad = np.nonzero(sign * diff.T < 0)
        if bad[0].size:
            return i, i + int(bad[0][0]), int(bad[1][0])
    return -1, -1, -1


def pair_scan(mat: np.ndarray, sign: int) -> tuple[int, int, int] | None:
    if mat.shape[0] < 3:
        return None
    if backend() == "numba":
        i, j, deg = _pair_scan_nb(mat, np.int64(sign))
    else:
        i, j, deg = _pair_scan_np(mat, sign)
    if i < 0:
        return None
    return int(i), int(j), int(deg)


# -- 2x2 minors of a banded Toeplitz window ------------------------------------

@njit(cache=True)
def _tp2_scan_nb(m):
    size = m.shape[0]
    for r1 in range(size):
        for r2 in range(r1 + 1, size):
            for c1 in range(size):
                for c2 in range(c1 + 1, size):
                    if m[r1, c1] * m[r2, c2] - m[r1, c2] * m[r2, c1] < 0:
                        return r1, r2, c1, c2
    return -1, -1, -1, -1


def _tp2_scan_np(m):
    minors = (m[:, None, :, None] * m[None, :, None, :]
              - m[:, None, None, :] * m[None, :, :, None])
    size = m.shape[0]
    upper = np.triu(np.ones((size, size), dtype=bool), k=1)
    mask = upper[:, :, None, None] & upper[None, None, :, :]
    bad = np.argwhere(mask & (minors < 0))
    if bad.size == 0:
        return -1, -1, -1, -1
    return tuple(int(v) for v in bad[0])


def tp2_scan(m: np.ndarray) -> tuple[int, int, int, int] | None:
    if backend() == "numba":
        hit = _tp2_scan_nb(m)
    else:
        hit = _tp2_scan_np(m)
    if hit[0] < 0:
        return None
    return tuple(int(v) for v in hit)
