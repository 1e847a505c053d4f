"""Log-concavity style properties of numeric and polynomial sequences.

Every check returns a :class:`Report`.  A failing report carries a
:class:`Witness` naming the first violating index pair (lexicographic in
``(i, j)``) and, for polynomial checks, the lowest offending degree in q.

Sequences with an internal zero are rejected with
:class:`~qlc.errors.InternalZerosError` instead of being judged.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Sequence

import numpy as np

from . import _kernels
from .errors import InternalZerosError, NegativeCoefficientError
from .qpoly import ONE, QPoly, as_qpoly, to_fraction

__all__ = [
    "Witness", "Report", "has_internal_zeros", "first_internal_zero",
    "is_log_concave", "is_log_convex", "is_q_log_concave",
    "is_strong_q_log_concave", "is_strong_q_log_convex",
    "tp2_window_check", "gaussian_binomial", "random_log_concave",
    "random_log_convex",
]


@dataclass(frozen=True)
class Witness:
    i: Any
    j: Any
    degree: int | None = None
    lhs: Any = None
    rhs: Any = None
    row: int | None = None

    def to_dict(self) -> dict:
        out = {"i": _plain(self.i), "j": _plain(self.j)}
        if self.row is not None:
            out["row"] = self.row
        if self.degree is not None:
            out["degree"] = self.degree
        if self.lhs is not None:
            out["lhs"] = _plain(self.lhs)
            out["rhs"] = _plain(self.rhs)
        return out


@dataclass(frozen=True)
class Report:
    property: str
    verdict: bool
    witness: Witness | None = None

    def __post_init__(self):
        if self.verdict == (self.witness is not None):
            raise ValueError("a witness must be present exactly when the verdict is false")

    def __bool__(self) -> bool:
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "property": self.property,
            "verdict": self.verdict,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


def _plain(v):
    if isinstance(v, QPoly):
        return v.to_json()
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, tuple):
        return list(v)
    return v


def first_internal_zero(seq: Sequence) -> int | None:
    """Index of the first zero lying strictly between two nonzero items."""
    nonzero = [idx for idx, x in enumerate(seq) if x]
    if len(nonzero) < 2:
        return None
    for idx in range(nonzero[0] + 1, nonzero[-1]):
        if not seq[idx]:
            return idx
    return None


def has_internal_zeros(seq: Sequence) -> bool:
    return first_internal_zero(seq) is not None


def _require_no_internal_zeros(seq):
    idx = first_internal_zero(seq)
    if idx is not None:
        raise InternalZerosError(idx)


# -- numeric sequences --------------------------------------------------------

def _numeric(seq) -> list[Fraction]:
    values = []
    for idx, x in enumerate(seq):
        if isinstance(x, QPoly):
            if not x.is_constant():
                raise TypeError(f"item {idx} is a non-constant polynomial; evaluate it first")
            x = x.constant_term()
        v = to_fraction(x)
        if v < 0:
            raise NegativeCoefficientError(f"item {idx} is negative ({v})", k=idx)
        values.append(v)
    _require_no_internal_zeros(values)
    return values


def _adjacent(seq, name: str, concave: bool) -> Report:
    a = _numeric(seq)
    for k in range(1, len(a) - 1):
        square = a[k] * a[k]
        outer = a[k - 1] * a[k + 1]
        if (outer > square) if concave else (outer < square):
            lhs, rhs = (square, outer) if concave else (outer, square)
            return Report(name, False, Witness(k, k, None, lhs, rhs))
    return Report(name, True)


def is_log_concave(seq: Sequence) -> Report:
    """``a[k-1]*a[k+1] <= a[k]**2`` for every interior ``k`` (exact)."""
    return _adjacent(seq, "log-concave", True)


def is_log_convex(seq: Sequence) -> Report:
    return _adjacent(seq, "log-convex", False)


# -- polynomial sequences -------------------------------------------------------

def _polys(seq) -> list[QPoly]:
    items = [as_qpoly(x) for x in seq]
    for idx, p in enumerate(items):
        d = p.first_negative()
        if d is not None:
            raise NegativeCoefficientError(
                f"item {idx} has a negative coefficient at q^{d}", k=idx, degree=d)
    _require_no_internal_zeros(items)
    return items


def _scan(items: list[QPoly], sign: int, adjacent_only: bool):
    """First (i, j, degree) with sign*(x_i x_j - x_{i-1} x_{j+1}) negative."""
    if adjacent_only:
        for i in range(1, len(items) - 1):
            d = (sign * (items[i] * items[i] - items[i - 1] * items[i + 1])).first_negative()
            if d is not None:
                return i, i, d
        return None
    width = max((len(p) for p in items), default=0)
    bound = max((max(p.coeffs) for p in items if p), default=0)
    if _kernels.fits_int64(bound, width):
        return _kernels.pair_scan(_kernels.pack([p.coeffs for p in items], width), sign)
    n = len(items)
    for i in range(1, n - 1):
        for j in range(i, n - 1):
            d = (sign * (items[i] * items[j] - items[i - 1] * items[j + 1])).first_negative()
            if d is not None:
                return i, j, d
    return None


def _pairwise(seq, name: str, sign: int, adjacent_only: bool = False) -> Report:
    items = _polys(seq)
    hit = _scan(items, sign, adjacent_only)
    if hit is None:
        return Report(name, True)
    i, j, d = hit
    inner = items[i] * items[j]
    outer = items[i - 1] * items[j + 1]
    lhs, rhs = (inner, outer) if sign > 0 else (outer, inner)
    return Report(name, False, Witness(i, j, d, lhs, rhs))


def is_strong_q_log_concave(seq: Sequence) -> Report:
    """``x_i x_j >=_q x_{i-1} x_{j+1}`` for all ``1 <= i <= j <= len-2``."""
    return _pairwise(seq, "strong-q-log-concave", 1)


def is_q_log_concave(seq: Sequence) -> Report:
    return _pairwise(seq, "q-log-concave", 1, adjacent_only=True)


def is_strong_q_log_convex(seq: Sequence) -> Report:
    return _pairwise(seq, "strong-q-log-convex", -1)


# -- total positivity oracle ------------------------------------------------------

def _window_matrix(b: Sequence[int]) -> list[list[int]]:
    size = 2 * len(b)
    return [[b[c - r] if 0 <= c - r < len(b) else 0 for c in range(size)]
            for r in range(size)]


def tp2_window_check(b: Sequence[int]) -> Report:
    """All 2x2 minors of the banded Toeplitz matrix ``[b_{c-r}]`` are >= 0.

    The matrix is ``2*len(b)`` square.  For a nonnegative ``b`` without
    internal zeros this is equivalent to log-concavity, and it is computed
    without ever comparing neighbouring terms of ``b`` directly.
    """
    b = [int(x) for x in b]
    m = _window_matrix(b)
    size = len(m)
    bound = max((abs(x) for x in b), default=0)
    if _kernels.fits_int64(bound, 1):
        hit = _kernels.tp2_scan(np.array(m, dtype=np.int64).reshape(size, size))
    else:
        hit = None
        for r1 in range(size):
            for r2 in range(r1 + 1, size):
                for c1 in range(size):
                    for c2 in range(c1 + 1, size):
                        if m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1] < 0:
                            hit = (r1, r2, c1, c2)
                            break
                    if hit:
                        break
                if hit:
                    break
            if hit:
                break
    if hit is None:
        return Report("tp2-window", True)
    r1, r2, c1, c2 = hit
    return Report("tp2-window", False, Witness(
        (r1, r2), (c1, c2), None, m[r1][c1] * m[r2][c2], m[r1][c2] * m[r2][c1]))


# -- fixtures ------------------------------------------------------------------

@lru_cache(maxsize=None)
def _gauss(m: int, r: int) -> QPoly:
    if r == 0 or r == m:
        return ONE
    # [m, r] = [m-1, r-1] + q^r [m-1, r]
    return _gauss(m - 1, r - 1) + QPoly.monomial(r) * _gauss(m - 1, r)


def gaussian_binomial(m: int, r: int) -> QPoly:
    """The q-binomial coefficient ``[m choose r]_q``."""
    if m < 0 or r < 0 or r > m:
        raise ValueError(f"need 0 <= r <= m, got m={m}, r={r}")
    return _gauss(m, r)


def random_log_concave(length: int, seed: int) -> list[int]:
    """Deterministic positive integer log-concave sequence."""
    if length < 1:
        raise ValueError("length must be at least 1")
    rng = random.Random(seed)
    steps = sorted((rng.randint(-3, 3) for _ in range(length - 1)), reverse=True)
    exps = [0]
    for s in steps:
        exps.append(exps[-1] + s)
    low = min(exps)
    base = rng.choice((2, 3))
    scale = rng.randint(1, 5)
    a = [scale * base ** (e - low) for e in exps]
    for _ in range(2 * length):
        k = rng.randrange(length)
        if a[k] <= 1:
            continue
        trial = a[k] - rng.randint(1, max(1, a[k] // 2))
        # lowering a[k] can only break the inequality centred at k
        if 0 < k < length - 1 and a[k - 1] * a[k + 1] > trial * trial:
            continue
        a[k] = trial
    return a


def random_log_convex(length: int, seed: int) -> list[int]:
    """Deterministic positive integer log-convex sequence."""
    if length < 1:
        raise ValueError("length must be at least 1")
    rng = random.Random(seed)
    steps = sorted(rng.randint(-2, 3) for _ in range(length - 1))
    exps = [0]
    for s in steps:
        exps.append(exps[-1] + s)
    low = min(exps)
    base = rng.choice((2, 3))
    scale = rng.randint(1, 5)
    a = [scale * base ** (e - low) for e in exps]
    for _ in range(2 * length):
        k = rng.randrange(length)
        trial = a[k] + rng.randint(1, max(1, a[k] // 2))
        # raising a[k] can only break the inequality centred at k
        if 0 < k < length - 1 and a[k - 1] * a[k + 1] < trial * trial:
            continue
        a[k] = trial
    return a
