"""Linear transforms that preserve log-concavity type properties."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import LengthError
from .qpoly import ZERO, QPoly, as_qpoly, to_fraction
from .seqprops import is_log_concave

__all__ = ["BinomialParams", "Window", "binom", "binomial_transform",
           "binomial_transform_by_sums", "shift_sum", "window_convolve",
           "multinomial_coefficients", "multinomial_transform"]


def binom(m: int, r: int) -> int:
    """Binomial coefficient, zero whenever ``r < 0`` or ``r > m``."""
    if r < 0 or m < 0 or r > m:
        return 0
    return comb(m, r)


@dataclass(frozen=True)
class BinomialParams:
    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"a and b must be nonnegative, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class Window:
    """Nonnegative log-concave weights ``(b_0, ..., b_k)``."""
    weights: tuple[int, ...]

    def __init__(self, weights: Sequence[int]):
        w = tuple(int(x) for x in weights)
        if not w:
            raise ValueError("a window needs at least one weight")
        if any(x < 0 for x in w):
            raise ValueError(f"window weights must be nonnegative: {list(w)}")
        report = is_log_concave(w)
        if not report.verdict:
            raise ValueError(f"window weights are not log-concave: {list(w)}")
        object.__setattr__(self, "weights", w)

    @property
    def k(self) -> int:
        return len(self.weights) - 1

    def __len__(self) -> int:
        return len(self.weights)

    def poly(self) -> QPoly:
        return QPoly(self.weights)


def _window(w) -> Window:
    return w if isinstance(w, Window) else Window(w)


def _params(p) -> BinomialParams:
    if isinstance(p, BinomialParams):
        return p
    a, b = p
    return BinomialParams(int(a), int(b))


def binomial_transform(p, x: Sequence, upto: int) -> list[QPoly]:
    """``y_n = sum_{k<=n} C(a+n, b+k) x_k`` for ``n = 0..upto``."""
    p = _params(p)
    xs = [as_qpoly(v) for v in x]
    if upto < 0 or len(xs) < upto + 1:
        raise LengthError(f"need at least upto+1 = {upto + 1} inputs, got {len(xs)}")
    out = []
    for n in range(upto + 1):
        acc = ZERO
        for k in range(n + 1):
            c = binom(p.a + n, p.b + k)
            if c:
                acc = acc + c * xs[k]
        out.append(acc)
    return out


def binomial_transform_by_sums(p, x: Sequence, n: int) -> QPoly:
    """``sum_{k<n} C(a+n-1, b+k) (x_k + x_{k+1})``.

    Agrees with ``binomial_transform(p, x, n)[n]`` up to the two boundary
    terms ``C(a+n-1, b-1) x_0 + C(a+n-1, b+n) x_n``.  The first vanishes for
    ``b == 0`` and the second for ``b >= a``.
    """
    p = _params(p)
    xs = [as_qpoly(v) for v in x]
    if n < 1 or len(xs) < n + 1:
        raise LengthError(f"need n >= 1 and at least n+1 inputs, got n={n}, len={len(xs)}")
    acc = ZERO
    for k in range(n):
        c = binom(p.a + n - 1, p.b + k)
        if c:
            acc = acc + c * (xs[k] + xs[k + 1])
    return acc


def shift_sum(x: Sequence) -> list[QPoly]:
    """Adjacent sums ``x_n + x_{n+1}``."""
    xs = [as_qpoly(v) for v in x]
    if len(xs) < 2:
        raise LengthError("shift_sum needs at least two terms")
    return [xs[i] + xs[i + 1] for i in range(len(xs) - 1)]


def window_convolve(w, x: Sequence) -> list[QPoly]:
    """``z_n = sum_i w_i x_{n+i}`` for every full window position."""
    w = _window(w)
    xs = [as_qpoly(v) for v in x]
    if len(xs) < len(w):
        raise LengthError(f"input of length {len(xs)} is shorter than the window ({len(w)})")
    out = []
    for n in range(len(xs) - len(w) + 1):
        acc = ZERO
        for i, b in enumerate(w.weights):
            if b:
                acc = acc + b * xs[n + i]
        out.append(acc)
    return out


def multinomial_coefficients(w, n: int) -> tuple[int, ...]:
    """Coefficients of ``(w_0 + w_1 x + ... + w_k x^k)^n``, padded to length k*n+1."""
    w = _window(w)
    coeffs = (w.poly() ** n).coeffs
    return coeffs + (0,) * (w.k * n + 1 - len(coeffs))


def multinomial_transform(w, x: Sequence, upto: int) -> list[Fraction]:
    """``y_n = sum_{i<=k n} T(n; i) x_i`` where ``T(n; .)`` are the window's power coefficients."""
    w = _window(w)
    xs = [to_fraction(v) for v in x]
    need = w.k * upto + 1
    if upto < 0 or len(xs) < need:
        raise LengthError(f"need at least k*upto+1 = {need} inputs, got {len(xs)}")
    out = []
    for n in range(upto + 1):
        coeffs = multinomial_coefficients(w, n)
        out.append(sum((c * xs[i] for i, c in enumerate(coeffs) if c), Fraction(0)))
    return out
