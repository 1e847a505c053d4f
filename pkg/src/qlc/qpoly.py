"""Dense polynomials in q with exact integer coefficients.

A :class:`QPoly` stores its coefficients in ascending degree order with the
trailing zeros trimmed, so the zero polynomial has an empty coefficient
tuple.  Values are immutable and hashable.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable

import numpy as np

from . import _kernels

__all__ = ["QPoly", "ZERO", "ONE", "Q", "add", "sub", "mul", "pow", "eval_at", "q_geq", "as_qpoly"]

# below this length schoolbook Python beats the array round trip
_KERNEL_MIN_LEN = 24


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        values = []
        for c in coeffs:
            if isinstance(c, bool) or not isinstance(c, (int, np.integer)):
                raise TypeError(f"QPoly coefficients must be integers, got {c!r}")
            values.append(int(c))
        object.__setattr__(self, "coeffs", _trim(values))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[int, ...]) -> "QPoly":
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def const(cls, c: int) -> "QPoly":
        return cls._raw((int(c),)) if c else cls._raw(())

    @classmethod
    def monomial(cls, degree: int, c: int = 1) -> "QPoly":
        if not c:
            return cls._raw(())
        return cls._raw((0,) * degree + (int(c),))

    # -- basic queries ---------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __getitem__(self, d: int) -> int:
        if d < 0:
            raise IndexError("negative degree")
        return self.coeffs[d] if d < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def first_negative(self) -> int | None:
        for d, c in enumerate(self.coeffs):
            if c < 0:
                return d
        return None

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return QPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return QPoly._raw(_convolve(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if isinstance(n, bool) or not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- comparison ------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, np.integer)) and not isinstance(other, bool):
            return self.coeffs == _trim([int(other)])
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.constant_term())
        return hash(self.coeffs)

    def geq(self, other) -> bool:
        """Coefficientwise order: ``self - other`` has no negative coefficient."""
        return q_geq(self, other)[0]

    # -- evaluation and I/O -----------------------------------------------

    def __call__(self, q0) -> Fraction:
        return eval_at(self, q0)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "QPoly":
        if not isinstance(data, list):
            raise ValueError(f"a polynomial is a JSON array of integer strings, got {data!r}")
        coeffs = []
        for item in data:
            if isinstance(item, bool):
                raise ValueError(f"bad coefficient {item!r}")
            if isinstance(item, int):
                coeffs.append(item)
            elif isinstance(item, str):
                try:
                    coeffs.append(int(item.strip()))
                except ValueError:
                    raise ValueError(f"bad coefficient {item!r}") from None
            else:
                raise ValueError(f"bad coefficient {item!r}")
        return cls(coeffs)

    def render(self) -> str:
        """Canonical text, highest degree first, e.g. ``q^2+4*q+1``.

        The output is valid input for :func:`qlc.coeffexpr.parse`.
        """
        if not self.coeffs:
            return "0"
        parts = []
        for d in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = str(mag)
            else:
                mono = "q" if d == 1 else f"q^{d}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    __str__ = render

    def __repr__(self):
        return f"QPoly({list(self.coeffs)!r})"


def _coerce(x):
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return QPoly.const(int(x))
    return NotImplemented


def as_qpoly(x) -> QPoly:
    """Accept a QPoly, an int, or a coefficient list."""
    if isinstance(x, QPoly):
        return x
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return QPoly.const(int(x))
    if isinstance(x, (list, tuple)):
        return QPoly(x)
    raise TypeError(f"cannot interpret {x!r} as a polynomial in q")


def _convolve(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    if min(len(a), len(b)) >= _KERNEL_MIN_LEN:
        bound = max(max(map(abs, a)), max(map(abs, b)))
        if _kernels.fits_int64(bound, min(len(a), len(b)), terms=1):
            out = _kernels.convolve(np.array(a, dtype=np.int64), np.array(b, dtype=np.int64))
            return _trim([int(v) for v in out])
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _trim(out)


ZERO = QPoly._raw(())
ONE = QPoly._raw((1,))
Q = QPoly._raw((0, 1))


def add(a, b) -> QPoly:
    return as_qpoly(a) + as_qpoly(b)


def sub(a, b) -> QPoly:
    return as_qpoly(a) - as_qpoly(b)


def mul(a, b) -> QPoly:
    return as_qpoly(a) * as_qpoly(b)


def pow(a, n: int) -> QPoly:  # noqa: A001 - mirrors the operation name
    return as_qpoly(a) ** n


def to_fraction(x) -> Fraction:
    """Parse an int, Fraction, or decimal/``p/q`` string as an exact rational."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError(f"not a rational: {x!r}")
    if isinstance(x, (int, np.integer)):
        return Fraction(int(x))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"not a rational number: {x!r}") from None
    raise TypeError(f"not a rational: {x!r}")


def eval_at(a, q0) -> Fraction:
    """Exact value at the rational point ``q0`` (Horner)."""
    x = to_fraction(q0)
    acc = Fraction(0)
    for c in reversed(as_qpoly(a).coeffs):
        acc = acc * x + c
    return acc


def q_geq(a, b) -> tuple[bool, int | None]:
    """``(True, None)`` if ``a - b`` has only nonnegative coefficients.

    Otherwise ``(False, d)`` with ``d`` the lowest degree carrying a
    negative coefficient.
    """
    d = (as_qpoly(a) - as_qpoly(b)).first_negative()
    return (d is None, d)
