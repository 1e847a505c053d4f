"""Triangular arrays generated by a three-term recurrence in q.

Row ``n`` of a :class:`Triangle` built from a :class:`TriangleSpec` obeys::

    A[n][k] = f(n,k) A[n-1][k-1] + g(n,k) A[n-1][k] + h(n,k) A[n-1][k+1]

with ``A[0] = (1,)`` and out-of-range entries equal to zero.  At ``k = 0`` the
optional boundary expressions replace ``g`` and ``h``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import coeffexpr
from .coeffexpr import CoeffExpr, as_expr
from .errors import NegativeCoefficientError, UnknownFamilyError
from .qpoly import ONE, ZERO, QPoly, eval_at
from .transforms import Window

__all__ = ["TriangleSpec", "Triangle", "build", "builtin", "BUILTIN_NAMES",
           "multinomial_triangle", "column", "SCHROEDER_PRINTED_TABLE"]


@dataclass(frozen=True)
class TriangleSpec:
    name: str
    f: CoeffExpr
    g: CoeffExpr
    h: CoeffExpr
    g0: CoeffExpr | None = None
    h0: CoeffExpr | None = None

    @classmethod
    def from_strings(cls, name: str, f, g, h, g0=None, h0=None) -> "TriangleSpec":
        return cls(name, as_expr(f), as_expr(g), as_expr(h),
                   None if g0 is None else as_expr(g0),
                   None if h0 is None else as_expr(h0))

    @property
    def has_boundary(self) -> bool:
        return self.g0 is not None or self.h0 is not None

    def coeff(self, which: str, n: int, k: int) -> QPoly:
        """Evaluate ``f``, ``g`` or ``h`` at ``(n, k)``, honouring the k=0 overrides."""
        expr = self.expr_for(which, k)
        return coeffexpr.evaluate(expr, n, k)

    def expr_for(self, which: str, k: int) -> CoeffExpr:
        if k == 0 and which == "g" and self.g0 is not None:
            return self.g0
        if k == 0 and which == "h" and self.h0 is not None:
            return self.h0
        return getattr(self, which)

    def to_dict(self) -> dict:
        out = {"name": self.name, "f": coeffexpr.render(self.f),
               "g": coeffexpr.render(self.g), "h": coeffexpr.render(self.h)}
        if self.has_boundary:
            out["boundary"] = {}
            if self.g0 is not None:
                out["boundary"]["g0"] = coeffexpr.render(self.g0)
            if self.h0 is not None:
                out["boundary"]["h0"] = coeffexpr.render(self.h0)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "TriangleSpec":
        if not isinstance(data, dict):
            raise ValueError("a triangle spec is a JSON object")
        unknown = set(data) - {"name", "f", "g", "h", "boundary"}
        if unknown:
            raise ValueError(f"unknown spec keys: {sorted(unknown)}")
        missing = {"f", "g", "h"} - set(data)
        if missing:
            raise ValueError(f"spec is missing {sorted(missing)}")
        boundary = data.get("boundary") or {}
        if not isinstance(boundary, dict) or set(boundary) - {"g0", "h0"}:
            raise ValueError('"boundary" may only hold "g0" and "h0"')
        return cls.from_strings(str(data.get("name", "custom")), data["f"], data["g"], data["h"],
                                boundary.get("g0"), boundary.get("h0"))

    @classmethod
    def from_json(cls, text: str) -> "TriangleSpec":
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class Triangle:
    rows: tuple[tuple[QPoly, ...], ...]
    name: str = ""

    def __len__(self) -> int:
        return len(self.rows)

    def __getitem__(self, n: int) -> tuple[QPoly, ...]:
        return self.rows[n]

    def column(self, k: int) -> list[QPoly]:
        return column(self, k)

    def at(self, q0) -> list[list[Fraction]]:
        return [[eval_at(p, q0) for p in row] for row in self.rows]

    def to_json(self) -> list[list[list[str]]]:
        return [[p.to_json() for p in row] for row in self.rows]

    @classmethod
    def from_json(cls, data, name: str = "") -> "Triangle":
        return cls(tuple(tuple(QPoly.from_json(p) for p in row) for row in data), name)


_cache: dict[TriangleSpec, list[tuple[QPoly, ...]]] = {}


def _checked(spec: TriangleSpec, which: str, n: int, k: int) -> QPoly:
    p = spec.coeff(which, n, k)
    d = p.first_negative()
    if d is not None:
        expr = coeffexpr.render(spec.expr_for(which, k))
        label = which + ("0" if k == 0 and spec.expr_for(which, k) is not getattr(spec, which) else "")
        raise NegativeCoefficientError(
            f"{spec.name}: {label} = {expr} evaluates to {p} at n={n}, k={k} "
            f"(negative coefficient at q^{d})", n=n, k=k, expr=expr, degree=d)
    return p


def _next_row(spec: TriangleSpec, prev: tuple[QPoly, ...], n: int) -> tuple[QPoly, ...]:
    row = []
    for k in range(n + 1):
        acc = ZERO
        # each coefficient is only evaluated where it multiplies an in-range entry
        if 1 <= k <= len(prev):
            acc = acc + _checked(spec, "f", n, k) * prev[k - 1]
        if k < len(prev):
            acc = acc + _checked(spec, "g", n, k) * prev[k]
        if k + 1 < len(prev):
            acc = acc + _checked(spec, "h", n, k) * prev[k + 1]
        row.append(acc)
    return tuple(row)


def build(spec: TriangleSpec, nrows: int) -> Triangle:
    """Rows ``0..nrows-1``; computed rows are memoized per spec."""
    if nrows < 1:
        raise ValueError("nrows must be at least 1")
    rows = _cache.setdefault(spec, [(ONE,)])
    while len(rows) < nrows:
        rows.append(_next_row(spec, rows[-1], len(rows)))
    return Triangle(tuple(rows[:nrows]), spec.name)


def column(t: Triangle, k: int) -> list[QPoly]:
    """Entries ``t[n][k]`` for every row long enough to have a column ``k``."""
    if k < 0:
        raise ValueError("column index must be nonnegative")
    return [row[k] for row in t.rows if len(row) > k]


_BUILTINS: dict[str, tuple] = {
    "catalan-aigner": ("1", "2", "1", "1", None),
    "catalan-shapiro": ("1", "2", "1", None, None),
    "motzkin": ("1", "1", "1", None, None),
    # recurrence exactly as printed; it does not reproduce the printed table
    "schroeder": ("1", "2", "2", "1", "2"),
    "bell": ("1", "1+k", "1+k", None, None),
    "bell-poly": ("1", "q+k", "q*(1+k)", None, None),
    "eulerian-poly": ("1", "k*q+k+1", "(k+1)^2*q", None, None),
    "narayana-poly": ("1", "q+1", "q", "q", "q"),
}

BUILTIN_NAMES = tuple(_BUILTINS)

# rows 0..3 of the large Schroeder table as printed alongside its recurrence
SCHROEDER_PRINTED_TABLE = ((1,), (2, 1), (6, 4, 1), (22, 16, 6, 1))


def builtin(name: str) -> TriangleSpec:
    try:
        f, g, h, g0, h0 = _BUILTINS[name]
    except KeyError:
        raise UnknownFamilyError(
            f"unknown family {name!r}; choose from {', '.join(BUILTIN_NAMES)}") from None
    return TriangleSpec.from_strings(name, f, g, h, g0, h0)


def multinomial_triangle(w: Window | Sequence[int], nrows: int) -> Triangle:
    """Row ``n`` holds the coefficients of ``(w_0 + w_1 x + ... + w_k x^k)^n``.

    Rows are ragged: row ``n`` has length ``k*n + 1``.
    """
    if nrows < 1:
        raise ValueError("nrows must be at least 1")
    w = w if isinstance(w, Window) else Window(w)
    base = w.poly()
    rows = []
    for n in range(nrows):
        coeffs = (base ** n).coeffs
        coeffs = coeffs + (0,) * (w.k * n + 1 - len(coeffs))
        rows.append(tuple(QPoly.const(c) for c in coeffs))
    return Triangle(tuple(rows), "multinomial" + str(list(w.weights)))
