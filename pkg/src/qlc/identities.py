"""Binomial-coefficient identities behind the shifted binomial transform.

Each identity is a pair of callables ``(lhs, rhs)`` of ``(a, b)`` returning
exact values; :func:`check_identities` compares them over ``0 <= b <= a``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .transforms import binom as C

__all__ = ["Identity", "PRINTED", "SUPPLEMENTARY", "CORRECTED", "IdentityResult",
           "check_identities"]


@dataclass(frozen=True)
class Identity:
    name: str
    text: str
    lhs: Callable[[int, int], Fraction]
    rhs: Callable[[int, int], Fraction]


def _f(num, den=1) -> Fraction:
    return Fraction(num, den)


PRINTED = (
    Identity("square-b",
             "C(a+1,b)^2 - C(a,b)C(a+2,b) = C(a+1,b-1)C(a,b)",
             lambda a, b: _f(C(a + 1, b) ** 2 - C(a, b) * C(a + 2, b)),
             lambda a, b: _f(C(a + 1, b - 1) * C(a, b))),
    Identity("square-b+1",
             "C(a+1,b+1)^2 - C(a,b)C(a+2,b+2) = C(a+1,b+2)C(a,b)/(b+1)",
             lambda a, b: _f(C(a + 1, b + 1) ** 2 - C(a, b) * C(a + 2, b + 2)),
             lambda a, b: _f(C(a + 1, b + 2) * C(a, b), b + 1)),
    Identity("cross-b",
             "2C(a+1,b)C(a+1,b+1) - C(a,b)C(a+2,b+1) = a C(a+1,b+1)C(a,b)/(a-b+1)",
             lambda a, b: _f(2 * C(a + 1, b) * C(a + 1, b + 1) - C(a, b) * C(a + 2, b + 1)),
             lambda a, b: _f(a * C(a + 1, b + 1) * C(a, b), a - b + 1)),
    Identity("shift-3",
             "C(a+1,b+1)C(a+2,b+2) - C(a,b)C(a+3,b+3) = 2(a-b)C(a,b)C(a+2,b+2)/((b+1)(b+3))",
             lambda a, b: _f(C(a + 1, b + 1) * C(a + 2, b + 2) - C(a, b) * C(a + 3, b + 3)),
             lambda a, b: _f(2 * (a - b) * C(a, b) * C(a + 2, b + 2), (b + 1) * (b + 3))),
)

# the remaining equalities used for y1*y2 - y0*y3 in the base case
SUPPLEMENTARY = (
    Identity("cubic-x0x0",
             "C(a+1,b)C(a+2,b) - C(a,b)C(a+3,b) = 2b C(a,b)C(a+2,b)/((a+1-b)(a+3-b))",
             lambda a, b: _f(C(a + 1, b) * C(a + 2, b) - C(a, b) * C(a + 3, b)),
             lambda a, b: _f(2 * b * C(a, b) * C(a + 2, b), (a + 1 - b) * (a + 3 - b))),
    Identity("cubic-x0x1",
             "C(a+1,b)C(a+2,b+1) + C(a+1,b+1)C(a+2,b) - C(a,b)C(a+3,b+1)"
             " = (a(a-b)+a+b) C(a,b)C(a+2,b+1)/((a+1-b)(a+2-b))",
             lambda a, b: _f(C(a + 1, b) * C(a + 2, b + 1) + C(a + 1, b + 1) * C(a + 2, b)
                             - C(a, b) * C(a + 3, b + 1)),
             lambda a, b: _f((a * (a - b) + a + b) * C(a, b) * C(a + 2, b + 1),
                             (a + 1 - b) * (a + 2 - b))),
    Identity("cubic-x0x2",
             "C(a+1,b+1)C(a+2,b+1) + C(a+1,b)C(a+2,b+2) - C(a,b)C(a+3,b+2)"
             " = (ab+2a-b) C(a,b)C(a+2,b+1)/((1+b)(2+b))",
             lambda a, b: _f(C(a + 1, b + 1) * C(a + 2, b + 1) + C(a + 1, b) * C(a + 2, b + 2)
                             - C(a, b) * C(a + 3, b + 2)),
             lambda a, b: _f((a * b + 2 * a - b) * C(a, b) * C(a + 2, b + 1), (1 + b) * (2 + b))),
)

# "square-b" with the factor 1/(a-b+1) it needs to hold
CORRECTED = Identity(
    "square-b-corrected",
    "C(a+1,b)^2 - C(a,b)C(a+2,b) = C(a+1,b-1)C(a,b)/(a-b+1)",
    lambda a, b: _f(C(a + 1, b) ** 2 - C(a, b) * C(a + 2, b)),
    lambda a, b: _f(C(a + 1, b - 1) * C(a, b), a - b + 1),
)


@dataclass(frozen=True)
class IdentityResult:
    name: str
    holds: bool
    checked: int
    counterexample: tuple[int, int] | None = None
    lhs: Fraction | None = None
    rhs: Fraction | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "holds": self.holds, "checked": self.checked}
        if self.counterexample is not None:
            a, b = self.counterexample
            out["counterexample"] = {"a": a, "b": b, "lhs": str(self.lhs), "rhs": str(self.rhs)}
        return out


def check_identities(max_a: int, identities=PRINTED) -> list[IdentityResult]:
    """Compare both sides exactly for every ``0 <= b <= a <= max_a``."""
    results = []
    for ident in identities:
        hit = None
        checked = 0
        for a in range(max_a + 1):
            for b in range(a + 1):
                checked += 1
                lhs, rhs = ident.lhs(a, b), ident.rhs(a, b)
                if lhs != rhs and hit is None:
                    hit = (a, b, lhs, rhs)
        if hit is None:
            results.append(IdentityResult(ident.name, True, checked))
        else:
            results.append(IdentityResult(ident.name, False, checked, hit[:2], hit[2], hit[3]))
    return results
