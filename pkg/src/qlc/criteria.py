"""Bounded-range checks of sufficient conditions for strongly q-log-concave rows.

:func:`check_theorem41` verifies, for every row ``n <= maxn`` and every
``1 <= k <= l <= n``, the seven inequalities on the recurrence coefficients;
:func:`confirm_conclusion` builds the triangle and checks the rows directly.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field

from . import coeffexpr
from .coeffexpr import as_expr
from .errors import NegativeCoefficientError, NotConstantError
from .qpoly import QPoly, q_geq
from .seqprops import Report, Witness, is_strong_q_log_concave
from .triangles import TriangleSpec, build

__all__ = ["ConditionResult", "CriterionReport", "CRITERION_KEYS", "PROPOSITION_KEYS",
           "check_theorem41", "check_proposition", "confirm_conclusion",
           "proposition_spec", "fuzz_spec", "DEFAULT_MAXN"]

DEFAULT_MAXN = 10

CRITERION_KEYS = ("f-slc", "g-slc", "h-slc", "fg-cross", "gh-cross", "fh-cross", "gg-fh")
PROPOSITION_KEYS = ("eg-h", "h-nonneg", "g-e", "e-nonneg")


@dataclass(frozen=True)
class ConditionResult:
    verdict: bool
    n: int | None = None
    k: int | None = None
    l: int | None = None
    degree: int | None = None

    def to_dict(self) -> dict:
        if self.verdict:
            return {"verdict": True}
        out = {"verdict": False}
        for key in ("n", "k", "l", "degree"):
            value = getattr(self, key)
            if value is not None:
                out[key] = value
        return out


@dataclass(frozen=True)
class CriterionReport:
    conditions: dict[str, ConditionResult]
    max_n: int | None = None
    warnings: tuple[str, ...] = field(default=())

    @property
    def overall(self) -> bool:
        return all(c.verdict for c in self.conditions.values())

    def __bool__(self) -> bool:
        return self.overall

    def failed(self) -> list[str]:
        return [key for key, c in self.conditions.items() if not c.verdict]

    def to_dict(self) -> dict:
        out = {key: c.to_dict() for key, c in self.conditions.items()}
        out["overall"] = self.overall
        if self.max_n is not None:
            out["max_n"] = self.max_n
        if self.warnings:
            out["warnings"] = list(self.warnings)
        return out


def _coeff_rows(spec: TriangleSpec, n: int) -> dict[str, list[QPoly]]:
    # the conditions reach k-1 = 0 and l+1 = n+1
    rows = {}
    for which in ("f", "g", "h"):
        expr = getattr(spec, which)
        vals = []
        for k in range(n + 2):
            p = coeffexpr.evaluate(expr, n, k)
            d = p.first_negative()
            if d is not None:
                raise NegativeCoefficientError(
                    f"{spec.name}: {which} = {coeffexpr.render(expr)} is {p} at n={n}, k={k}; "
                    f"the criterion needs nonnegative coefficients for k in [0, n+1]",
                    n=n, k=k, expr=coeffexpr.render(expr), degree=d)
            vals.append(p)
        rows[which] = vals
    return rows


def _conditions(c: dict[str, list[QPoly]], k: int, l: int):
    f, g, h = c["f"], c["g"], c["h"]
    yield "f-slc", f[l] * f[k], f[l + 1] * f[k - 1]
    yield "g-slc", g[l] * g[k], g[l + 1] * g[k - 1]
    yield "h-slc", h[l] * h[k], h[l + 1] * h[k - 1]
    yield ("fg-cross", f[l] * g[k] + f[k] * g[l], f[l + 1] * g[k - 1] + f[k - 1] * g[l + 1])
    yield ("gh-cross", g[l] * h[k] + g[k] * h[l], g[l + 1] * h[k - 1] + g[k - 1] * h[l + 1])
    yield ("fh-cross", f[l] * h[k] + f[k] * h[l], f[k - 1] * h[l + 1] + f[l + 1] * h[k - 1])
    yield "gg-fh", g[k] * g[l], f[l + 1] * h[k - 1]


def check_theorem41(spec: TriangleSpec, maxn: int = DEFAULT_MAXN) -> CriterionReport:
    """Check the coefficient hypotheses for rows ``1..maxn``.

    Witnesses are the smallest ``(n, k, l)`` per condition.  Boundary
    overrides are not part of the hypotheses; only the general ``f, g, h``
    are checked and a warning is attached.
    """
    notes = []
    if spec.has_boundary:
        msg = (f"{spec.name}: k=0 boundary overrides are outside the criterion's hypotheses; "
               "only the general f, g, h were checked")
        warnings.warn(msg, stacklevel=2)
        notes.append(msg)
    first: dict[str, ConditionResult] = {}
    for n in range(1, maxn + 1):
        rows = _coeff_rows(spec, n)
        for k in range(1, n + 1):
            for l in range(k, n + 1):
                for key, lhs, rhs in _conditions(rows, k, l):
                    if key in first:
                        continue
                    ok, d = q_geq(lhs, rhs)
                    if not ok:
                        first[key] = ConditionResult(False, n, k, l, d)
    conditions = {key: first.get(key, ConditionResult(True)) for key in CRITERION_KEYS}
    return CriterionReport(conditions, maxn, tuple(notes))


def _pure_q(e, label: str) -> QPoly:
    expr = as_expr(e)
    extra = coeffexpr.variables(expr) - {"q"}
    if extra:
        raise NotConstantError(
            f"{label} = {coeffexpr.render(expr)} must not depend on {', '.join(sorted(extra))}")
    return coeffexpr.evaluate(expr, 0, 0)


def check_proposition(e, g, h) -> CriterionReport:
    """``e*g >=_q h >=_q 0`` and ``g >=_q e >=_q 0`` for q-only expressions."""
    ev, gv, hv = _pure_q(e, "e"), _pure_q(g, "g"), _pure_q(h, "h")
    checks = {
        "eg-h": q_geq(ev * gv, hv),
        "h-nonneg": q_geq(hv, 0),
        "g-e": q_geq(gv, ev),
        "e-nonneg": q_geq(ev, 0),
    }
    return CriterionReport({key: ConditionResult(ok, degree=d) for key, (ok, d) in checks.items()})


def proposition_spec(e, g, h, name: str = "proposition") -> TriangleSpec:
    """Triangle with ``f = 1``, general ``g, h`` and ``A[n][0] = e A[n-1][0] + h A[n-1][1]``."""
    return TriangleSpec.from_strings(name, "1", g, h, e, h)


def confirm_conclusion(spec: TriangleSpec, maxn: int = DEFAULT_MAXN) -> Report:
    """Strong q-log-concavity of every built row ``0..maxn``."""
    tri = build(spec, maxn + 1)
    for n, row in enumerate(tri.rows):
        rep = is_strong_q_log_concave(row)
        if not rep.verdict:
            w = rep.witness
            return Report("strong-q-log-concave-rows", False,
                          Witness(w.i, w.j, w.degree, w.lhs, w.rhs, row=n))
    return Report("strong-q-log-concave-rows", True)


def _fuzz_poly(rng: random.Random, allow_n: bool) -> str:
    terms = [str(rng.randint(0, 3))]
    for mono in ("k", "q", "k*q", "q^2", "k^2"):
        c = rng.choice((0, 0, 1, 1, 2))
        if c:
            terms.append(mono if c == 1 else f"{c}*{mono}")
    if allow_n and rng.random() < 0.3:
        terms.append("n")
    return "+".join(terms)


def fuzz_spec(seed: int) -> TriangleSpec:
    """Deterministic random spec with nonnegative coefficient expressions.

    ``g`` always has a positive constant term so that rows keep a nonzero
    diagonal band and never develop internal zeros.
    """
    rng = random.Random(seed)
    f = rng.choice(("1", "1", "1", "q", "k+1", "1+q", _fuzz_poly(rng, False)))
    g = _fuzz_poly(rng, allow_n=True)
    if g.startswith("0"):
        g = "1" + g[1:]
    shape = rng.random()
    if shape < 0.4:
        h = _fuzz_poly(rng, allow_n=False)
    elif shape < 0.8:
        h = f"{rng.randint(0, 2)}*q^{rng.randint(0, 2)}*(k+1)^{rng.randint(0, 2)}"
    else:
        h = "0"
    return TriangleSpec.from_strings(f"fuzz-{seed}", f, g, h)
