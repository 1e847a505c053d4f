"""Command-line front end.

Exit status: 0 when the command succeeds or the checked property holds,
1 when a property fails (the witness goes to stderr as JSON), 2 on usage,
input or I/O errors.
"""
from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import sys
import warnings
from fractions import Fraction

from . import coeffexpr, criteria, identities, seqprops, transforms, triangles
from .errors import QlcError
from .qpoly import QPoly, eval_at, to_fraction

PROPERTIES = ("log-concave", "log-convex", "q-log-concave", "strong-q-log-concave",
              "strong-q-log-convex", "internal-zeros", "tp2-window")
_NUMERIC = {"log-concave", "log-convex", "tp2-window"}


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qlc", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    t = sub.add_parser("triangle", help="generate a triangular array")
    src = t.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=triangles.BUILTIN_NAMES)
    src.add_argument("--spec", metavar="FILE")
    t.add_argument("--rows", type=int, required=True)
    t.add_argument("--column", type=int)
    t.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    t.add_argument("--eval-q", metavar="RAT")

    c = sub.add_parser("check", help="check a sequence property")
    c.add_argument("property", choices=PROPERTIES)
    c.add_argument("--input", required=True, metavar="FILE")
    c.add_argument("--eval-q", metavar="RAT")

    x = sub.add_parser("transform", help="apply a linear transform")
    x.add_argument("kind", choices=("binomial", "window", "multinomial"))
    x.add_argument("--a", type=int)
    x.add_argument("--b", type=int)
    x.add_argument("--weights", metavar="FILE")
    x.add_argument("--input", required=True, metavar="FILE")
    x.add_argument("--upto", type=int, required=True)

    v = sub.add_parser("verify", help="check recurrence hypotheses or row conclusions")
    v.add_argument("what", choices=("thm41", "proposition", "conclusion"))
    src = v.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", choices=triangles.BUILTIN_NAMES)
    src.add_argument("--spec", metavar="FILE")
    v.add_argument("--max-n", type=int, default=criteria.DEFAULT_MAXN)

    i = sub.add_parser("identities", help="check the binomial identities")
    i.add_argument("--max-a", type=int, default=30)
    i.add_argument("--corrected", action="store_true",
                   help="replace square-b by its corrected form and add the supplementary set")
    return p


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _load_spec(args) -> triangles.TriangleSpec:
    if args.family:
        return triangles.builtin(args.family)
    return triangles.TriangleSpec.from_dict(_load_json(args.spec))


def _load_seq(path: str) -> list:
    """Items are QPoly (JSON arrays) or Fractions (decimal strings)."""
    data = _load_json(path)
    if not isinstance(data, list):
        raise ValueError(f"{path}: expected a JSON array")
    out = []
    for item in data:
        if isinstance(item, list):
            out.append(QPoly.from_json(item))
        elif isinstance(item, (str, int)) and not isinstance(item, bool):
            out.append(to_fraction(item))
        else:
            raise ValueError(f"{path}: bad sequence item {item!r}")
    return out


def _as_polys(seq) -> list[QPoly]:
    out = []
    for v in seq:
        if isinstance(v, QPoly):
            out.append(v)
        elif v.denominator == 1:
            out.append(QPoly.const(v.numerator))
        else:
            raise ValueError(f"{v} is not an integer; polynomial checks need integer coefficients")
    return out


def _as_numbers(seq, q0) -> list[Fraction]:
    out = []
    for v in seq:
        if isinstance(v, QPoly):
            if q0 is None:
                if not v.is_constant():
                    raise UsageError("input holds non-constant polynomials; pass --eval-q")
                v = Fraction(v.constant_term())
            else:
                v = eval_at(v, q0)
        out.append(v)
    return out


def _num(v) -> str:
    return str(v)


def _emit_fail(payload, err) -> int:
    json.dump(payload, err, sort_keys=True)
    err.write("\n")
    return 1


def _cmd_triangle(args, out) -> int:
    if args.rows < 1:
        raise UsageError("--rows must be at least 1")
    spec = _load_spec(args)
    tri = triangles.build(spec, args.rows)
    q0 = to_fraction(args.eval_q) if args.eval_q is not None else None
    rows = [list(r) for r in tri.rows]
    if args.column is not None:
        if args.column < 0:
            raise UsageError("--column must be nonnegative")
        rows = [[p] for p in triangles.column(tri, args.column)]

    def cell(p, as_json):
        if q0 is not None:
            return _num(eval_at(p, q0))
        return p.to_json() if as_json else p.render()

    if args.format == "json":
        if args.column is not None:
            json.dump([cell(r[0], True) for r in rows], out)
        else:
            json.dump([[cell(p, True) for p in r] for r in rows], out)
        out.write("\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for r in rows:
            writer.writerow([cell(p, False) for p in r])
        out.write(buf.getvalue())
    else:
        for r in rows:
            out.write("  ".join(cell(p, False) for p in r) + "\n")
    return 0


def _cmd_check(args, out, err) -> int:
    seq = _load_seq(args.input)
    q0 = to_fraction(args.eval_q) if args.eval_q is not None else None
    if args.property == "internal-zeros":
        values = _as_numbers(seq, q0) if q0 is not None else seq
        idx = seqprops.first_internal_zero(values)
        report = {"property": "internal-zeros", "internal_zeros": idx is not None,
                  "verdict": idx is None}
        json.dump(report, out, sort_keys=True)
        out.write("\n")
        if idx is not None:
            return _emit_fail({"property": "internal-zeros", "index": idx}, err)
        return 0
    if args.property in _NUMERIC:
        values = _as_numbers(seq, q0)
        if args.property == "tp2-window":
            if any(v.denominator != 1 for v in values):
                raise ValueError("tp2-window needs integer weights")
            report = seqprops.tp2_window_check([int(v) for v in values])
        elif args.property == "log-concave":
            report = seqprops.is_log_concave(values)
        else:
            report = seqprops.is_log_convex(values)
    else:
        if q0 is not None:
            raise UsageError("--eval-q applies to numeric properties only")
        polys = _as_polys(seq)
        fn = {"q-log-concave": seqprops.is_q_log_concave,
              "strong-q-log-concave": seqprops.is_strong_q_log_concave,
              "strong-q-log-convex": seqprops.is_strong_q_log_convex}[args.property]
        report = fn(polys)
    json.dump(report.to_dict(), out, sort_keys=True)
    out.write("\n")
    if not report.verdict:
        return _emit_fail(report.to_dict(), err)
    return 0


def _weights(path: str) -> transforms.Window:
    data = _load_json(path)
    if not isinstance(data, list):
        raise ValueError(f"{path}: weights must be a JSON array")
    vals = [to_fraction(v) if not isinstance(v, bool) else None for v in data]
    if any(v is None or v.denominator != 1 for v in vals):
        raise ValueError(f"{path}: weights must be integers")
    return transforms.Window([int(v) for v in vals])


def _cmd_transform(args, out) -> int:
    if args.upto < 0:
        raise UsageError("--upto must be nonnegative")
    seq = _load_seq(args.input)
    if args.kind == "binomial":
        if args.a is None or args.b is None:
            raise UsageError("binomial needs --a and --b")
        ys = transforms.binomial_transform((args.a, args.b), _as_polys(seq), args.upto)
        json.dump([y.to_json() for y in ys], out)
    elif args.kind == "window":
        if args.weights is None:
            raise UsageError("window needs --weights")
        w = _weights(args.weights)
        need = args.upto + len(w)
        if len(seq) < need:
            raise transforms.LengthError(f"need at least upto+len(weights) = {need} inputs")
        ys = transforms.window_convolve(w, _as_polys(seq)[:need])
        json.dump([y.to_json() for y in ys], out)
    else:
        if args.weights is None:
            raise UsageError("multinomial needs --weights")
        w = _weights(args.weights)
        ys = transforms.multinomial_transform(w, _as_numbers(seq, None), args.upto)
        json.dump([_num(y) for y in ys], out)
    out.write("\n")
    return 0


def _proposition_parts(spec: triangles.TriangleSpec):
    if coeffexpr.render(spec.f) != "1":
        raise UsageError(f"{spec.name}: the proposition needs f = 1")
    if spec.h0 is not None and spec.h0 != spec.h:
        raise UsageError(f"{spec.name}: the proposition needs the same h at k = 0")
    e = spec.g0 if spec.g0 is not None else spec.g
    return e, spec.g, spec.h


def _cmd_verify(args, out, err) -> int:
    if args.max_n < 0:
        raise UsageError("--max-n must be nonnegative")
    spec = _load_spec(args)
    if args.what == "conclusion":
        report = criteria.confirm_conclusion(spec, args.max_n)
        payload = report.to_dict()
        payload["max_n"] = args.max_n
        verdict = report.verdict
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            if args.what == "thm41":
                report = criteria.check_theorem41(spec, args.max_n)
            else:
                report = criteria.check_proposition(*_proposition_parts(spec))
        payload = report.to_dict()
        verdict = report.overall
    json.dump(payload, out, sort_keys=True)
    out.write("\n")
    if not verdict:
        return _emit_fail(payload, err)
    return 0


def _cmd_identities(args, out, err) -> int:
    if args.max_a < 0:
        raise UsageError("--max-a must be nonnegative")
    chosen = identities.PRINTED
    if args.corrected:
        chosen = (identities.CORRECTED,) + identities.PRINTED[1:] + identities.SUPPLEMENTARY
    results = identities.check_identities(args.max_a, chosen)
    payload = {"max_a": args.max_a, "identities": [r.to_dict() for r in results],
               "overall": all(r.holds for r in results)}
    json.dump(payload, out, sort_keys=True)
    out.write("\n")
    if not payload["overall"]:
        return _emit_fail([r.to_dict() for r in results if not r.holds], err)
    return 0


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = _parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        if args.command == "triangle":
            return _cmd_triangle(args, out)
        if args.command == "check":
            return _cmd_check(args, out, err)
        if args.command == "transform":
            return _cmd_transform(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out, err)
        return _cmd_identities(args, out, err)
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"qlc: error: {exc}\n")
        return 2
    except (QlcError, ValueError, TypeError, KeyError, OSError) as exc:
        err.write(f"qlc: error: {exc}\n")
        return 2


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    raise SystemExit(main())
