"""Batch command-line front end: tables, evaluations, series dumps,
identity-suite runs, and exports.

Every verb is a thin delegate into the library; no math lives here.
Rationals cross the CLI boundary as "p/q" text in both directions.
Exit codes: 0 success, 1 identity failures, 2 usage errors.

If POLYCAUCHY_CACHE_DIR is set, the integer triangle caches are loaded
from that directory on startup and saved back on exit (TSV files, one
per triangle, with a version header).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import fields as dataclass_fields
from fractions import Fraction
from math import factorial

from . import bernoulli, cauchy, harmonic, series, stirling
from .identities import DEFAULT_GRID, Grid, run_all, verify
from .poly import Poly, poly_from_strings, poly_to_strings
from .rational import format_rational, parse_rational

_TRIANGLES = ("stirling1", "stirling2", "central", "lah")
_SEQUENCE_TABLES = ("cauchy-numbers", "bernoulli", "hyperharmonic")

_GRID_INT_KEYS = ("max_n", "max_n_double", "max_k", "max_r", "max_a", "max_n_multi")
_GRID_LIST_KEYS = ("qs", "xs", "ys_multi")


class UsageError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycauchy",
        description="Exact tables, evaluations, series and identity checks "
        "for the Cauchy / Stirling / Bernoulli / hyperharmonic families.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p_table = sub.add_parser("table", help="emit a triangle or sequence as TSV")
    p_table.add_argument("family", choices=_TRIANGLES + _SEQUENCE_TABLES)
    p_table.add_argument("--max-n", type=int, default=10)
    p_table.add_argument("--n", type=int, help="alias for --max-n")
    p_table.add_argument("--kind", choices=("first", "second"), default="first")
    p_table.add_argument("--k", type=int, default=1)
    p_table.add_argument("--out", help="write to a file instead of stdout")

    p_eval = sub.add_parser("eval", help="evaluate one family member exactly")
    p_eval.add_argument(
        "family",
        choices=(
            "cauchy",
            "bernoulli-poly",
            "gen-bernoulli",
            "euler-poly",
            "power-sum",
            "hyperharmonic",
            "harmonic-poly",
        ),
    )
    p_eval.add_argument("--n", type=int, required=True)
    p_eval.add_argument("--k", type=int, default=1)
    p_eval.add_argument("--kind", choices=("first", "second"), default="first")
    p_eval.add_argument("--alpha", type=int, default=1)
    p_eval.add_argument("--x", type=parse_rational, default=Fraction(0))

    p_series = sub.add_parser("series", help="dump generating-function coefficients")
    p_series.add_argument(
        "gf", choices=("cauchy1", "cauchy2", "gen-bernoulli", "hyperharmonic", "harmonic")
    )
    p_series.add_argument("--order", type=int, default=8)
    p_series.add_argument("--alpha", type=int, default=1)
    p_series.add_argument("--out")

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--id", help="run a single case instead of the full catalog")
    p_verify.add_argument("--json", action="store_true", help="machine-readable output")
    p_verify.add_argument("--config", help="key=value file overriding grid defaults")
    p_verify.add_argument("--out", help="write the report to a file as well")
    for key in _GRID_INT_KEYS:
        p_verify.add_argument(f"--{key.replace('_', '-')}", type=int, default=None)

    p_export = sub.add_parser("export", help="write family data to a file")
    p_export.add_argument("--family", required=True,
                          choices=("cauchy-poly", "cauchy-numbers", "bernoulli", "hyperharmonic"))
    p_export.add_argument("--format", required=True, choices=("json", "tsv"))
    p_export.add_argument("--out", required=True)
    p_export.add_argument("--kind", choices=("first", "second"), default="first")
    p_export.add_argument("--n", type=int, default=6)
    p_export.add_argument("--k", type=int, default=1)
    p_export.add_argument("--max-n", type=int, default=6)

    return parser


def _write_lines(lines, out_path):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_table(args) -> int:
    max_n = args.n if args.n is not None else args.max_n
    lines: list[str] = []
    if args.family in _TRIANGLES:
        lines.append("n\tm\tvalue")
        for n, m, v in stirling.triangle_rows(args.family, max_n):
            lines.append(f"{n}\t{m}\t{v}")
    elif args.family == "cauchy-numbers":
        lines.append("n\tvalue")
        for n in range(max_n + 1):
            lines.append(f"{n}\t{format_rational(cauchy.cauchy_number(args.kind, n, args.k))}")
    elif args.family == "bernoulli":
        lines.append("n\tvalue")
        for n in range(max_n + 1):
            lines.append(f"{n}\t{format_rational(bernoulli.bernoulli_number(n))}")
    else:  # hyperharmonic
        lines.append("n\tcoefficients")
        for n in range(max_n + 1):
            coeffs = ",".join(poly_to_strings(harmonic.hyperharmonic_poly(n)))
            lines.append(f"{n}\t{coeffs}")
    _write_lines(lines, args.out)
    return 0


def _cmd_eval(args) -> int:
    if args.family == "cauchy":
        value = cauchy.cauchy_poly(args.kind, args.n, args.k)(args.x)
    elif args.family == "bernoulli-poly":
        value = bernoulli.bernoulli_poly(args.n)(args.x)
    elif args.family == "gen-bernoulli":
        value = bernoulli.gen_bernoulli_poly(args.n, args.alpha)(args.x)
    elif args.family == "euler-poly":
        value = bernoulli.euler_poly(args.n)(args.x)
    elif args.family == "power-sum":
        value = bernoulli.power_sum_poly(args.n)(args.x)
    elif args.family == "hyperharmonic":
        value = harmonic.hyperharmonic_poly(args.n)(args.x)
    else:  # harmonic-poly
        value = harmonic.harmonic_poly(args.n)(args.x)
    print(format_rational(value))
    return 0


def _cmd_series(args) -> int:
    if args.gf == "cauchy1":
        s = series.gf_cauchy1(args.order)
    elif args.gf == "cauchy2":
        s = series.gf_cauchy2(args.order)
    elif args.gf == "gen-bernoulli":
        s = series.gf_gen_bernoulli(args.alpha, args.order)
    elif args.gf == "hyperharmonic":
        s = series.gf_hyperharmonic(args.order)
    else:
        s = series.gf_harmonic_poly(args.order)
    lines = ["n\tn!\tcoefficient"]
    for n in range(args.order + 1):
        c = s[n]
        poly = c if isinstance(c, Poly) else Poly.const(c)
        lines.append(f"{n}\t{factorial(n)}\t{poly}")
    _write_lines(lines, args.out)
    return 0


def _parse_config(path: str) -> dict:
    overrides: dict = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"bad config line (want key=value): {line!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key in _GRID_INT_KEYS:
                overrides[key] = int(value)
            elif key in _GRID_LIST_KEYS:
                overrides[key] = tuple(parse_rational(v) for v in value.split(",") if v)
            else:
                raise UsageError(f"unknown config key {key!r}")
    return overrides


def _grid_from_args(args) -> Grid:
    overrides: dict = {}
    if args.config:
        overrides.update(_parse_config(args.config))
    for key in _GRID_INT_KEYS:
        flag = getattr(args, key)
        if flag is not None:
            overrides[key] = flag
    valid = {f.name for f in dataclass_fields(Grid)}
    bad = set(overrides) - valid
    if bad:
        raise UsageError(f"unknown grid settings: {sorted(bad)}")
    return DEFAULT_GRID.with_overrides(**overrides)


def _cmd_verify(args) -> int:
    grid = _grid_from_args(args)
    if args.id:
        try:
            report = verify(args.id, grid)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        payload = json.dumps(report.to_dict(), indent=2)
        if args.json:
            print(payload)
        else:
            status = "probe" if report.probe else ("pass" if report.ok else "FAIL")
            print(f"{report.case_id}: {status} ({report.points} points, {report.millis} ms)")
            if report.finding:
                print(f"  finding: {report.finding}")
            for f in report.failures[:10]:
                print(f"  at {f['params']}: {f['lhs']} != {f['rhs']}")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(payload + "\n")
        return 0 if report.ok else 1

    result = run_all(grid)
    if args.json:
        print(result.to_json())
    else:
        for report in result.reports:
            status = "probe" if report.probe else ("pass" if report.ok else "FAIL")
            line = f"{report.case_id:30s} {status:5s} {report.points:6d} points {report.millis:6d} ms"
            print(line)
            if report.finding:
                print(f"{'':30s} finding: {report.finding}")
            for f in report.failures[:5]:
                print(f"{'':30s} at {f['params']}: {f['lhs']} != {f['rhs']}")
        print("--")
        for g in result.group_summary():
            print(
                f"{g['group']}: {g['cases']} cases, {g['points']} points, "
                f"{g['failures']} failures"
            )
        print(
            f"total: {len(result.reports)} cases, "
            f"{sum(r.points for r in result.reports)} points, "
            f"{result.failures} failures"
        )
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(result.to_json() + "\n")
    return 0 if result.ok else 1


def _cmd_export(args) -> int:
    if args.family == "cauchy-poly":
        poly = cauchy.cauchy_poly(args.kind, args.n, args.k)
        params = {"kind": args.kind, "n": args.n, "k": args.k}
        if args.format == "json":
            payload = {"family": "cauchy-poly", "params": params,
                       "coefficients": poly_to_strings(poly)}
            _write_lines([json.dumps(payload, indent=2)], args.out)
        else:
            lines = ["i\tcoefficient"]
            lines += [f"{i}\t{s}" for i, s in enumerate(poly_to_strings(poly))]
            _write_lines(lines, args.out)
        return 0
    if args.family == "hyperharmonic":
        poly = harmonic.hyperharmonic_poly(args.n)
        if args.format == "json":
            payload = {"family": "hyperharmonic", "params": {"n": args.n},
                       "coefficients": poly_to_strings(poly)}
            _write_lines([json.dumps(payload, indent=2)], args.out)
        else:
            lines = ["i\tcoefficient"]
            lines += [f"{i}\t{s}" for i, s in enumerate(poly_to_strings(poly))]
            _write_lines(lines, args.out)
        return 0
    # sequence families
    if args.family == "cauchy-numbers":
        values = [
            (n, format_rational(cauchy.cauchy_number(args.kind, n, args.k)))
            for n in range(args.max_n + 1)
        ]
        params = {"kind": args.kind, "k": args.k, "max_n": args.max_n}
    else:
        values = [
            (n, format_rational(bernoulli.bernoulli_number(n))) for n in range(args.max_n + 1)
        ]
        params = {"max_n": args.max_n}
    if args.format == "json":
        payload = {"family": args.family, "params": params,
                   "values": [v for _, v in values]}
        _write_lines([json.dumps(payload, indent=2)], args.out)
    else:
        lines = ["n\tvalue"] + [f"{n}\t{v}" for n, v in values]
        _write_lines(lines, args.out)
    return 0


def load_exported_poly(path: str) -> Poly:
    """Re-import a JSON polynomial export (exact round-trip)."""
    with open(path, encoding="utf-8") as fh:
        payload = json.load(fh)
    return poly_from_strings(payload["coefficients"])


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    stirling.load_triangle_caches()
    try:
        if args.verb == "table":
            code = _cmd_table(args)
        elif args.verb == "eval":
            code = _cmd_eval(args)
        elif args.verb == "series":
            code = _cmd_series(args)
        elif args.verb == "verify":
            code = _cmd_verify(args)
        else:
            code = _cmd_export(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    stirling.save_triangle_caches()
    return code


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
