"""Command line front end.

Exit codes: 0 success, 1 a mathematical mismatch, 2 a usage or parameter
error, 3 data unavailable (offline cache miss or failed download).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from fractions import Fraction
from typing import Sequence

from . import formulas as fm
from . import identities as ids
from . import oeis, verify
from .errors import (FetchError, IntegralityError, OfflineError, ParameterError,
                     SizeLimitError)
from .exact import format_rational
from .graphs import Family, FamilySpec, make_family
from .oracle import DP_LIMIT, count_labelings_dp

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_UNAVAILABLE = 0, 1, 2, 3

FAMILY_CHOICES = [f.value for f in Family] + ["friendship"]
IDENTITIES = ("hockey", "kka", "a087547", "a233449", "ode", "eulerian")
EULERIAN_BANNER = ("informational: published claim unverified under the standard "
                   "convention <n,1> = 2^n - n - 1")


class UsageError(Exception):
    pass


# --- output -----------------------------------------------------------------

def render(rows: list[dict], fmt: str, summary: dict | None = None,
           banner: str | None = None) -> str:
    """Render rows of string-valued dicts as a table, CSV or one JSON document."""
    rows = [{k: _cell(v) for k, v in row.items()} for row in rows]
    if fmt == "json":
        doc = {"rows": rows}
        if summary is not None:
            doc["summary"] = {k: _cell(v) for k, v in summary.items()}
        if banner:
            doc["banner"] = banner
        return json.dumps(doc, indent=2) + "\n"
    headers = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=headers, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    out = []
    if banner:
        out.append(banner)
    if rows:
        widths = [max(len(h), *(len(r[h]) for r in rows)) for h in headers]
        out.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip())
        out.append("  ".join("-" * w for w in widths))
        for r in rows:
            out.append("  ".join(r[h].ljust(w) for h, w in zip(headers, widths)).rstrip())
    if summary:
        out.append(", ".join(f"{k}: {_cell(v)}" for k, v in summary.items()))
    return "\n".join(out) + "\n"


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return format_rational(value)
    return str(value)


def parse_range(text: str | None) -> list[int] | None:
    """Parse "3..6" to [3, 4, 5, 6] and "4" to [4]."""
    if text is None:
        return None
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected N or A..B") from None


# --- count / sequence -------------------------------------------------------

def _resolve(family: str, m: int | None, n: int | None) -> tuple[FamilySpec, int]:
    if family == "friendship":
        if m is None:
            raise ParameterError("friendship requires m")
        if n not in (None, 3):
            raise ParameterError("friendship is the one-point union of triangles; n is fixed at 3")
        spec = FamilySpec(Family.ONE_POINT_UNION, m=m, n=3)
        return spec, fm.friendship_count(m)
    spec = FamilySpec(Family(family), m=m, n=n)
    return spec, fm.family_count(spec)


def cmd_count(args) -> int:
    spec, value = _resolve(args.family, args.m, args.n)
    row = {"family": args.family, "m": spec.m, "n": spec.n,
           "vertices": spec.vertex_count, "formula": value}
    code = EXIT_OK
    if args.oracle:
        if spec.vertex_count > args.dp_limit:
            raise ParameterError(f"{spec.vertex_count} vertices exceeds the DP cap {args.dp_limit}")
        oracle_value = count_labelings_dp(make_family(spec), args.dp_limit)
        row["oracle"] = oracle_value
        row["agree"] = oracle_value == value
        code = EXIT_OK if oracle_value == value else EXIT_MISMATCH
    sys.stdout.write(render([row], args.format))
    return code


def cmd_sequence(args) -> int:
    ms, ns = parse_range(args.m), parse_range(args.n)
    two = args.family != "friendship" and Family(args.family) in (
        Family.BARBELL, Family.LOLLIPOP, Family.TADPOLE, Family.ONE_POINT_UNION, Family.SNAKE)
    if args.family == "friendship":
        if ms is None:
            raise UsageError("friendship needs --m")
        points = [(m, None) for m in ms]
    elif two:
        if ms is None or ns is None:
            raise UsageError(f"{args.family} needs both --m and --n")
        points = [(m, n) for m in ms for n in ns]
    else:
        if ns is None:
            raise UsageError(f"{args.family} needs --n")
        if ms is not None:
            raise UsageError(f"{args.family} takes only --n")
        points = [(None, n) for n in ns]
    rows = []
    for m, n in points:
        _, value = _resolve(args.family, m, n)
        row = {}
        if m is not None:
            row["m"] = m
        if n is not None:
            row["n"] = n
        row["count"] = value
        rows.append(row)
    sys.stdout.write(render(rows, args.format))
    return EXIT_OK


# --- verify -----------------------------------------------------------------

def cmd_verify(args) -> int:
    if args.scope != "all" and args.scope not in verify.SCOPES:
        raise UsageError(f"unknown scope {args.scope!r}; choose from all, {', '.join(verify.SCOPES)}")
    results = verify.run(args.scope, args.max_vertices, spots=args.spot_checks)
    failed = [r for r in results if not r.ok]
    shown = failed if args.failures_only else results
    rows = [{"scope": r.scope, "check": r.check, "point": r.point,
             "expected": r.expected, "got": r.got, "ok": r.ok} for r in shown]
    summary = {"checks": len(results), "failed": len(failed),
               "status": "ok" if not failed else "FAIL"}
    sys.stdout.write(render(rows, args.format, summary))
    return EXIT_OK if not failed else EXIT_MISMATCH


# --- identity ---------------------------------------------------------------

def _hockey_points(limit: int):
    for x in range(-5, 21):
        for r in range(11):
            for n in range(min(limit, 20) + 1):
                yield Fraction(x), r, n
    rng = random.Random(20240517)
    for _ in range(50):
        x = Fraction(rng.randint(-30, 30), rng.randint(1, 12))
        yield x, rng.randint(0, 10), rng.randint(0, min(limit, 20))


def identity_checks(name: str, limit: int | None, order: int) -> list[ids.IdentityCheck]:
    if name == "hockey":
        return [ids.hockey_stick_real(x, r, n) for x, r, n in _hockey_points(limit or 20)]
    if name == "kka":
        top = 60 if limit is None else limit
        return [ids.kka_identity(m, n) for m in range(top + 1) for n in range(top + 1)]
    if name == "a087547":
        return [ids.a087547_pair(n) for n in range(1, (limit or 200) + 1)]
    if name == "a233449":
        count = (limit or 200) + 1
        a = ids.a233449_terms(count)
        return [ids.IdentityCheck("a233449_recurrence", {"n": n},
                                  Fraction(a[n]), Fraction((n + 2) * a[n - 1] - 2 * n * a[n - 2]))
                for n in range(2, count)]
    if name == "ode":
        residual = ids.ode_residual(order)
        f0, f1 = ids.ode_initial_conditions()
        checks = [ids.IdentityCheck("ode_residual", {"coeff": i}, c, Fraction(0))
                  for i, c in enumerate(residual.coeffs)]
        checks.append(ids.IdentityCheck("ode_f(0)", {}, f0, Fraction(1)))
        checks.append(ids.IdentityCheck("ode_f'(0)", {}, f1, Fraction(3)))
        return checks
    if name == "eulerian":
        return [ids.eulerian_claim_report(n) for n in range(1, (limit or 10) + 1)]
    raise UsageError(f"unknown identity {name!r}; choose from all, {', '.join(IDENTITIES)}")


def cmd_identity(args) -> int:
    names = IDENTITIES if args.name == "all" else (args.name,)
    if args.name != "all" and args.name not in IDENTITIES:
        raise UsageError(f"unknown identity {args.name!r}; choose from all, {', '.join(IDENTITIES)}")
    rows = []
    failed = 0
    for name in names:
        for check in identity_checks(name, args.max, args.order):
            params = " ".join(f"{k}={_cell(v)}" for k, v in check.params.items())
            rows.append({"identity": check.name, "params": params,
                         "lhs": check.lhs, "rhs": check.rhs, "equal": check.equal})
            if name != "eulerian" and not check.equal:
                failed += 1
    banner = EULERIAN_BANNER if "eulerian" in names else None
    summary = {"checks": len(rows), "failed": failed, "status": "ok" if not failed else "FAIL"}
    sys.stdout.write(render(rows, args.format, summary, banner))
    return EXIT_OK if not failed else EXIT_MISMATCH


# --- oeis -------------------------------------------------------------------

OEIS_MAPPED = ("A233449", "A087547", "A130128")


def cmd_oeis(args) -> int:
    seq_id = args.id.upper()
    oeis.check_id(seq_id)
    if seq_id not in OEIS_MAPPED:
        raise UsageError(f"{seq_id} is not mapped; choose from {', '.join(OEIS_MAPPED)}")
    record, report, alignment = oeis.cross_validate(
        seq_id, offline=args.offline, cache_dir=args.cache_dir, max_terms=args.max_terms)
    rows = [{"id": seq_id, "source": record.source, "alignment": alignment,
             "compared": report.compared, "agree": report.agree}]
    summary = None
    if not report.agree:
        mm = report.first_mismatch
        summary = {"first_mismatch_index": mm.index, "expected": mm.expected,
                   "computed": mm.computed}
    sys.stdout.write(render(rows, args.format, summary))
    return EXIT_OK if report.agree else EXIT_MISMATCH


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default=argparse.SUPPRESS)
    common.add_argument("--offline", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="rwlabel", description="Exact counts of random walk labelings.")
    parser.add_argument("--format", choices=("table", "csv", "json"), default="table")
    parser.add_argument("--offline", action="store_true", default=False,
                        help="never touch the network")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="closed-form count for one graph")
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--oracle", action="store_true", help="also run the subset DP")
    p.add_argument("--dp-limit", type=int, default=DP_LIMIT)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", parents=[common], help="formula vs oracle sweeps")
    p.add_argument("--scope", default="all")
    p.add_argument("--max-vertices", type=int, default=12)
    p.add_argument("--spot-checks", action="store_true",
                   help="add fixed points with 13-14 vertices")
    p.add_argument("--failures-only", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sequence", parents=[common], help="tabulate counts over ranges")
    p.add_argument("--family", required=True, choices=FAMILY_CHOICES)
    p.add_argument("--m", help="N or A..B")
    p.add_argument("--n", help="N or A..B")
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("identity", parents=[common], help="check identities exactly")
    p.add_argument("--name", default="all")
    p.add_argument("--max", type=int, help="upper end of the parameter sweep")
    p.add_argument("--order", type=int, default=50, help="series order for the ODE check")
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("oeis", parents=[common], help="compare against an OEIS b-file")
    p.add_argument("id")
    p.add_argument("--cache-dir", help=f"overrides ${oeis.CACHE_ENV}")
    p.add_argument("--max-terms", type=int, default=200)
    p.set_defaults(func=cmd_oeis)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ParameterError, SizeLimitError) as exc:
        print(f"rwlabel: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OfflineError as exc:
        print(f"rwlabel: offline: {exc}", file=sys.stderr)
        return EXIT_UNAVAILABLE
    except FetchError as exc:
        print(f"rwlabel: fetch failed: {exc}", file=sys.stderr)
        return EXIT_UNAVAILABLE
    except IntegralityError as exc:
        print(f"rwlabel: integrality failure: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
