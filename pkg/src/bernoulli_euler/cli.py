"""Command-line front end: number tables, certified evaluation, verification
sweeps and the two quadrature checks.

Exit status: 0 success, 1 verification failure, 2 usage error, 3 numerical
or precision error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import exact_core as ec
from . import expansions as ex
from . import gamma_bounds as gb
from ._mp import DEFAULT_PRECISION, MAX_PRECISION, MIN_PRECISION, context, format_real, to_real
from .errors import DomainError
from .grids import parse_grid
from .verify import SUITES, Config, run_suite

SCHEMA = "v1"
N_MAX_CAP = 2000

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _precision(text: str) -> int:
    try:
        bits = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"precision must be an integer, got {text!r}") from None
    if not MIN_PRECISION <= bits <= MAX_PRECISION:
        raise argparse.ArgumentTypeError(f"precision must be in [{MIN_PRECISION}, {MAX_PRECISION}], got {bits}")
    return bits


def _tolerance(text: str) -> float:
    try:
        tol = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"tolerance must be a number, got {text!r}") from None
    if not tol > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be > 0, got {text}")
    return tol


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION, help="working precision in bits")
    common.add_argument("--tol", type=_tolerance, default=1e-12, help="absolute tolerance")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")

    parser = argparse.ArgumentParser(
        prog="bernoulli-euler",
        description="Bernoulli/Euler numbers, expansion remainders and gamma-function bounds.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("numbers", parents=[common], help="tabulate exact Bernoulli or Euler numbers")
    p.add_argument("kind", choices=("bernoulli", "euler"))
    p.add_argument("n_max", type=int)
    p.add_argument("--cross-check", action="store_true", help="re-derive every value by the independent routes")

    p = sub.add_parser("eval", parents=[common], help="partial sum, remainder and bounds at one point")
    p.add_argument("fn", choices=ex.FUNCTIONS)
    p.add_argument("t")
    p.add_argument("--order", type=int, default=1, help="m for eta, N for sech/coth, n for binet")

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--grid", default=None, help="preset (small, standard, dense, theta), a:b:step or a comma list")

    p = sub.add_parser("quad", parents=[common], help="integral representations of ln(4/pi) and ln(pi/3)")
    p.add_argument("which", choices=("ln4pi", "lnpi3"))
    return parser


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def render(record: dict, fmt: str, table: list | None = None, columns: list | None = None) -> str:
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, **record}, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if table is not None:
            w.writerow(columns)
            for row in table:
                w.writerow([row[c] for c in columns])
        else:
            w.writerow(["field", "value"])
            for k, v in record.items():
                w.writerow([k, v if not isinstance(v, (dict, list)) else json.dumps(v, sort_keys=True)])
        return buf.getvalue()
    lines = []
    for k, v in record.items():
        if k == "rows" or isinstance(v, list):
            continue
        if isinstance(v, dict):
            lines.append(f"{k}:")
            lines.extend(f"  {kk}: {vv}" for kk, vv in v.items())
        else:
            lines.append(f"{k}: {v}")
    if table is not None:
        width = max((len(str(r[columns[0]])) for r in table), default=1)
        lines.extend(f"{str(r[columns[0]]).rjust(width)}  " + "  ".join(str(r[c]) for c in columns[1:]) for r in table)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_numbers(args) -> tuple[int, str]:
    if not 0 <= args.n_max <= N_MAX_CAP:
        raise UsageError(f"n_max must be in [0, {N_MAX_CAP}], got {args.n_max}")
    values = [ec.bernoulli(n) if args.kind == "bernoulli" else ec.euler_number(n) for n in range(args.n_max + 1)]
    rows = [{"n": n, "value": str(v)} for n, v in enumerate(values)]
    record = {"command": "numbers", "kind": args.kind, "n_max": args.n_max, "precision_bits": "exact", "tolerance": 0}
    status = EXIT_OK
    if args.cross_check:
        mismatches, compared = [], 0
        if args.kind == "bernoulli":
            routes = list(ec.SCHEMES)
            for scheme in routes:
                for n in range(args.n_max + 1):
                    if ec.scheme_domain(scheme, n):
                        compared += 1
                        got = ec.quad_recurrence(n, scheme)
                        if got != values[n]:
                            mismatches.append({"n": n, "route": scheme, "got": str(got), "want": str(values[n])})
        else:
            routes = ["euler_poly at 1/2"]
            for n in range(args.n_max + 1):
                compared += 1
                got = ec.euler_number_from_poly(n)
                if got != values[n]:
                    mismatches.append({"n": n, "route": routes[0], "got": str(got), "want": str(values[n])})
        record["cross_check"] = {"routes": ", ".join(routes), "comparisons": compared, "mismatches": len(mismatches)}
        record["mismatches"] = mismatches
        if mismatches:
            status = EXIT_FAIL
    record["rows"] = rows
    return status, render(record, args.format, rows, ["n", "value"])


def _fmt(x, bits):
    return format_real(x, bits) if x is not None else None


def cmd_eval(args) -> tuple[int, str]:
    bits, tol, fn, k = args.precision, args.tol, args.fn, args.order
    ctx = context(bits)
    to_real(ctx, args.t)  # reject malformed input early
    t = args.t
    if fn == "eta":
        partial, res = ex.eta_partial(t, k, bits), ex.eta_remainder(t, k, tol, bits)
        theta, enc = None, ex.enclosure(fn, t, k, bits)
    elif fn == "sech":
        partial, res = ex.sech_partial(t, k, bits), ex.sech_remainder(t, k, tol, bits)
        theta, enc = ("Theta", ex.theta_cap(t, k, bits)), ex.enclosure(fn, t, k - 1, bits)
    elif fn == "coth":
        partial, res = ex.coth_partial(t, k, bits), ex.sigma_series(t, k, tol, bits)
        theta, enc = ("theta", ex.theta_low(t, k, bits)), ex.enclosure(fn, t, k, bits)
    else:
        partial, res = ex.binet_partial(t, k, bits), ex.binet_remainder(t, k, tol, bits)
        theta, enc = None, ex.enclosure(fn, t, k, bits)
    direct = ex.direct_eval(fn, t, bits)
    wide = context(2 * bits)
    residual = wide.mpf(partial) + wide.mpf(res.value) - wide.mpf(direct)
    record = {
        "command": "eval",
        "function": fn,
        "t": args.t,
        "order": k,
        "precision_bits": bits,
        "tolerance": tol,
        "direct": _fmt(direct, bits),
        "partial_sum": _fmt(partial, bits),
        "remainder": _fmt(res.value, bits),
        "tail_bound": _fmt(res.tail_bound, bits),
        "terms_used": res.terms_used,
        "residual": _fmt(residual, bits),
        "enclosure_lo": _fmt(enc.lo, bits),
        "enclosure_hi": _fmt(enc.hi, bits),
    }
    if theta is not None:
        record[theta[0]] = _fmt(theta[1], bits)
    return EXIT_OK, render(record, args.format)


def cmd_verify(args) -> tuple[int, str]:
    grid = parse_grid(args.grid) if args.grid else None
    cfg = Config(precision_bits=args.precision, tol=args.tol, grid=grid)
    summary = run_suite(args.suite, cfg)
    record = {
        "command": "verify",
        "precision_bits": args.precision,
        "tolerance": args.tol,
        "grid": args.grid or "default",
        "status": "pass" if summary.ok else "fail",
        **summary.to_dict(),
    }
    rows = [
        {"check": name, "total": n, "failed": sum(1 for f in summary.failures if f["check"] == name)}
        for name, n in sorted(summary.counts.items())
    ]
    text = render(record, args.format, rows if args.format == "csv" else None, ["check", "total", "failed"])
    if args.format == "text":
        extra = [f"FAIL {f['check']} {f['inputs']}: {f['lhs']} {f['relation']} {f['rhs']}" for f in summary.failures]
        extra += [f"note: {n}" for n in summary.notes]
        text += "\n".join(extra) + "\n"
    return (EXIT_OK if summary.ok else EXIT_FAIL), text


def cmd_quad(args) -> tuple[int, str]:
    bits = args.precision
    value = gb.quad_log_const(args.which, args.tol, bits)
    oracle = gb.quad_oracle(args.which, bits)
    wide = context(bits)
    record = {
        "command": "quad",
        "which": gb.QUAD_ALIASES[args.which],
        "precision_bits": bits,
        "tolerance": args.tol,
        "value": _fmt(value, bits),
        "oracle": _fmt(oracle, bits),
        "abs_error": _fmt(abs(wide.mpf(value) - wide.mpf(oracle)), bits),
    }
    return EXIT_OK, render(record, args.format)


COMMANDS = {"numbers": cmd_numbers, "eval": cmd_eval, "verify": cmd_verify, "quad": cmd_quad}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        status, out = COMMANDS[args.command](args)
    except (UsageError, DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ArithmeticError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        print("hint: raise --precision or loosen --tol", file=sys.stderr)
        return EXIT_NUMERIC
    sys.stdout.write(out)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
