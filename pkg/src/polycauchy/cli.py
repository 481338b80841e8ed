"""Command-line front end: family tables, single polynomials, identity
verification, and the built-in selftest.

All numeric output is exact fraction text; there is no decimal rendering
anywhere.  Exit codes: 0 success, 1 verification failure, 2 usage error,
3 unwritable report path.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .algebra import Polynomial
from . import families as fam
from . import identities as idn

TABLE_FAMILIES = (
    "cauchy",
    "higher-cauchy",
    "poly-cauchy",
    "mixed",
    "stirling1",
    "stirling2",
    "bernoulli",
    "frobenius-euler",
    "narumi",
    "bernoulli2",
)

# identity selector aliases accepted on the command line
_ID_ALIASES = {
    "eq17": "SHEFFER_PAIR_EQ17",
    "sheffer-pair": "SHEFFER_PAIR_EQ17",
    "eq25": "ASSOC_EQ25",
    "assoc": "ASSOC_EQ25",
    "narumi-bernoulli": "NARUMI_BERNOULLI",
}


class UsageError(Exception):
    pass


def _parse_range(text: str) -> tuple:
    """Inclusive 'a..b' range or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ValueError
            return tuple(range(lo, hi + 1))
        return (int(text),)
    except ValueError:
        raise UsageError(f"bad range {text!r}: expected INT or INT..INT") from None


def _parse_lambdas(text: str) -> tuple:
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad lambda list {text!r}") from None


def _family_rows(family: str, n_max: int, args) -> list[list]:
    """Rows of exact values per family; scalar families give one value per
    row, polynomial families the coefficients in ascending powers, and the
    Stirling triangles their rows."""

    def need(name):
        v = getattr(args, name if name != "lam" else "lam")
        if v is None:
            raise UsageError(f"family {family!r} requires --{name}")
        return v

    rows = []
    for n in range(n_max + 1):
        if family == "cauchy":
            rows.append([fam.cauchy_number(n)])
        elif family == "higher-cauchy":
            rows.append([fam.higher_cauchy(n, need("r"))])
        elif family == "poly-cauchy":
            rows.append(list(fam.poly_cauchy(n, need("k")).coeffs) or [Fraction(0)])
        elif family == "mixed":
            rows.append(list(fam.mixed_A(n, need("r"), need("k")).coeffs) or [Fraction(0)])
        elif family == "stirling1":
            rows.append([fam.stirling1(n, m) for m in range(n + 1)])
        elif family == "stirling2":
            rows.append([fam.stirling2(n, m) for m in range(n + 1)])
        elif family == "bernoulli":
            rows.append(list(fam.bernoulli_poly(n, need("s")).coeffs) or [Fraction(0)])
        elif family == "frobenius-euler":
            lam = need("lam")
            if len(lam) != 1:
                raise UsageError("frobenius-euler takes a single --lam value")
            rows.append(
                list(fam.frobenius_euler(n, need("s"), lam[0]).coeffs) or [Fraction(0)]
            )
        elif family == "narumi":
            rows.append(list(fam.narumi(n, need("r")).coeffs) or [Fraction(0)])
        elif family == "bernoulli2":
            rows.append(list(fam.bernoulli2(n).coeffs) or [Fraction(0)])
        else:
            raise UsageError(f"unknown family {family!r}")
    return rows


def _emit_table(family: str, rows: list[list], fmt: str, params: dict, out) -> None:
    if fmt == "csv":
        width = max(len(r) for r in rows)
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n"] + [f"v{i}" for i in range(width)])
        for n, row in enumerate(rows):
            writer.writerow([n] + [str(v) for v in row] + [""] * (width - len(row)))
    elif fmt == "json":
        doc = {
            "family": family,
            "params": params,
            "rows": [
                {"n": n, "values": [str(v) for v in row]} for n, row in enumerate(rows)
            ],
        }
        json.dump(doc, out)
        out.write("\n")
    elif fmt == "latex":
        for n, row in enumerate(rows):
            cells = " & ".join([str(n)] + [str(v) for v in row])
            out.write(cells + r" \\" + "\n")
    else:
        raise UsageError(f"unknown format {fmt!r}")


def _check_trunc(needed: int, trunc: int):
    if needed > trunc:
        raise UsageError(
            f"requested degree needs truncation order >= {needed}; "
            f"rerun with --trunc {needed}"
        )


def _cmd_table(args) -> int:
    if args.family not in TABLE_FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(TABLE_FAMILIES)}")
    if args.n_max < 0:
        raise UsageError("--n-max must be >= 0")
    _check_trunc(args.n_max, args.trunc)
    rows = _family_rows(args.family, args.n_max, args)
    params = {
        name: getattr(args, name)
        for name in ("r", "k", "s")
        if getattr(args, name) is not None
    }
    if args.lam is not None:
        params["lam"] = [str(v) for v in args.lam]
    out = open(args.output, "w") if args.output else sys.stdout
    try:
        _emit_table(args.family, rows, args.format, params, out)
    finally:
        if args.output:
            out.close()
    return 0


def _cmd_poly(args) -> int:
    if args.family not in TABLE_FAMILIES:
        raise UsageError(f"unknown family {args.family!r}")
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    _check_trunc(args.n, args.trunc)
    rows = _family_rows(args.family, args.n, args)
    row = rows[args.n]
    if args.family in ("cauchy", "higher-cauchy", "stirling1", "stirling2"):
        print(" ".join(str(v) for v in row))
    else:
        print(Polynomial(row))
    return 0


def _build_grid(identity: str, args) -> idn.GridSpec:
    base = idn.default_grid(identity)
    values = {
        "n_values": tuple(range(args.n_max + 1)) if args.n_max is not None else base.n_values,
        "r_values": args.r_range or base.r_values,
        "k_values": args.k_range or base.k_values,
        "s_values": args.s_range or base.s_values,
        "m_values": args.m_range or base.m_values,
        "lambdas": args.lam or base.lambdas,
    }
    return idn.GridSpec(**values)


def _cmd_verify(args) -> int:
    selector = args.identity.lower()
    if selector == "all":
        names = [i for i in idn.IDENTITY_IDS]
    else:
        canonical = _ID_ALIASES.get(selector, selector.upper())
        if canonical not in idn.IDENTITY_IDS:
            raise UsageError(f"unknown identity {args.identity!r}")
        names = [canonical]
        if canonical in ("THM4", "THM5"):
            names.append(canonical + "_VARIANT")
    if args.n_max is not None:
        _check_trunc(args.n_max, args.trunc)
    reports = []
    failed = False
    for name in names:
        rep = idn.verify(name, _build_grid(name, args), jobs=args.jobs)
        rep.truncation = args.trunc
        reports.append(rep)
        t = rep.totals
        print(
            f"{name}: pass={t['pass']} fail={t['fail']} skipped={t['skipped']}",
            file=sys.stderr,
        )
        if t["fail"] and name not in idn.VARIANT_IDS:
            failed = True
    docs = [r.to_document() for r in reports]
    payload = docs[0] if len(docs) == 1 else docs
    text = json.dumps(payload, indent=2) + "\n"
    if args.report:
        try:
            with open(args.report, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write report {args.report!r}: {exc}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(text)
    return 1 if failed else 0


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest

    return 0 if run_selftest() else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polycauchy",
        description="Exact tables and identity verification for mixed-type "
        "Cauchy / poly-Cauchy polynomial families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--trunc", type=int, default=idn.DEFAULT_TRUNCATION,
                       help="truncation order ceiling (default 32)")

    def add_params(p):
        p.add_argument("--r", type=int, default=None, help="order r")
        p.add_argument("--k", type=int, default=None, help="polylog index k")
        p.add_argument("--s", type=int, default=None, help="order for Bernoulli / Frobenius-Euler")
        p.add_argument("--lam", type=_parse_lambdas, default=None,
                       help="lambda value(s), exact fractions, comma separated")

    p_table = sub.add_parser(
        "table",
        help="tabulate a family",
        description="Emit rows n = 0..n-max of a family. CSV columns: n, then "
        "v0..vK holding exact fraction strings (coefficients in ascending "
        "powers for polynomial families, triangle entries for Stirling "
        "families, a single value for number families); short rows are "
        "padded with empty cells.",
    )
    p_table.add_argument("--family", required=True)
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--format", choices=("csv", "json", "latex"), default="csv")
    p_table.add_argument("--output", default=None)
    add_params(p_table)
    add_common(p_table)
    p_table.set_defaults(func=_cmd_table)

    p_poly = sub.add_parser("poly", help="print one family member exactly")
    p_poly.add_argument("--family", required=True)
    p_poly.add_argument("--n", type=int, required=True)
    add_params(p_poly)
    add_common(p_poly)
    p_poly.set_defaults(func=_cmd_poly)

    p_verify = sub.add_parser(
        "verify",
        help="verify identities by exact polynomial equality",
        description="Identity ids: " + ", ".join(i.lower() for i in idn.IDENTITY_IDS)
        + ", or 'all'. Ranges are inclusive a..b (single values allowed).",
    )
    p_verify.add_argument("identity")
    p_verify.add_argument("--n-max", type=int, default=None)
    p_verify.add_argument("--r", dest="r_range", type=_parse_range, default=None)
    p_verify.add_argument("--k", dest="k_range", type=_parse_range, default=None)
    p_verify.add_argument("--s", dest="s_range", type=_parse_range, default=None)
    p_verify.add_argument("--m", dest="m_range", type=_parse_range, default=None)
    p_verify.add_argument("--lam", type=_parse_lambdas, default=None)
    p_verify.add_argument("--jobs", type=int, default=1)
    p_verify.add_argument("--report", default=None)
    add_common(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_self = sub.add_parser("selftest", help="run the built-in invariant battery")
    p_self.set_defaults(func=_cmd_selftest)

    return parser


_VALUE_FLAGS = {"--r", "--k", "--s", "--m", "--lam"}


def _normalize_argv(argv: list[str]) -> list[str]:
    """Join values like '-1..2' onto their flag so argparse does not read
    them as options."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _normalize_argv(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already uses 2 for usage errors and 0 for --help
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
