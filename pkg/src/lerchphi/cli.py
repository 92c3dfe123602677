"""Command-line front end: ``lerchphi {eval,table,sweep,rule,oracle}``.

Exit codes: 0 success, 1 oracle disagreement, 2 domain error,
3 sizing overflow, 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import oracle
from .error_model import LerchParams
from .errors import DomainError, InvalidParameterError, SizingOverflowError
from .experiments import error_sweep
from .lerch import evaluate
from .quadrature import gauss_laguerre, gauss_laguerre_truncated
from .tables import TABLES, compute_table, polar

EXIT_OK, EXIT_DISAGREE, EXIT_DOMAIN, EXIT_OVERFLOW, EXIT_USAGE = 0, 1, 2, 3, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def fmt(x) -> str:
    """Shortest round-trip repr of a float (17 significant digits at most), '1' not '1.0'."""
    if isinstance(x, (int,)) and not isinstance(x, bool):
        return str(x)
    x = float(x)
    if math.isnan(x):
        return "nan"
    r = repr(x)
    return r[:-2] if r.endswith(".0") else r


def _add_z(p):
    p.add_argument("--z-re", type=float, default=None)
    p.add_argument("--z-im", type=float, default=0.0)
    p.add_argument("--z-polar", type=float, nargs=2, metavar=("R", "TAU"), help="z = R exp(i TAU pi)")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--a", type=float, default=1.0)


def _z_from(args, parser) -> complex:
    if args.z_polar is not None:
        if args.z_re is not None:
            parser.error("give either --z-re/--z-im or --z-polar, not both")
        return polar(*args.z_polar)
    if args.z_re is None:
        parser.error("one of --z-re or --z-polar is required")
    return complex(args.z_re, args.z_im)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lerchphi", description="Lerch transcendent by truncated Gauss-Laguerre quadrature")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate Phi(z, s, a)")
    _add_z(p)
    p.add_argument("--tol", type=float, default=1e-14)
    p.add_argument("--json", action="store_true")
    p.add_argument("--check", action="store_true", help="compare with an oracle value")

    p = sub.add_parser("table", help="recompute one of the published result tables as CSV")
    p.add_argument("name", choices=sorted(TABLES))
    p.add_argument("tol", type=float, nargs="?", default=1e-10)

    p = sub.add_parser("sweep", help="error of the full/truncated rule for n = 1..N as CSV")
    _add_z(p)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    p.add_argument("--truncated", action="store_true")

    p = sub.add_parser("rule", help="dump Gauss-Laguerre nodes and weights as CSV")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)

    p = sub.add_parser("oracle", help="cross-validate the reference methods")
    _add_z(p)
    p.add_argument("--tol", type=float, default=1e-14)
    return parser


def _record(z, s, a, tol, ev, ref=None) -> dict:
    rec = {
        "z_re": z.real, "z_im": z.imag, "s": s, "a": a, "tol": tol,
        "value_re": ev.value.real, "value_im": ev.value.imag,
        "n": ev.n, "kn": ev.kn, "est_error": ev.est_error,
        "oracle_re": None, "oracle_im": None, "deviation": None,
    }
    if ref is not None:
        rec.update(oracle_re=ref.real, oracle_im=ref.imag, deviation=abs(ev.value - ref))
    return rec


def cmd_eval(args, parser, out) -> int:
    z = _z_from(args, parser)
    params = LerchParams(z, args.s, args.a)
    ev = evaluate(params, args.tol)
    ref = oracle.reference(z, args.s, args.a, tol=min(args.tol, 1e-14) / 10).value if args.check else None
    rec = _record(z, args.s, args.a, args.tol, ev, ref)
    if args.json:
        out.write(json.dumps(rec) + "\n")
        return EXIT_OK
    out.write(f"value      {fmt(ev.value.real)} {'+' if ev.value.imag >= 0 else '-'} {fmt(abs(ev.value.imag))}i\n")
    out.write(f"n          {ev.n}\nkn         {ev.kn}\nest_error  {fmt(ev.est_error)}\n")
    if ref is not None:
        out.write(f"oracle     {fmt(ref.real)} {'+' if ref.imag >= 0 else '-'} {fmt(abs(ref.imag))}i\n")
        out.write(f"deviation  {fmt(rec['deviation'])}\n")
    return EXIT_OK


TABLE_COLUMNS = ["table", "r", "tau", "s", "a", "tol", "n", "kn", "value_re", "value_im",
                 "reference_re", "reference_im", "error", "est_error", "published_n", "published_kn", "published_error"]


def cmd_table(args, parser, out) -> int:
    w = csv.writer(out, lineterminator="\n")
    w.writerow(TABLE_COLUMNS)
    for res in compute_table(args.name, args.tol):
        row = res.row
        published = row.published_for(args.tol) or ("", "", "")
        w.writerow([row.table, fmt(row.r), fmt(row.tau), fmt(row.s), fmt(row.a), fmt(args.tol), res.n, res.kn,
                    fmt(res.value.real), fmt(res.value.imag), fmt(res.reference.real), fmt(res.reference.imag),
                    fmt(res.error), fmt(res.est_error), *[fmt(p) if p != "" else "" for p in published]])
    return EXIT_OK


def cmd_sweep(args, parser, out) -> int:
    z = _z_from(args, parser)
    if args.n_max < args.n_min or args.n_min < 1:
        parser.error("need 1 <= --n-min <= --n-max")
    params = LerchParams(z, args.s, args.a)
    rows = error_sweep(params, range(args.n_min, args.n_max + 1), truncated=args.truncated)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["n", "k_n", "err_full", "err_trunc", "estimate"])
    for r in rows:
        w.writerow([r.n, r.kn, fmt(r.err_full), fmt(r.err_trunc) if args.truncated else "", fmt(r.estimate)])
    return EXIT_OK


def cmd_rule(args, parser, out) -> int:
    rule = gauss_laguerre(args.alpha, args.n) if args.k is None else gauss_laguerre_truncated(args.alpha, args.n, args.k)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["node", "weight"])
    for x, wt in zip(rule.nodes, rule.weights):
        w.writerow([fmt(x), fmt(wt)])
    return EXIT_OK


def cmd_oracle(args, parser, out) -> int:
    z = _z_from(args, parser)
    rep = oracle.cross_validate(z, args.s, args.a, args.tol)
    out.write(f"z = {fmt(z.real)} {'+' if z.imag >= 0 else '-'} {fmt(abs(z.imag))}i, s = {fmt(args.s)}, a = {fmt(args.a)}\n")
    for method, res in rep.results.items():
        out.write(f"{method.value:20s} {fmt(res.value.real)} {fmt(res.value.imag)}  est_accuracy {fmt(res.est_accuracy)}\n")
    for method, msg in rep.failures.items():
        out.write(f"{method.value:20s} STALLED: {msg}\n")
    for (m1, m2), dev in rep.deviations.items():
        out.write(f"|{m1.value} - {m2.value}| = {fmt(dev)}\n")
    out.write(("agreement within " if rep.ok else "DISAGREEMENT beyond ") + fmt(oracle.AGREEMENT_TOL) + "\n")
    return EXIT_OK if rep.ok else EXIT_DISAGREE


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "sweep": cmd_sweep, "rule": cmd_rule, "oracle": cmd_oracle}


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        return COMMANDS[args.command](args, parser, out)
    except SystemExit as exc:
        return int(exc.code)
    except SizingOverflowError as exc:
        print(f"lerchphi: sizing overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except DomainError as exc:
        print(f"lerchphi: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InvalidParameterError as exc:
        print(f"lerchphi: invalid parameter: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
