"""Command-line front end.

Subcommands: ``verify``, ``campaign``, ``dilcher-table``, ``bench-stability``.
Output is one JSON object per line (``--json``, the default) or a short
human-readable rendering (``--pretty``).

Exit status: 0 when every check passed, 1 on a verification failure,
2 on a usage or configuration error.
"""

from __future__ import annotations

import argparse
import sys

from . import identities as ident
from .campaign import CampaignConfig, cmd_campaign
from .fields import MERSENNE_61, FieldConfig
from .records import StabilityRecord, dumps, report_to_record, stability_to_record
from .stability import cmd_bench_stability

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    try:
        return (int(lo), int(hi)) if sep else (int(lo), int(lo))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def parse_float_list(text: str) -> list[float]:
    return [float(t) for t in text.split(",") if t.strip()]


def parse_nodes(text: str, fld) -> ident.NodeSet:
    """Comma-separated integers or ``p/q`` fractions, mapped into ``fld``."""
    try:
        values = [fld.parse(t) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"malformed node list {text!r}: {exc}") from None
    return ident.NodeSet(values, fld)


def field_config(args) -> FieldConfig:
    if args.field == "prime":
        return FieldConfig("prime", args.prime)
    if args.prime is not None:
        raise UsageError("--prime only applies with --field prime")
    return FieldConfig(args.field)


def cmd_verify(identity, n=None, d=None, m=None, a=None, nodes=None, field=None, k=None):
    """Run one identity check and return its :class:`IdentityReport`."""
    cfg = field if field is not None else FieldConfig()
    fld = cfg.build()

    def need(name, value):
        if value is None:
            raise UsageError(f"identity {identity!r} needs --{name}")
        return value

    if identity == "dilcher":
        if cfg.kind != "rational":
            raise UsageError("dilcher runs over the rationals only")
        return ident.dilcher_check(need("n", n), need("d", d))

    if nodes is not None:
        ns = parse_nodes(nodes, fld) if isinstance(nodes, str) else ident.NodeSet(nodes, fld)
        if n is not None and n != ns.n:
            raise UsageError(f"--n {n} disagrees with {ns.n} given nodes")
    else:
        cfg.check_nodes(need("n", n))
        ns = ident.NodeSet(range(1, n + 1), fld)

    if identity == "euler":
        return ident.verify_euler(ns, need("d", d))
    if identity == "sylvester":
        return ident.verify_sylvester(ns, need("d", d), cross_check=True)
    if identity == "newton":
        return ident.verify_newton_relation(ns, need("d", d))
    if identity == "extended_euler":
        return ident.verify_extended_euler(ns, need("d", d), need("m", m))
    if identity == "f2":
        a = need("a", a)
        return ident.verify_f2(ns, fld.parse(a) if isinstance(a, str) else a)
    if identity == "egf":
        return ident.egf_truncated_check(ns, need("k", k))
    if identity == "remainder":
        return ident.verify_remainder(ns, need("d", d))
    if identity == "extended_sylvester":
        return ident.extended_sylvester_check(ns, need("d", d))
    raise UsageError(f"unknown identity {identity!r}; see --list-identities")


def _pretty(record) -> str:
    if isinstance(record, StabilityRecord):
        record = stability_to_record(record)
    kind = record.get("record")
    if kind == "identity_report":
        params = " ".join(f"{k}={v}" for k, v in record["params"].items())
        verdict = {True: "PASS", False: "FAIL", None: "n/a"}[record["pass"]]
        line = f"{verdict} {record['identity']} [{record['field']}] {params}: lhs={record['lhs']} rhs={record['rhs']}"
        if "relative_error" in record:
            line += f" rel_error={record['relative_error']:.3e}"
        return line
    return " ".join(f"{k}={v}" for k, v in record.items() if k != "record") + f"  ({kind})"


def emit(records, pretty: bool, out=None) -> None:
    out = out or sys.stdout
    for rec in records:
        if pretty:
            print(_pretty(rec), file=out)
        else:
            if isinstance(rec, StabilityRecord):
                rec = stability_to_record(rec)
            print(dumps(rec), file=out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylvester-check",
        description="Exact verification of Sylvester's identity and related identities.",
    )
    parser.add_argument("--list-identities", action="store_true", help="list identity names and exit")

    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="pretty", action="store_false", help="line-delimited JSON (default)")
    out.add_argument("--pretty", dest="pretty", action="store_true", help="human-readable lines")
    common.set_defaults(pretty=False)

    fieldopts = argparse.ArgumentParser(add_help=False)
    fieldopts.add_argument("--field", choices=("rational", "prime", "float64"), default="rational")
    fieldopts.add_argument("--prime", type=int, default=None, help=f"modulus for --field prime (default 2^61-1 = {MERSENNE_61})")

    sub = parser.add_subparsers(dest="command")

    v = sub.add_parser("verify", parents=[common, fieldopts], help="check one identity instance")
    v.add_argument("--identity", required=True)
    v.add_argument("--n", type=int)
    v.add_argument("--d", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--a", type=str)
    v.add_argument("--k", type=int, help="truncation order for the egf identity")
    v.add_argument("--nodes", type=str, help="comma-separated integers or p/q fractions")

    c = sub.add_parser("campaign", parents=[common, fieldopts], help="randomized trials")
    c.add_argument("--identity", required=True)
    c.add_argument("--trials", type=int, default=100)
    c.add_argument("--n-range", type=parse_range, default=(2, 8))
    c.add_argument("--d-range", type=parse_range, default=(0, 40))
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--workers", type=int, default=1, help="worker threads; output does not depend on it")

    t = sub.add_parser("dilcher-table", parents=[common], help="both sides of Dilcher's identity")
    t.add_argument("--n-max", type=int, default=10)
    t.add_argument("--d-max", type=int, default=4)

    b = sub.add_parser("bench-stability", parents=[common], help="float64 accuracy of both sides")
    b.add_argument("--n-list", type=parse_int_list, default=[2, 4, 6])
    b.add_argument("--d-list", type=parse_int_list, default=[5, 20])
    b.add_argument("--spread-list", type=parse_float_list, default=[1.0, 1e-2, 1e-6])
    b.add_argument("--trials", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    return parser


def cmd_dilcher_table(n_max: int, d_max: int) -> list[dict]:
    if n_max < 1 or d_max < 1:
        raise UsageError("--n-max and --d-max must be at least 1")
    rows = []
    for n in range(1, n_max + 1):
        for d in range(1, d_max + 1):
            lhs, rhs = ident.dilcher_sides(n, d)
            fmt = ident.RATIONAL.format
            rows.append({"record": "dilcher_cell", "n": n, "d": d, "lhs": fmt(lhs), "rhs": fmt(rhs), "match": lhs == rhs})
    return rows


def _run(args) -> int:
    if args.command == "verify":
        report = cmd_verify(
            args.identity, n=args.n, d=args.d, m=args.m, a=args.a,
            nodes=args.nodes, field=field_config(args), k=args.k,
        )
        emit([report_to_record(report)], args.pretty)
        return EXIT_FAIL if report.passed is False else EXIT_OK

    if args.command == "campaign":
        cfg = CampaignConfig(
            identity=args.identity, trials=args.trials, n_range=args.n_range,
            d_range=args.d_range, field=field_config(args), seed=args.seed,
            workers=args.workers,
        )
        records = cmd_campaign(cfg)
        emit(records, args.pretty)
        return EXIT_OK if records[0]["failed"] == 0 else EXIT_FAIL

    if args.command == "dilcher-table":
        rows = cmd_dilcher_table(args.n_max, args.d_max)
        emit(rows, args.pretty)
        return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL

    records = cmd_bench_stability(args.n_list, args.d_list, args.spread_list, args.trials, args.seed)
    emit(records, args.pretty)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.list_identities:
        for name, summary in ident.IDENTITIES.items():
            print(f"{name}\t{summary}")
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        return _run(args)
    except (UsageError, ValueError, ZeroDivisionError) as exc:
        print(f"sylvester-check: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
