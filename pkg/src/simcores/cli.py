"""Command-line surface: enumerate cores, export posets, run verifications.

Exit codes: 0 when every reported check passes, 1 when a verification
failed (reports are still emitted), 2 for usage or guard errors.
"""

import argparse
import csv
import json
import sys

from .betaset import ideal_to_partition
from .posets import (FamilyId, InvalidFamilyError, NonCoprimeError,
                     family_poset, gap_poset, order_ideals, to_dot)
from .series import check_identities, cross_check
from .stats import (DEFAULT_MAX_POSET_SIZE, EnumerationTooLargeError,
                    average_size_check, compute_stats, is_slope_pair,
                    verify_stat_recursions)

MAX_ORDER = 24


def _poset_limit(args):
    return None if args.unsafe_limits else DEFAULT_MAX_POSET_SIZE


def _check_order(args):
    if args.order > MAX_ORDER and not args.unsafe_limits:
        raise EnumerationTooLargeError(
            f"order {args.order} is above the guard of {MAX_ORDER}; "
            "pass --unsafe-limits to override")
    if args.order < 3:
        raise ValueError("order must be >= 3")


def _write_csv(header, rows):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _cmd_cores(args):
    check = average_size_check(args.a, args.b, max_poset_size=_poset_limit(args))
    poset = gap_poset(args.a, args.b)
    cores = sorted((ideal_to_partition(members) for members in order_ideals(poset)),
                   key=lambda p: (sum(p), tuple(-q for q in p)))
    if args.format == "json":
        payload = {
            "a": args.a,
            "b": args.b,
            "count": check.count,
            "total_size": check.total,
            "average": str(check.average),
            "matches": check.matches,
            "cores": [list(p) for p in cores],
        }
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        _write_csv(["parts", "size"],
                   [[" ".join(map(str, p)), sum(p)] for p in cores])
    else:
        print(f"({args.a}, {args.b})-cores: {check.count}")
        print(f"total size: {check.total}")
        print(f"average size: {check.average}")
        print(f"matches closed form: {'yes' if check.matches else 'no'}")
        for p in cores:
            print(f"  {list(p)}")
    if check.matches:
        return 0
    return 1 if is_slope_pair(args.a, args.b) or args.assert_general else 0


def _cmd_poset(args):
    poset = gap_poset(args.a, args.b)
    if len(poset) > DEFAULT_MAX_POSET_SIZE and not args.unsafe_limits:
        raise EnumerationTooLargeError(
            f"gap poset of ({args.a}, {args.b}) has {len(poset)} elements, "
            f"above the guard of {DEFAULT_MAX_POSET_SIZE}")
    if args.format == "dot":
        print(to_dot(poset))
    elif args.format == "json":
        print(json.dumps({"a": poset.a, "b": poset.b,
                          "elements": list(poset.elements),
                          "covers": [list(c) for c in poset.covers]}, indent=2))
    else:
        print(f"elements: {list(poset.elements)}")
        for hi, lo in poset.covers:
            print(f"  {hi} covers {lo}")
    return 0


def _cmd_stats(args):
    limit = _poset_limit(args)
    rows = []
    for j in range(args.m):
        for n in range(args.max_n + 1):
            fid = FamilyId(args.m, j, n)
            if limit is not None and len(family_poset(fid)) > limit:
                raise EnumerationTooLargeError(
                    f"poset {fid} has {len(family_poset(fid))} elements, "
                    f"above the guard of {limit}")
            rec = compute_stats(fid, limit)
            rows.append({"m": args.m, "j": j, "n": n,
                         "ideal_count": rec.ideal_count,
                         "member_sum": rec.member_sum,
                         "layer_sum": rec.layer_sum,
                         "core_size_sum": rec.core_size_sum})
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        _write_csv(["m", "j", "n", "ideal_count", "member_sum",
                    "layer_sum", "core_size_sum"],
                   [[r[k] for k in ("m", "j", "n", "ideal_count", "member_sum",
                                    "layer_sum", "core_size_sum")] for r in rows])
    else:
        for r in rows:
            print("m={m} j={j} n={n}: ideals={ideal_count} members={member_sum} "
                  "layers={layer_sum} sizes={core_size_sum}".format(**r))
    return 0


def _report(rows, args, plain):
    if args.format == "json":
        print(json.dumps(rows, indent=2))
    elif args.format == "csv":
        header = list(rows[0]) if rows else []
        _write_csv(header, [[r[k] for k in header] for r in rows])
    else:
        for r in rows:
            print(plain(r))
    return 0 if all(r["pass"] for r in rows) else 1


def _cmd_recursions(args):
    checks = verify_stat_recursions(args.m, args.max_n,
                                    max_poset_size=_poset_limit(args))
    rows = [{"name": c.name, "m": c.m, "n": c.n, "lhs": c.lhs, "rhs": c.rhs,
             "pass": c.passed} for c in checks]
    return _report(rows, args,
                   lambda r: "{} {} n={}: {} == {}".format(
                       "ok  " if r["pass"] else "FAIL", r["name"], r["n"],
                       r["lhs"], r["rhs"]))


def _cmd_series_verify(args):
    _check_order(args)
    checks = check_identities(args.m, args.order)
    rows = [{"identity_name": c.identity, "m": c.m,
             "effective_order": c.effective_order,
             "residual_max_abs": str(c.residual_max_abs),
             "pass": c.passed} for c in checks]
    return _report(rows, args,
                   lambda r: "{} {} (order {}): residual {}".format(
                       "ok  " if r["pass"] else "FAIL", r["identity_name"],
                       r["effective_order"], r["residual_max_abs"]))


def _cmd_cross_check(args):
    checks = cross_check(args.m, args.max_n)
    rows = [{"m": c.m, "j": c.j, "n": c.n, "statistic": c.statistic,
             "series_value": c.series_value,
             "enumerated_value": c.enumerated_value,
             "pass": c.passed} for c in checks]
    return _report(rows, args,
                   lambda r: "{} j={} n={} {}: {} == {}".format(
                       "ok  " if r["pass"] else "FAIL", r["j"], r["n"],
                       r["statistic"], r["series_value"], r["enumerated_value"]))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="simcores",
        description="Exact enumeration and verification for simultaneous "
                    "core partitions.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, formats=("plain", "json", "csv")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--unsafe-limits", action="store_true",
                       help="lift the enumeration and order guards")

    p = sub.add_parser("cores", help="enumerate all cores of a coprime pair "
                                     "and check the average-size formula")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--assert-general", action="store_true",
                   help="exit 1 on a mismatch even for pairs outside the "
                        "slope family")
    common(p)
    p.set_defaults(func=_cmd_cores)

    p = sub.add_parser("poset", help="print the gap poset of a coprime pair")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    common(p, formats=("dot", "json", "plain"))
    p.set_defaults(func=_cmd_poset)

    p = sub.add_parser("stats", help="statistic totals on the (m, j, n) grid")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("recursions", help="verify the convolution recursions "
                                          "against enumeration")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_recursions)

    p = sub.add_parser("series-verify", help="verify the power-series "
                                             "identity ledger")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--order", type=int, default=12)
    common(p)
    p.set_defaults(func=_cmd_series_verify)

    p = sub.add_parser("cross-check", help="series coefficients against "
                                           "brute-force enumeration")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    common(p)
    p.set_defaults(func=_cmd_cross_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NonCoprimeError, InvalidFamilyError, EnumerationTooLargeError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
