"""Command-line interface.

Subcommands: sum, check-pair, classes, family (theorem1, corollary1,
corollary2, quad), table1, verify-paper. Every rational is printed as an
exact p/q string plus a fixed-point decimal (--digits places, default 10).
Output formats: text (default), json (one object per invocation, rationals
as {"num", "den", "decimal"} with string num/den), csv (one row per
member, class, row or check).

Exit codes: 0 success, 1 verification mismatch, 2 invalid input or
violated hypothesis.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys

from .arith import Rational, is_square_free, mod_inverse
from .core import dedekind_fast, dedekind_oracle
from .equality import (
    bounds_report,
    classes_from_values,
    classify_pair,
    integer_difference,
    necessary_condition,
    non_obvious_pairs,
    partner_stats,
    value_map,
)
from .families import (
    TABLE1_TS,
    corollary1_family,
    corollary2_classify,
    corollary4_family,
    decompose,
    shift_t,
    table1_sieve,
    theorem1_family,
)
from .golden import list_items, run_items
from .render import format_decimal, format_exact

# Below this many residues a parallel sweep costs more than it saves.
_PARALLEL_MIN = 50_000


def _show(v: Rational, digits: int) -> str:
    return f"{format_exact(v)} ({format_decimal(v, digits)})"


def _rat(v: Rational, digits: int) -> dict:
    return {
        "num": str(v.numerator),
        "den": str(v.denominator),
        "decimal": format_decimal(v, digits),
    }


def render_json(payload: dict) -> str:
    return json.dumps(payload, indent=2)


def _emit_csv(header: list[str], rows: list[list]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)


def _parse_filter(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d+)mod(\d+)", text)
    if not match:
        raise argparse.ArgumentTypeError(
            f"filter must look like 1mod9, got {text!r}"
        )
    residue, modulus = int(match.group(1)), int(match.group(2))
    if modulus < 1:
        raise argparse.ArgumentTypeError("filter modulus must be positive")
    return residue % modulus, modulus


def _parse_range(text: str) -> tuple[int, int]:
    match = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not match:
        raise argparse.ArgumentTypeError(
            f"range must look like 2..6, got {text!r}"
        )
    lo, hi = int(match.group(1)), int(match.group(2))
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _parse_primes(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"primes must be a comma-separated list, got {text!r}"
        )


def _cmd_sum(args) -> int:
    method = "oracle" if args.oracle else "fast"
    value = (dedekind_oracle if args.oracle else dedekind_fast)(args.m, args.n)
    payload = {
        "command": "sum",
        "m": args.m,
        "n": args.n,
        "method": method,
        "S": _rat(value, args.digits),
    }
    if args.little:
        payload["s"] = _rat(value / 12, args.digits)
    if args.format == "json":
        print(render_json(payload))
    elif args.format == "csv":
        rows = [["S", args.m, args.n, format_exact(value), format_decimal(value, args.digits)]]
        if args.little:
            rows.append(
                ["s", args.m, args.n, format_exact(value / 12), format_decimal(value / 12, args.digits)]
            )
        _emit_csv(["quantity", "m", "n", "exact", "decimal"], rows)
    else:
        print(f"S({args.m},{args.n}) = {_show(value, args.digits)}")
        if args.little:
            print(f"s({args.m},{args.n}) = {_show(value / 12, args.digits)}")
    return 0


def _cmd_check_pair(args) -> int:
    verdict = classify_pair(args.m1, args.m2, args.n)
    s1 = dedekind_fast(args.m1, args.n)
    s2 = dedekind_fast(args.m2, args.n)
    condition = necessary_condition(args.m1, args.m2, args.n)
    integral = integer_difference(args.m1, args.m2, args.n)
    payload = {
        "command": "check-pair",
        "m1": verdict.m1,
        "m2": verdict.m2,
        "n": args.n,
        "relation": verdict.relation,
        "S1": _rat(s1, args.digits),
        "S2": _rat(s2, args.digits),
        "necessary_condition": condition,
        "integer_difference": integral,
    }
    if args.format == "json":
        print(render_json(payload))
    elif args.format == "csv":
        _emit_csv(
            ["m1", "m2", "n", "relation", "S1", "S2", "necessary_condition", "integer_difference"],
            [[verdict.m1, verdict.m2, args.n, verdict.relation,
              format_exact(s1), format_exact(s2), condition, integral]],
        )
    else:
        print(f"S({verdict.m1},{args.n}) = {_show(s1, args.digits)}")
        print(f"S({verdict.m2},{args.n}) = {_show(s2, args.digits)}")
        print(f"relation: {verdict.relation}")
        print(f"necessary condition (n | (m1-m2)(m1*m2-1)): {'yes' if condition else 'no'}")
        print(f"difference is an integer: {'yes' if integral else 'no'}")
    return 0


def _cmd_classes(args) -> int:
    n = args.n
    if n > args.limit:
        print(
            f"error: n = {n} exceeds the scale limit {args.limit}; "
            "raise it with --limit",
            file=sys.stderr,
        )
        return 2
    workers = args.threads if n >= _PARALLEL_MIN else 1
    values = value_map(n, workers)
    classes = classes_from_values(n, values)
    if args.filter:
        residue, modulus = args.filter
        filtered = []
        for cls in classes:
            members = tuple(m for m in cls.members if m % modulus == residue)
            if members:
                filtered.append(type(cls)(cls.modulus, cls.value, members))
        classes = filtered
    if args.non_singleton:
        classes = [c for c in classes if len(c.members) > 1]
    pairs = {c.members: non_obvious_pairs(c) for c in classes}
    if args.non_obvious:
        classes = [c for c in classes if pairs[c.members]]
    all_pairs = [p for c in classes for p in pairs[c.members]]

    payload = {
        "command": "classes",
        "n": n,
        "unit_count": len(values),
        "class_count": len(classes),
        "classes": [
            {"value": _rat(c.value, args.digits), "members": list(c.members)}
            for c in classes
        ],
        "non_obvious_pairs": [list(p) for p in all_pairs],
    }
    report = None
    if args.bounds:
        report = bounds_report(n, values=values)
        payload["bounds"] = {
            "max_class_size": report.max_class_size,
            "distinct_values": report.distinct_values,
            "bound_2r": report.bound_2r,
            "lower_bound": _rat(report.lower_bound, args.digits),
        }
    pivots = []
    if args.pivot:
        lo, hi = args.pivot
        for m1 in range(lo, hi + 1):
            stats = partner_stats(m1, n, values)
            pivots.append(stats)
        payload["pivots"] = [
            {"m1": s.m1, "partner_count": s.partner_count, "equal_cluster": s.equal_cluster}
            for s in pivots
        ]

    if args.format == "json":
        print(render_json(payload))
    elif args.format == "csv":
        rows = [
            [i + 1, format_exact(c.value), format_decimal(c.value, args.digits),
             len(c.members), " ".join(map(str, c.members))]
            for i, c in enumerate(classes)
        ]
        _emit_csv(["class", "exact", "decimal", "size", "members"], rows)
    else:
        print(f"modulus {n}: {len(values)} units, {len(classes)} classes shown")
        for i, cls in enumerate(classes, 1):
            members = " ".join(map(str, cls.members))
            print(f"[{i}] value {_show(cls.value, args.digits)}: members {members}")
        if all_pairs:
            shown = " ".join(f"({a},{b})" for a, b in all_pairs)
            print(f"non-obvious pairs (one per inverse orbit): {shown}")
        else:
            print("non-obvious pairs (one per inverse orbit): none")
        if report is not None:
            print(
                f"bounds: max integer-difference partners {report.max_class_size} "
                f"<= 2^r = {report.bound_2r}; distinct values {report.distinct_values} "
                f">= phi(n)/2^r = {_show(report.lower_bound, args.digits)}"
            )
        for stats in pivots:
            print(
                f"pivot m1={stats.m1}: partners={stats.partner_count} "
                f"largest-equal-cluster={stats.equal_cluster}"
            )
    return 0


def _family_payload(args, kind: str, parameters: dict, modulus: int,
                    value: Rational, members: tuple[int, ...]) -> tuple[dict, bool]:
    verified = all(dedekind_fast(m, modulus) == value for m in members)
    payload = {
        "command": "family",
        "kind": kind,
        "parameters": parameters,
        "modulus": modulus,
        "value": _rat(value, args.digits),
        "members": list(members),
        "verified": verified,
    }
    return payload, verified


def _print_family_text(args, payload: dict, extra: list[str] | None = None) -> None:
    params = ", ".join(f"{k}={v}" for k, v in payload["parameters"].items())
    print(f"kind: {payload['kind']} ({params})")
    print(f"modulus: {payload['modulus']}")
    value = payload["value"]
    print(f"value: {value['num']}/{value['den']} ({value['decimal']})")
    for line in extra or []:
        print(line)
    members = payload["members"]
    print(f"members ({len(members)}): {' '.join(map(str, members))}")
    count = len(members)
    if payload["verified"]:
        print(f"verification: ok ({count}/{count} members match)")
    else:
        print("verification: MISMATCH")


def _finish_family(args, payload: dict, verified: bool,
                   extra: list[str] | None = None) -> int:
    if args.format == "json":
        print(render_json(payload))
    elif args.format == "csv":
        value = payload["value"]
        rows = [
            [m, f"{value['num']}/{value['den']}", value["decimal"], payload["verified"]]
            for m in payload["members"]
        ]
        _emit_csv(["member", "exact", "decimal", "verified"], rows)
    else:
        _print_family_text(args, payload, extra)
    return 0 if verified else 1


def _cmd_family_theorem1(args) -> int:
    fam = theorem1_family(args.d, args.n, args.eps)
    payload, verified = _family_payload(
        args, fam.kind, fam.parameters, fam.modulus, fam.predicted_value, fam.members
    )
    return _finish_family(args, payload, verified)


def _cmd_family_corollary1(args) -> int:
    fam = corollary1_family(args.l, args.k, args.r, args.q, args.eps)
    payload, verified = _family_payload(
        args, fam.kind, fam.parameters, fam.modulus, fam.predicted_value, fam.members
    )
    return _finish_family(args, payload, verified)


def _cmd_family_corollary2(args) -> int:
    cls = corollary2_classify(args.p, args.k, args.r, args.eps)
    parameters = {"p": args.p, "k": args.k, "r": args.r, "eps": args.eps}
    payload, verified = _family_payload(
        args, "corollary2", parameters, cls.modulus, cls.value, cls.members
    )
    return _finish_family(args, payload, verified)


def _cmd_family_quad(args) -> int:
    fam = corollary4_family(args.t, args.primes)
    if args.shift:
        fam = shift_t(fam, args.shift)
    parameters = {"t": fam.t, "q": fam.q, "k": fam.k}
    payload, verified = _family_payload(
        args, "quad", parameters, fam.nt, fam.predicted_value, fam.arguments
    )
    inverses = [mod_inverse(a, fam.nt) for a in fam.arguments]
    payload.update(
        {
            "primes": list(fam.primes),
            "n": fam.n,
            "nt": fam.nt,
            "solutions": list(fam.solutions),
            "inverses": inverses,
            "nt_square_free": fam.nt_square_free,
        }
    )
    extra = [
        f"primes: {' '.join(map(str, fam.primes))}",
        f"n: {fam.n}   n*t: {fam.nt}",
        f"solutions ({len(fam.solutions)}): {' '.join(map(str, fam.solutions))}",
        f"inverses: {' '.join(map(str, inverses))}",
    ]
    if not fam.nt_square_free:
        extra.append("note: n*t is not square-free")
    return _finish_family(args, payload, verified, extra)


def _cmd_table1(args) -> int:
    ts = [args.t] if args.t is not None else list(TABLE1_TS)
    for t in ts:
        if t < 1 or not is_square_free(t):
            print(f"error: t = {t} must be a square-free positive integer",
                  file=sys.stderr)
            return 2
    rows = []
    for t in ts:
        q, k = decompose(t)
        rows.append({"t": t, "q": q, "k": k, "primes": table1_sieve(t, args.count)})
    if args.format == "json":
        print(render_json({"command": "table1", "rows": rows}))
    elif args.format == "csv":
        _emit_csv(
            ["t", "q", "k", "primes"],
            [[row["t"], row["q"], row["k"], " ".join(map(str, row["primes"]))]
             for row in rows],
        )
    else:
        print(f"{'t':>4} {'q':>4} {'k':>3}  primes")
        for row in rows:
            primes = ",".join(map(str, row["primes"]))
            print(f"{row['t']:>4} {row['q']:>4} {row['k']:>3}  {primes}")
    return 0


def _cmd_verify_paper(args) -> int:
    if args.list:
        for item in list_items(args.only):
            print(item)
        return 0
    results = run_items(args.only)
    failed = [r for r in results if not r.ok]
    if args.format == "json":
        payload = {
            "command": "verify-paper",
            "results": [
                {"item": r.item, "ok": r.ok, "detail": r.detail} for r in results
            ],
            "passed": len(results) - len(failed),
            "failed": len(failed),
        }
        print(render_json(payload))
    elif args.format == "csv":
        _emit_csv(
            ["item", "status", "detail"],
            [[r.item, "PASS" if r.ok else "FAIL", r.detail] for r in results],
        )
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'}  {r.item}  {r.detail}")
        print(f"{len(results) - len(failed)} passed, {len(failed)} failed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dedekind",
        description="Exact Dedekind sums: evaluation, equality classes, "
        "and families of equal sums.",
    )
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    parser.add_argument("--digits", type=int, default=10,
                        help="decimal places for approximations (default 10)")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="worker processes for large sweeps")
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("sum", help="evaluate S(m,n) = 12*s(m,n)")
    p_sum.add_argument("m", type=int)
    p_sum.add_argument("n", type=int)
    p_sum.add_argument("--oracle", action="store_true",
                       help="force the O(n) definitional evaluator")
    p_sum.add_argument("--little", action="store_true",
                       help="also print s(m,n) = S(m,n)/12")
    p_sum.set_defaults(handler=_cmd_sum)

    p_pair = sub.add_parser("check-pair", help="classify S(m1,n) vs S(m2,n)")
    p_pair.add_argument("m1", type=int)
    p_pair.add_argument("m2", type=int)
    p_pair.add_argument("n", type=int)
    p_pair.set_defaults(handler=_cmd_check_pair)

    p_classes = sub.add_parser("classes", help="equality classes of all units mod n")
    p_classes.add_argument("n", type=int)
    p_classes.add_argument("--non-singleton", action="store_true",
                           help="show only classes with at least two members")
    p_classes.add_argument("--non-obvious", action="store_true",
                           help="show only classes with a non-obvious pair")
    p_classes.add_argument("--filter", type=_parse_filter, metavar="RmodM",
                           help="restrict members to a residue class, e.g. 1mod9")
    p_classes.add_argument("--bounds", action="store_true",
                           help="append the square-free bounds report")
    p_classes.add_argument("--pivot", type=_parse_range, metavar="A..B",
                           help="partner statistics for each m1 in the range")
    p_classes.add_argument("--limit", type=int, default=10**6,
                           help="refuse moduli above this bound (default 10^6)")
    p_classes.set_defaults(handler=_cmd_classes)

    p_family = sub.add_parser("family", help="construct a family of equal sums")
    sub_family = p_family.add_subparsers(dest="subkind", required=True)

    f_t1 = sub_family.add_parser("theorem1", help="arguments eps+dnm mod dn^2")
    f_t1.add_argument("-d", type=int, required=True)
    f_t1.add_argument("-n", type=int, required=True)
    f_t1.add_argument("--eps", type=int, choices=(1, -1), default=1)
    f_t1.set_defaults(handler=_cmd_family_theorem1)

    f_c1 = sub_family.add_parser("corollary1", help="arguments eps+l^r*q*m mod l^k")
    f_c1.add_argument("-l", type=int, required=True)
    f_c1.add_argument("-k", type=int, required=True)
    f_c1.add_argument("-r", type=int, required=True)
    f_c1.add_argument("-q", type=int, required=True)
    f_c1.add_argument("--eps", type=int, choices=(1, -1), default=1)
    f_c1.set_defaults(handler=_cmd_family_corollary1)

    f_c2 = sub_family.add_parser("corollary2",
                                 help="full equality class of eps+p^r*m mod p^k")
    f_c2.add_argument("-p", type=int, required=True)
    f_c2.add_argument("-k", type=int, required=True)
    f_c2.add_argument("-r", type=int, required=True)
    f_c2.add_argument("--eps", type=int, choices=(1, -1), default=1)
    f_c2.set_defaults(handler=_cmd_family_corollary2)

    f_quad = sub_family.add_parser("quad",
                                   help="square-free case: roots of m^2-tm-1 mod n")
    f_quad.add_argument("-t", type=int, required=True)
    f_quad.add_argument("-p", "--primes", type=_parse_primes, required=True,
                        metavar="P1,P2,...", dest="primes")
    f_quad.add_argument("--shift", type=int, default=0, metavar="L",
                        help="replace t by t + L*n")
    f_quad.set_defaults(handler=_cmd_family_quad)

    p_table = sub.add_parser("table1", help="eligible-prime table for small t")
    p_table.add_argument("--t", type=int, default=None,
                         help="single square-free t (default: the seven standard rows)")
    p_table.add_argument("--count", type=int, default=6,
                         help="primes per row (default 6)")
    p_table.set_defaults(handler=_cmd_table1)

    p_verify = sub.add_parser("verify-paper",
                              help="replay the golden reference examples")
    p_verify.add_argument("--list", action="store_true",
                          help="list item identifiers without running")
    p_verify.add_argument("--only", default=None, metavar="PREFIX",
                          help="run only items whose id starts with PREFIX")
    p_verify.set_defaults(handler=_cmd_verify_paper)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
