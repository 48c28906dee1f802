"""Command-line front end.

Subcommands: classes, irreps, char-table, tensor, ext, quiver,
sod-verify, sweep.  All structured output is UTF-8 JSON/CSV/DOT on
stdout; everything is controlled by flags.  Exit status: 0 ok, 1 when a
verification check fails, 2 on usage or label parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .extcalc import ext_sky_sky
from .group import GroupParams, classes_to_json, conjugacy_classes
from .labels import LabelParseError, label_str, parse_label, sort_key
from .quiver import build_quiver, emit
from .reps import get_table
from .sodverify import sweep_params, verify


def _params(args) -> GroupParams:
    return GroupParams(args.m, args.e)


def _cmd_classes(args) -> int:
    classes = conjugacy_classes(_params(args))
    if args.format == "json":
        print(classes_to_json(classes))
    else:
        print(f"{'representative':>16} {'size':>5} {'|C(g)|':>7}  fixed locus")
        for c in classes:
            print(
                f"{str(c.representative):>16} {c.size:>5} {c.centraliser_order:>7}  {c.fixed_locus}"
            )
    return 0


def _cmd_irreps(args) -> int:
    table = get_table(_params(args))
    if args.format == "json":
        print(json.dumps([label_str(w) for w in table.irreps], indent=2))
    else:
        for w in table.irreps:
            print(label_str(w))
    return 0


def _cmd_char_table(args) -> int:
    table = get_table(_params(args))
    reps = [str(c.representative) for c in table.classes]
    if args.format == "csv":
        print("irrep," + ",".join(reps))
        for w, values in table.char_table_rows():
            print(label_str(w) + "," + ",".join(f'"{v}"' for v in values))
    else:
        rows = []
        for w, values in table.char_table_rows():
            rows.append(
                {
                    "label": label_str(w),
                    "values": [
                        {
                            "coeffs": [str(c) for c in v.coeffs],
                            "display": str(v),
                        }
                        for v in values
                    ],
                }
            )
        print(
            json.dumps(
                {"m": args.m, "e": args.e, "classes": reps, "rows": rows},
                indent=2,
                sort_keys=True,
            )
        )
    return 0


def _cmd_tensor(args) -> int:
    table = get_table(_params(args))
    u, w = parse_label(args.u), parse_label(args.w)
    dec = table.tensor(u, w)
    items = sorted(dec.items(), key=lambda t: sort_key(t[0]))
    if args.format == "json":
        print(json.dumps([[label_str(x), k] for x, k in items], indent=2))
    else:
        print(" + ".join(f"{k}*{label_str(x)}" if k > 1 else label_str(x) for x, k in items))
    return 0


def _cmd_ext(args) -> int:
    table = get_table(_params(args))
    u, w = parse_label(args.u), parse_label(args.w)
    profile = ext_sky_sky(u, w, table)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "U": label_str(u),
                    "W": label_str(w),
                    "d0": profile.d0,
                    "d1": profile.d1,
                    "d2": profile.d2,
                },
                indent=2,
                sort_keys=True,
            )
        )
    else:
        print(f"{'U':>14} {'W':>14} {'Ext^0':>5} {'Ext^1':>5} {'Ext^2':>5}")
        print(
            f"{label_str(u):>14} {label_str(w):>14} {profile.d0:>5} {profile.d1:>5} {profile.d2:>5}"
        )
    return 0


def _cmd_quiver(args) -> int:
    print(emit(build_quiver(_params(args)), args.format), end="")
    return 0


def _cmd_sod_verify(args) -> int:
    report = verify(_params(args))
    if args.json:
        print(report.to_json())
    else:
        c = report.counts
        print(
            f"G({args.m},{args.e},2): {c['classes']} classes, {c['pieces']} pieces,"
            f" sequence length {c['exceptional_length']}"
        )
        for check in report.checks:
            mark = "pass" if check.passed else "FAIL"
            print(f"  [{mark}] {check.name} ({check.mode}): {check.detail}")
    return 0 if report.passed else 1


def _cmd_sweep(args) -> int:
    failures = 0
    rows = []
    for params in sweep_params(args.max_m):
        report = verify(params)
        failures += 0 if report.passed else 1
        rows.append(report)
    if args.json:
        print(
            "[" + ",\n".join(r.to_json() for r in rows) + "]"
        )
    else:
        print(f"{'group':>12} {'classes':>8} {'pieces':>7} {'seq':>4}  checks")
        for r in rows:
            marks = "".join("." if c.passed else "F" for c in r.checks)
            status = "pass" if r.passed else "FAIL"
            print(
                f"G({r.params.m},{r.params.e},2)".rjust(12)
                + f" {r.counts['classes']:>8} {r.counts['pieces']:>7}"
                + f" {r.counts['exceptional_length']:>4}  {marks} {status}"
            )
        print(f"{len(rows)} parameter pairs, {failures} failing")
    return 1 if failures else 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gme2",
        description="Exact computations for the reflection groups G(m, e, 2)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_me=True, formats=None, default_format="text"):
        p = sub.add_parser(name)
        if needs_me:
            p.add_argument("--m", type=int, required=True)
            p.add_argument("--e", type=int, required=True)
        if formats:
            p.add_argument("--format", choices=formats, default=default_format)
        p.set_defaults(fn=fn)
        return p

    add("classes", _cmd_classes, formats=("text", "json"))
    add("irreps", _cmd_irreps, formats=("text", "json"))
    add("char-table", _cmd_char_table, formats=("json", "csv"), default_format="json")
    p = add("tensor", _cmd_tensor, formats=("text", "json"))
    p.add_argument("u", metavar="U")
    p.add_argument("w", metavar="W")
    p = add("ext", _cmd_ext, formats=("text", "json"))
    p.add_argument("u", metavar="U")
    p.add_argument("w", metavar="W")
    add("quiver", _cmd_quiver, formats=("dot", "json"), default_format="dot")
    p = add("sod-verify", _cmd_sod_verify)
    p.add_argument("--json", action="store_true")
    p = add("sweep", _cmd_sweep, needs_me=False)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.fn(args)
    except LabelParseError as exc:
        print(f"gme2: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"gme2: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
