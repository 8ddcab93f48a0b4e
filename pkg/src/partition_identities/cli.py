"""Command-line front end.

Exit codes: 0 pass, 1 verification failure, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field

from . import bijection, enumeration, jagged, qseries
from .partitions import Partition, SemigroupParams, class_vector, parse_partition

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    status: str
    payload: str
    document: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL}.get(self.status, EXIT_USAGE)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> tuple[int, ...]:
    text = text.strip().strip("()")
    if not text:
        return ()
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="partid", description=__doc__)
    parser.add_argument("--format", choices=("text", "json", "csv"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify-analytic", help="product side vs sum side, exact coefficients")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--bivariate", action="store_true", help="also check the block-product chain")
    p.add_argument("--xdeg", type=int, default=None)
    p.add_argument("--exploratory", action="store_true", help="allow t=3 and report without asserting")
    p.add_argument("--dump-csv", metavar="PATH", help="write the coefficient table to PATH")

    p = sub.add_parser("verify-cardinality", help="C vs D counts by exhaustive enumeration")
    p.add_argument("--family-pair", choices=("t", "st"), required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--refined", action="store_true")
    p.add_argument("--disable", nargs="+", choices=("D0", "D1", "D2", "D3"), default=[])

    for name in ("map", "unmap"):
        p = sub.add_parser(name, help=f"{'forward' if name == 'map' else 'inverse'} stacking bijection")
        p.add_argument("--s", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
        p.add_argument("--partition", type=_partition_arg, required=True)
        p.add_argument("--trace", action="store_true")

    p = sub.add_parser("count", help="count (and list) members of one family")
    p.add_argument("--family", choices=enumeration.FAMILIES, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--list", action="store_true")
    p.add_argument("--disable", nargs="+", choices=("D0", "D1", "D2", "D3"), default=[])

    p = sub.add_parser("jagged", help="jagged-partition utilities")
    jsub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = jsub.add_parser("blocks")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--seq", type=_int_list, required=True, help="use --seq=-2,3 for a leading negative")
    q = jsub.add_parser("staircase")
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--seq", type=_int_list, required=True)
    q.add_argument("--remove", action="store_true")

    p = sub.add_parser("witness-d2", help="smallest n where dropping D2 adds members")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    return parser


def _fmt(parts) -> str:
    return ",".join(map(str, parts))


def _table(headers, rows) -> str:
    cells = [list(map(str, headers))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


def _cmd_verify_analytic(args) -> CommandResult:
    report = qseries.verify_analytic(args.t, args.degree, exploratory=args.exploratory)
    doc = report.as_dict()
    agree = report.agree
    if args.bivariate:
        M = args.xdeg if args.xdeg is not None else qseries.required_xdeg(args.t, args.degree)
        chain = qseries.verify_bivariate_chain(args.t, args.degree, M)
        doc["bivariate"] = chain
        agree = agree and chain["blocks_equal_quadruple_sum"] and chain["staircase_at_x1_equals_sum_side"] is not False
    rows = [(e, report.product[e], report.sum[e]) for e in range(args.degree + 1)]
    doc["rows"] = [{"degree": e, "product": a, "sum": b} for e, a, b in rows]
    if args.dump_csv:
        with open(args.dump_csv, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["degree", "product", "sum"])
            w.writerows(rows)
    if args.exploratory:
        doc["exploratory"] = True
        doc["agree"] = agree
        status = "pass"
    else:
        status = "pass" if agree else "fail"
    doc["status"] = status
    lines = [f"verify-analytic t={args.t} degree={args.degree}: {status.upper()}",
             f"max degree checked: {args.degree}"]
    if report.first_mismatch is not None:
        e = report.first_mismatch
        lines.append(f"first mismatch at q^{e}: product {report.product[e]} vs sum {report.sum[e]}")
    if args.exploratory:
        lines.append(f"exploratory mode: sides {'agree' if report.agree else 'disagree'}")
    if "bivariate" in doc:
        lines += [f"  {k}: {v}" for k, v in doc["bivariate"].items()]
    return CommandResult(status, "\n".join(lines), doc)


def _family_pair(args):
    if args.family_pair == "t":
        if args.disable:
            raise UsageError("--disable only applies to --family-pair st")
        if args.refined:
            raise UsageError("--refined only applies to --family-pair st")
        return enumeration.C_t(args.t), enumeration.D_t(args.t)
    if args.s is None:
        raise UsageError("--family-pair st needs --s")
    d = enumeration.D_st(args.s, args.t)
    if args.disable:
        d = d.without(*args.disable)
    return enumeration.C_st(args.s, args.t), d


def _cmd_verify_cardinality(args) -> CommandResult:
    c_spec, d_spec = _family_pair(args)
    c_counts = enumeration.count_table(args.max_n, c_spec)
    d_counts = enumeration.count_table(args.max_n, d_spec)
    rows = [{"n": n, "C": c_counts[n], "D": d_counts[n], "match": c_counts[n] == d_counts[n]}
            for n in range(args.max_n + 1)]
    if args.refined:
        params = SemigroupParams(args.s, args.t)
        c_ref = enumeration.refined_count_tables(args.max_n, args.s, args.t, "C")
        d_tab = [dict() for _ in range(args.max_n + 1)]
        for parts in enumeration.iter_up_to(args.max_n, d_spec):
            cv = class_vector(parts, params, "D")
            d_tab[sum(parts)][cv] = d_tab[sum(parts)].get(cv, 0) + 1
        for n, row in enumerate(rows):
            row["refined_match"] = c_ref[n] == d_tab[n]
    bad = [r["n"] for r in rows if not r["match"] or not r.get("refined_match", True)]
    status = "fail" if bad else "pass"
    doc = {"family_pair": args.family_pair, "t": args.t, "s": args.s, "max_n": args.max_n,
           "disabled": sorted(args.disable), "refined": args.refined,
           "mismatches": bad, "status": status, "rows": rows}
    head = (f"verify-cardinality {args.family_pair} t={args.t}"
            + (f" s={args.s}" if args.s else "") + f" n<={args.max_n}: {status.upper()}")
    if bad:
        head += f"\nmismatch at n = {', '.join(map(str, bad))}"
    cols = ["n", "C", "D", "match"] + (["refined_match"] if args.refined else [])
    return CommandResult(status, head + "\n" + _table(cols, [[r[c] for c in cols] for r in rows]), doc)


def _cmd_map(args, direction: str) -> CommandResult:
    fn = bijection.forward if direction == "map" else bijection.inverse
    result, trace = fn(args.partition, args.s, args.t)
    doc = {"s": args.s, "t": args.t, "input": list(args.partition), "output": list(result),
           "weight": result.weight, "status": "pass"}
    label = "pi3" if direction == "map" else "pi"
    lines = [f"{label} = {_fmt(result)}"]
    if args.trace:
        doc["trace"] = trace.as_dict()
        d = doc["trace"]
        stages = [("pi1", d["pi1"]), ("pi2", d["pi2"]), ("pi5", d["pi5"]), ("pi4", d["pi4"]),
                  ("pi4*", d["pi4_star"]), ("pi6", d["pi6"]), ("offsets", d["offsets"])]
        stages += [(f"S_{i}", s_) for i, s_ in enumerate(d["strings"])]
        stages += [("pi3", d["pi3"]), ("pi", d["pi"])]
        width = max(len(k) for k, _ in stages)
        lines.append(f"threshold t*p = {d['threshold']}")
        lines += [f"{k.ljust(width)} = {_fmt(v)}" for k, v in stages]
        doc["rows"] = [{"stage": k, "value": _fmt(v)} for k, v in stages]
    return CommandResult("pass", "\n".join(lines), doc)


def _cmd_count(args) -> CommandResult:
    conds = None
    if args.disable:
        if args.family != "D_st":
            raise UsageError("--disable only applies to --family D_st")
        conds = {"D0", "D1", "D2", "D3"} - set(args.disable)
    spec = enumeration.FamilySpec(args.family, args.t, args.s,
                                  frozenset(conds) if conds is not None else None)
    members = enumeration.enumerate_partitions(args.n, spec)
    doc = {"family": args.family, "t": args.t, "s": args.s, "n": args.n,
           "count": len(members), "status": "pass"}
    lines = [str(len(members))]
    if args.list:
        doc["partitions"] = [list(p) for p in members]
        doc["rows"] = [{"partition": _fmt(p)} for p in members]
        lines.append(", ".join(str(p) for p in members))
    return CommandResult("pass", "\n".join(lines), doc)


def _cmd_jagged(args) -> CommandResult:
    seq = args.seq
    if args.action == "blocks":
        blocks = jagged.maximal_blocks(seq, args.k)
        doc = {"k": args.k, "sequence": list(seq), "strong": True,
               "blocks": [{"label": b.label, "entries": list(b.entries)} for b in blocks],
               "status": "pass"}
        doc["rows"] = [{"label": b.label, "entries": _fmt(b.entries)} for b in blocks]
        lines = [f"M_{b.label} = ({_fmt(b.entries)})" for b in blocks]
        return CommandResult("pass", "\n".join(lines) or "(no blocks)", doc)
    out = jagged.remove_staircase(seq, args.k) if args.remove else jagged.add_staircase(seq, args.k)
    doc = {"k": args.k, "sequence": list(seq), "removed" if args.remove else "added": list(out),
           "result": list(out), "status": "pass"}
    return CommandResult("pass", _fmt(out), doc)


def _cmd_witness(args) -> CommandResult:
    w = enumeration.find_d2_witness(args.s, args.t, args.max_n)
    status = "pass" if w.n is not None else "fail"
    doc = {"s": args.s, "t": args.t, "max_n": args.max_n, "witness_n": w.n,
           "partitions": [list(p) for p in w.partitions], "status": status}
    if w.n is None:
        text = f"no D2 witness for s={args.s}, t={args.t} up to n={args.max_n}"
    else:
        text = (f"smallest witness n = {w.n}\n"
                f"admitted only without D2: {', '.join(str(p) for p in w.partitions)}")
    return CommandResult(status, text, doc)


def _render(result: CommandResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.document, sort_keys=True, indent=2)
    if fmt == "csv":
        rows = result.document.get("rows")
        buf = io.StringIO()
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        else:
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["key", "value"])
            for k, v in sorted(result.document.items()):
                w.writerow([k, json.dumps(v) if isinstance(v, (list, dict)) else v])
        return buf.getvalue().rstrip("\n")
    return result.payload


def run(argv=None) -> CommandResult:
    parser = build_parser()
    fmt = "text"
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        if args.command == "verify-analytic":
            result = _cmd_verify_analytic(args)
        elif args.command == "verify-cardinality":
            result = _cmd_verify_cardinality(args)
        elif args.command in ("map", "unmap"):
            result = _cmd_map(args, args.command)
        elif args.command == "count":
            result = _cmd_count(args)
        elif args.command == "jagged":
            result = _cmd_jagged(args)
        else:
            result = _cmd_witness(args)
    except (UsageError, ValueError) as exc:
        result = CommandResult("error", f"error: {exc}", {"status": "error", "error": str(exc)})
    except bijection.BijectionError as exc:
        # a member the map cannot handle is a failed check, not bad usage
        result = CommandResult("fail", f"fail: {exc}", {"status": "fail", "error": str(exc)})
    if "error" not in result.document:
        result.payload = _render(result, fmt)
    elif fmt == "json":
        result.payload = json.dumps(result.document, sort_keys=True, indent=2)
    return result


def main(argv=None) -> int:
    result = run(argv)
    print(result.payload, file=sys.stderr if result.status == "error" else sys.stdout)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
