"""Command-line front end.

    python -m ggs_lcs lcs --p 3 --vector 1,0 --level 3 --format json
    python -m ggs_lcs verify theorem-5-1 --p 3 --vector 0,1 --level 4

Exit status: 0 when every check passes, 1 when a check fails, 2 for bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass

from .ggs import (
    DefiningVector,
    congruence_quotient,
    interval_schedule,
    parse_vector,
)
from .perm_core import NonNilpotentError, lower_central_series
from .verify import CHECKS, PreconditionError, applicable_checks, check_wreath_closed_form, run_check

ENVELOPE = {3: 4, 5: 3, 7: 3}
COMMANDS = ("orders", "lcs", "schedule", "wreath", "verify", "verify-all")


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    p: int
    vector: DefiningVector
    level: int
    command: str
    format: str = "json"
    seed: int = 0
    check: str | None = None
    full_orders: bool = False
    timing: bool = False
    max_terms: int | None = None


def make_config(args) -> RunConfig:
    p = args.p
    if p not in ENVELOPE:
        raise UsageError(f"p must be one of {sorted(ENVELOPE)}, got {p}")
    if not 1 <= args.level <= ENVELOPE[p]:
        raise UsageError(f"level for p={p} must lie in 1..{ENVELOPE[p]}, got {args.level}")
    text = args.vector if args.vector is not None else ",".join(["1"] + ["0"] * (p - 2))
    try:
        vector = parse_vector(p, text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    check = getattr(args, "check", None)
    if args.command == "verify" and check not in CHECKS:
        raise UsageError(f"unknown check {check!r}; choose from {', '.join(CHECKS)}")
    bound = os.environ.get("GGS_MAX_VALUATION")
    try:
        max_terms = int(bound) if bound else None
    except ValueError:
        raise UsageError(f"GGS_MAX_VALUATION must be an integer, got {bound!r}") from None
    return RunConfig(
        p=p,
        vector=vector,
        level=args.level,
        command=args.command,
        format=args.format,
        seed=args.seed,
        check=check,
        full_orders=args.full_orders,
        timing=args.timing,
        max_terms=max_terms,
    )


# ---------------------------------------------------------------------------
# report bodies


def generator_tags(vector: DefiningVector, n: int, i: int) -> list:
    """Words predicted to generate gamma_i(G_n) modulo gamma_{i+1}, where known."""
    if n >= 3:
        if not vector.is_fg_type:
            return []
        return list(interval_schedule(vector.p, n).tags(i))
    if vector.is_periodic:
        return []
    if i == 1:
        # b acts trivially on the first level, so G_1 is generated by a alone
        return ["y_1(1)"] if n == 1 else ["x(1)", "y_1(1)"]
    return [f"x({i})"]


def orders_results(cfg: RunConfig) -> list:
    out = []
    for k in range(1, cfg.level + 1):
        q = congruence_quotient(cfg.vector, k)
        row = {"level": k, "order_valuation": q.order_valuation}
        if cfg.full_orders:
            row["order"] = str(q.chain.order)
        out.append(row)
    return out


def lcs_results(cfg: RunConfig) -> list:
    q = congruence_quotient(cfg.vector, cfg.level)
    series = lower_central_series(q.generators, max_terms=cfg.max_terms)
    rows, total = [], 0
    for i, exp in enumerate(series.index_exponents, start=1):
        total += exp
        rows.append(
            {
                "i": i,
                "exponent": exp,
                "generator_tags": generator_tags(cfg.vector, cfg.level, i),
                "cumulative_valuation": total,
            }
        )
    body = {
        "index_exponents": list(series.index_exponents),
        "nilpotency_class": series.nilpotency_class,
        "order_valuation": series.order_valuation,
        "term_valuations": [v for _, v in series.terms],
        "terms": rows,
    }
    if cfg.full_orders:
        body["orders"] = [str(o) for o in series.orders]
    return [body]


def schedule_results(cfg: RunConfig) -> list:
    if cfg.level < 3:
        raise PreconditionError("the interval schedule needs level >= 3")
    sched = interval_schedule(cfg.p, cfg.level)
    return [
        {
            "class": sched.class_c,
            "ell": list(sched.ell),
            "r": list(sched.r),
            "exponents": sched.exponents,
            "total": sched.total,
            "terms": [
                {"i": i, "exponent": sched.exponent(i), "generator_tags": list(sched.tags(i))}
                for i in range(1, sched.class_c + 1)
            ],
        }
    ]


def check_results(cfg: RunConfig) -> list:
    if cfg.command == "wreath":
        q = congruence_quotient(cfg.vector, cfg.level)
        results = [check_wreath_closed_form(q.generators, cfg.p, f"G_{cfg.level}")]
    elif cfg.command == "verify":
        results = [run_check(cfg.check, cfg.vector, cfg.level, cfg.seed)]
    else:
        results = [run_check(name, cfg.vector, cfg.level, cfg.seed) for name in applicable_checks(cfg.vector, cfg.level)]
    return results


def build_report(cfg: RunConfig):
    """Return (exit status, report dict)."""
    if cfg.command == "orders":
        results, status = orders_results(cfg), 0
    elif cfg.command == "lcs":
        results, status = lcs_results(cfg), 0
    elif cfg.command == "schedule":
        results, status = schedule_results(cfg), 0
    else:
        checks = check_results(cfg)
        results = [c.as_dict(timing=cfg.timing) for c in checks]
        status = 0 if all(c.passed for c in checks) else 1
    report = {
        "p": cfg.p,
        "vector": list(cfg.vector.entries),
        "level": cfg.level,
        "command": cfg.command,
        "results": results,
    }
    return status, report


# ---------------------------------------------------------------------------
# rendering


def to_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, separators=(",", ":"))


def _cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return "" if v is None else str(v)


def to_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    cmd = report["command"]
    results = report["results"]
    if cmd == "lcs":
        w.writerow(["i", "exponent", "generator_tags", "cumulative_valuation"])
        for row in results[0]["terms"]:
            w.writerow([_cell(row[k]) for k in ("i", "exponent", "generator_tags", "cumulative_valuation")])
    elif cmd == "orders":
        cols = ["level", "order_valuation"] + (["order"] if results and "order" in results[0] else [])
        w.writerow(cols)
        for row in results:
            w.writerow([_cell(row[k]) for k in cols])
    elif cmd == "schedule":
        w.writerow(["i", "exponent", "generator_tags"])
        for row in results[0]["terms"]:
            w.writerow([_cell(row[k]) for k in ("i", "exponent", "generator_tags")])
    else:
        w.writerow(["check_name", "item", "expected", "computed", "passed"])
        for res in results:
            for d in res["details"]:
                w.writerow([res["check_name"], d["item"], _cell(d["expected"]), _cell(d["computed"]), _cell(d["passed"])])
    return buf.getvalue()


def to_text(report: dict) -> str:
    lines = [f"{report['command']}  p={report['p']}  vector={','.join(map(str, report['vector']))}  level={report['level']}"]
    cmd = report["command"]
    results = report["results"]
    if cmd == "orders":
        for row in results:
            extra = f"  (order {row['order']})" if "order" in row else ""
            lines.append(f"  |G_{row['level']}| = p^{row['order_valuation']}{extra}")
    elif cmd == "lcs":
        body = results[0]
        lines.append(f"  class {body['nilpotency_class']}, log_p |G| = {body['order_valuation']}")
        for row in body["terms"]:
            tags = ", ".join(row["generator_tags"])
            lines.append(f"  i={row['i']:>3}  p^{row['exponent']}  cumulative {row['cumulative_valuation']:>3}  {tags}")
    elif cmd == "schedule":
        body = results[0]
        lines.append(f"  c(n) = {body['class']}, ell = {body['ell']}, r = {body['r']}")
        for row in body["terms"]:
            lines.append(f"  i={row['i']:>3}  p^{row['exponent']}  {', '.join(row['generator_tags'])}")
    else:
        for res in results:
            verdict = "PASS" if res["passed"] else "FAIL"
            lines.append(f"  {verdict}  {res['check_name']}  ({len(res['details'])} items)")
            for d in res["details"]:
                if not d["passed"]:
                    lines.append(f"      failed: {d['item']}: expected {d['expected']}, got {d['computed']}")
    return "\n".join(lines) + "\n"


RENDER = {"json": lambda r: to_json(r) + "\n", "csv": to_csv, "text": to_text}


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=3, help="odd prime: 3, 5 or 7")
    common.add_argument("--vector", default=None, help="defining vector, e.g. 1,0,0,4 (default 1,0,...,0)")
    common.add_argument("--level", type=int, default=3, help="congruence level n")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised sampling inside checks")
    common.add_argument("--full-orders", action="store_true", help="also print full orders as decimal strings")
    common.add_argument("--timing", action="store_true", help="report elapsed_ms (otherwise 0 for reproducible output)")

    parser = argparse.ArgumentParser(prog="ggs-lcs", description="Lower central series of GGS-group quotients.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("orders", parents=[common], help="order valuations of G_1..G_n")
    sub.add_parser("lcs", parents=[common], help="lower central series of G_n")
    sub.add_parser("schedule", parents=[common], help="predicted index schedule (n >= 3)")
    sub.add_parser("wreath", parents=[common], help="closed form against brute force for W(G_n)")
    v = sub.add_parser("verify", parents=[common], help="run one named check")
    v.add_argument("check", help=f"one of: {', '.join(CHECKS)}")
    sub.add_parser("verify-all", parents=[common], help="run every applicable check")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = make_config(args)
        status, report = build_report(cfg)
    except (UsageError, PreconditionError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except NonNilpotentError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    stdout.write(RENDER[cfg.format](report))
    return status


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    raise SystemExit(main())
