"""Command-line front end.

Exit codes: 0 success, 1 usage or parse error, 2 violated precondition,
3 verification disagreement or failed suite.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .expr import ExprSyntaxError, family_of, parse_expr, evaluate
from .graph import Graph, GraphError
from .lex import DEFAULT_BUDGET, predict_dim_lex, verify
from .resolver import Mode, all_adjacency_bases, dimension, gaps
from .suites import SUITES, run_suite
from .tables import ALTERNATE, PRINTED, TableError, closed_form_dim_lex
from .twins import twin_partition

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_DISAGREE = 0, 1, 2, 3

# basis enumeration is exhaustive over C(n, adim) subsets
BASES_WARN_ORDER = 14


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _graph(text: str) -> Graph:
    return evaluate(parse_expr(text))


def _emit(args, payload: dict, human: str) -> None:
    print(json.dumps(payload, sort_keys=True) if args.json else human)


def _fmt_set(vs) -> str:
    return "{" + ", ".join(map(str, vs)) + "}"


def cmd_dim(args, mode: Mode) -> int:
    g = _graph(args.expr)
    value, witness = dimension(g, mode)
    key = "dim" if mode is Mode.METRIC else "adim"
    _emit(args, {"expr": args.expr, key: value, "witness": list(witness)}, f"{value}  witness {_fmt_set(witness)}")
    return EXIT_OK


def cmd_twins(args) -> int:
    s = twin_partition(_graph(args.expr))
    lines = [f"n={s.n} a={s.a} b={s.b} iota={s.iota} iota_K={s.iota_K} iota_N={s.iota_N}"]
    lines += [f"  ({t.value}) {_fmt_set(c)}" for c, t in zip(s.classes, s.types)]
    _emit(args, {"expr": args.expr, **s.to_dict()}, "\n".join(lines))
    return EXIT_OK


def cmd_bases(args) -> int:
    g = _graph(args.expr)
    if g.order > BASES_WARN_ORDER:
        print(f"warning: enumerating adjacency bases of a {g.order}-vertex graph may be slow", file=sys.stderr)
    rep = all_adjacency_bases(g)
    lines = [f"adim={rep.adim} bases={len(rep.bases)} case={rep.case.value}", "basis            all-ones  all-twos"]
    for b, o, t in zip(rep.bases, rep.has_all_ones, rep.has_all_twos):
        lines.append(f"{_fmt_set(b):<16} {'yes' if o else 'no':<9} {'yes' if t else 'no'}")
    _emit(args, {"expr": args.expr, **rep.to_dict()}, "\n".join(lines))
    return EXIT_OK


def cmd_gaps(args) -> int:
    g = _graph(args.expr)
    try:
        landmarks = [int(x) for x in args.set.split(",") if x.strip()]
    except ValueError:
        raise _UsageError(f"--set expects comma-separated vertex indices, got {args.set!r}") from None
    d = gaps(g, landmarks)
    lines = [f"gap {i}: {_fmt_set(sorted(q))}" for i, q in enumerate(d.gaps)]
    lines.append("neighbouring: " + (", ".join(f"{a}-{b}" for a, b in sorted(d.neighbors)) or "none"))
    payload = {
        "expr": args.expr,
        "landmarks": sorted(d.landmarks),
        "gaps": [sorted(q) for q in d.gaps],
        "neighbors": [list(p) for p in sorted(d.neighbors)],
    }
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_predict(args) -> int:
    p = predict_dim_lex(_graph(args.g), _graph(args.h))
    t = p.trace
    human = (
        f"dim({args.g}[{args.h}]) = {p.value}  case {p.case.value}  {t['formula']}\n"
        f"  n={t['n']} adim={t['adim']} a={t['a']} b={t['b']} iota={t['iota']} iota_K={t['iota_K']} iota_N={t['iota_N']}"
    )
    _emit(args, {"g": args.g, "h": args.h, "predicted": p.value, "case": p.case.value, "trace": t}, human)
    return EXIT_OK


def cmd_closed_form(args) -> int:
    gf, hf = family_of(parse_expr(args.g)), family_of(parse_expr(args.h))
    if gf is None or hf is None:
        raise TableError("closed forms need named families on both sides")
    tv = closed_form_dim_lex(gf, hf, reading=args.reading)
    payload = {"g": args.g, "h": args.h, "closed_form": tv.value, "table": tv.table, "row": tv.row}
    _emit(args, payload, f"dim({args.g}[{args.h}]) = {tv.value}  [{tv.table}: {tv.row}]")
    return EXIT_OK


def cmd_verify(args) -> int:
    ge, he = parse_expr(args.g), parse_expr(args.h)
    rep = verify(
        evaluate(ge), evaluate(he), budget=args.budget, g_name=args.g, h_name=args.h,
        g_family=family_of(ge), h_family=family_of(he),
    )
    r = rep.to_record()
    if rep.verified:
        status = "agree" if rep.agree_pred else "DISAGREE"
        human = f"{args.g}[{args.h}]: predicted={r['predicted']} brute={r['brute_force']} ({status})"
    else:
        human = f"{args.g}[{args.h}]: predicted={r['predicted']} (unverified: {rep.n * rep.m} vertices > budget {args.budget})"
    human += f"  case {r['case']}"
    if r["closed_form"] is not None:
        human += f"  table={r['closed_form']}" + ("" if r["agree_table"] else " (table discrepancy)")
    _emit(args, r, human)
    return EXIT_DISAGREE if rep.agree_pred is False else EXIT_OK


def cmd_suite(args) -> int:
    if args.name not in SUITES:
        raise _UsageError(f"unknown suite {args.name!r}; choose from {', '.join(SUITES)}")
    res = run_suite(args.name, budget=args.budget)
    human = [res.line()] + [f"  discrepancy: {json.dumps(d)}" for d in res.discrepancies[:50]]
    _emit(args, res.to_dict(), "\n".join(human))
    return EXIT_OK if res.passed else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")

    p = _Parser(prog="lexdim", description="Metric dimension of lexicographic products.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for name, helptext in (("dim", "metric dimension"), ("adim", "adjacency dimension"),
                           ("twins", "twin classes and counts"), ("bases", "all adjacency bases and the case")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("expr")
    s = sub.add_parser("gaps", parents=[common], help="gaps of a landmark set")
    s.add_argument("expr")
    s.add_argument("--set", required=True, help="comma-separated landmark vertices")
    for name, helptext in (("predict", "theorem-based dim(G[H])"), ("closed-form", "table value of dim(G[H])"),
                           ("verify", "prediction vs exhaustive search")):
        s = sub.add_parser(name, parents=[common], help=helptext)
        s.add_argument("g")
        s.add_argument("h")
        if name == "verify":
            s.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max product order to search")
        if name == "closed-form":
            s.add_argument("--reading", choices=[PRINTED, ALTERNATE], default=PRINTED)
    s = sub.add_parser("suite", parents=[common], help="run a named verification suite")
    s.add_argument("name", help=", ".join(SUITES))
    s.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return p


HANDLERS = {
    "dim": lambda a: cmd_dim(a, Mode.METRIC),
    "adim": lambda a: cmd_dim(a, Mode.ADJACENCY),
    "twins": cmd_twins,
    "bases": cmd_bases,
    "gaps": cmd_gaps,
    "predict": cmd_predict,
    "closed-form": cmd_closed_form,
    "verify": cmd_verify,
    "suite": cmd_suite,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return HANDLERS[args.command](args)
    except (_UsageError, ExprSyntaxError) as exc:
        print(f"lexdim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphError, TableError) as exc:
        print(f"lexdim: error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
