"""Command-line front end.

Exit codes: 0 success (for ``equiv``: equivalent), 1 negative result
(``equiv``: not equivalent; ``check-axioms``: some instance failed),
2 usage or input errors, 3 node-budget exhaustion.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from .congruence import (
    CongruenceKind,
    CR,
    FREE,
    MEM,
    RP,
    check_axioms,
    equivalent,
    normal_form,
    render_truth_table,
    separation_witnesses,
    static,
    truth_table,
)
from .errors import BudgetError, CondAlgError
from .evaltrees import evaluate_with_oracle, render_tree, se
from .shortcircuit import desugar, make_register_oracle, parse_register_state, parse_sc
from .terms import Atom, Sigma, enumerate_basic_forms, parse_term, render_term
from .treetransform import cse, mse, rpse, sse

_SYSTEM_KINDS = {"free": FREE, "rp": RP, "cr": CR, "mem": MEM}


class UsageError(Exception):
    pass


def _parse_sigma(text: str) -> Sigma:
    """``ab`` means the single-letter atoms a then b; multi-character atoms
    are given comma-separated, optionally double-quoted."""
    names: list[str] = []
    if "," in text:
        for chunk in text.split(","):
            name = chunk.strip()
            if len(name) >= 2 and name.startswith('"') and name.endswith('"'):
                name = name[1:-1]
            if not name:
                raise UsageError(f"empty atom in sigma {text!r}")
            names.append(name)
    else:
        for c in text:
            if not c.islower() or not c.isalpha():
                raise UsageError(
                    f"sigma {text!r} must be single-letter atoms; use commas for longer names"
                )
            names.append(c)
    if not names:
        raise UsageError("sigma must not be empty")
    return Sigma(tuple(Atom(n) for n in names))


def _resolve_kind(system: str, sigma_text: str | None) -> CongruenceKind:
    if system == "static":
        if sigma_text is None:
            raise UsageError("--sigma is required when --system static")
        return static(_parse_sigma(sigma_text))
    if sigma_text is not None:
        raise UsageError("--sigma is only meaningful with --system static")
    return _SYSTEM_KINDS[system]


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        print(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condalg",
        description="Conditional statements: normal forms, evaluation trees, "
        "and valuation congruences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    p_norm = sub.add_parser("normalize", help="print a term's normal form")
    p_norm.add_argument("--system", required=True, choices=["free", "rp", "cr", "mem", "static"])
    p_norm.add_argument("--sigma", help="evaluation order (static only)")
    p_norm.add_argument("term")
    add_out(p_norm)

    p_tree = sub.add_parser("tree", help="print a term's (transformed) evaluation tree")
    p_tree.add_argument(
        "--semantics", required=True, choices=["se", "rpse", "cse", "mse", "sse"]
    )
    p_tree.add_argument("--sigma", help="evaluation order (sse only)")
    p_tree.add_argument("--format", default="text", choices=["text", "json", "dot"])
    p_tree.add_argument("term")
    add_out(p_tree)

    p_equiv = sub.add_parser("equiv", help="decide a valuation congruence")
    p_equiv.add_argument("--system", required=True, choices=["free", "rp", "cr", "mem", "static"])
    p_equiv.add_argument("--sigma", help="evaluation order (static only)")
    p_equiv.add_argument("left")
    p_equiv.add_argument("right")
    add_out(p_equiv)

    p_table = sub.add_parser("table", help="print a term's truth table")
    p_table.add_argument("--sigma", required=True)
    p_table.add_argument("--format", default="text", choices=["text", "json"])
    p_table.add_argument("term")
    add_out(p_table)

    p_desugar = sub.add_parser("desugar", help="rewrite !, && and || into conditionals")
    p_desugar.add_argument("expr")
    add_out(p_desugar)

    p_axioms = sub.add_parser("check-axioms", help="check an axiom system over a term pool")
    p_axioms.add_argument(
        "--system", required=True, choices=["CP", "CPrp", "CPcr", "CPmem", "CPs", "CPst"]
    )
    p_axioms.add_argument("--pool-depth", type=int, default=1)
    add_out(p_axioms)

    p_eval = sub.add_parser("eval", help="evaluate an expression against register state")
    p_eval.add_argument("--state", default="", help="comma-separated name=int assignments")
    p_eval.add_argument("expr")
    add_out(p_eval)

    p_wit = sub.add_parser("witnesses", help="show the lattice separation witnesses")
    add_out(p_wit)

    return parser


_TREE_SEMANTICS = {"se": se, "rpse": rpse, "cse": cse, "mse": mse}

# check-axioms instantiates over the basic forms on this fixed alphabet and
# checks each system under its own congruence (sigma: the alphabet in order).
_AXIOM_ALPHABET = (Atom("a"), Atom("b"))
_AXIOM_SYSTEM_KIND = {
    "CP": FREE,
    "CPrp": RP,
    "CPcr": CR,
    "CPmem": MEM,
    "CPs": static(Sigma(_AXIOM_ALPHABET)),
    "CPst": static(Sigma(_AXIOM_ALPHABET)),
}


def _cmd_normalize(args: argparse.Namespace) -> int:
    kind = _resolve_kind(args.system, args.sigma)
    term = parse_term(args.term)
    _emit(render_term(normal_form(term, kind)), args.out)
    return 0


def _cmd_tree(args: argparse.Namespace) -> int:
    term = parse_term(args.term)
    if args.semantics == "sse":
        if args.sigma is None:
            raise UsageError("--sigma is required when --semantics sse")
        tree = sse(_parse_sigma(args.sigma), term)
    else:
        if args.sigma is not None:
            raise UsageError("--sigma is only meaningful with --semantics sse")
        tree = _TREE_SEMANTICS[args.semantics](term)
    fmt = "ascii" if args.format == "text" else args.format
    _emit(render_tree(tree, fmt), args.out)
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    kind = _resolve_kind(args.system, args.sigma)
    left = parse_term(args.left)
    right = parse_term(args.right)
    same = equivalent(left, right, kind)
    _emit("equivalent" if same else "not equivalent", args.out)
    return 0 if same else 1


def _cmd_table(args: argparse.Namespace) -> int:
    sigma = _parse_sigma(args.sigma)
    term = parse_term(args.term)
    table = truth_table(term, sigma)
    _emit(render_truth_table(table, args.format, title=render_term(term)), args.out)
    return 0


def _cmd_desugar(args: argparse.Namespace) -> int:
    _emit(render_term(desugar(parse_sc(args.expr))), args.out)
    return 0


def _cmd_check_axioms(args: argparse.Namespace) -> int:
    if args.pool_depth < 0:
        raise UsageError("--pool-depth must be nonnegative")
    pool = enumerate_basic_forms(_AXIOM_ALPHABET, args.pool_depth)
    kind = _AXIOM_SYSTEM_KIND[args.system]
    reports = check_axioms(args.system, pool, kind)
    totals: Counter[str] = Counter()
    failures: Counter[str] = Counter()
    for report in reports:
        totals[report.axiom_name] += 1
        if not report.holds:
            failures[report.axiom_name] += 1
    lines = [f"system {args.system} under {kind}: pool of {len(pool)} terms"]
    for name in totals:
        if failures[name]:
            lines.append(f"{name}: {failures[name]} of {totals[name]} instances FAIL")
        else:
            lines.append(f"{name}: {totals[name]} instances, all hold")
    _emit("\n".join(lines), args.out)
    return 1 if failures.total() else 0


def _cmd_eval(args: argparse.Namespace) -> int:
    oracle = make_register_oracle(parse_register_state(args.state))
    term = desugar(parse_sc(args.expr))
    result = evaluate_with_oracle(term, oracle)
    _emit("T" if result else "F", args.out)
    return 0


def _cmd_witnesses(args: argparse.Namespace) -> int:
    lines = []
    for left, right, finer, coarser in separation_witnesses():
        lines.append(
            f"{render_term(left)}  vs  {render_term(right)}: "
            f"equivalent under {coarser}, distinct under {finer}"
        )
    lines.append("all witnesses verified")
    _emit("\n".join(lines), args.out)
    return 0


_COMMANDS = {
    "normalize": _cmd_normalize,
    "tree": _cmd_tree,
    "equiv": _cmd_equiv,
    "table": _cmd_table,
    "desugar": _cmd_desugar,
    "check-axioms": _cmd_check_axioms,
    "eval": _cmd_eval,
    "witnesses": _cmd_witnesses,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if sys.getrecursionlimit() < 20_000:
        sys.setrecursionlimit(20_000)
    try:
        return _COMMANDS[args.command](args)
    except BudgetError as exc:
        print(f"condalg: {exc}", file=sys.stderr)
        return 3
    except (UsageError, CondAlgError, ValueError) as exc:
        print(f"condalg: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
