"""Command-line frontend: evaluate, sweep, compare, validate, elicit.

Exit codes: 0 on success, 2 for input problems (unreadable files, parse
or validation failures, bad arguments), 3 for computation problems
(unknown factors, out-of-range values under the error policy, degenerate
elicitations). Output formatting is deterministic: text-mode beliefs are
printed with 9 decimal places, JSON mode carries full precision. Set
``EDE_NO_COLOR`` to disable the little styling there is.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .aggregation import evaluate_pipeline, sweep_factor
from .calculi import compare_calculi
from .core import EvaluationOptions, OutOfRangePolicy
from .errors import DocumentError, EvaluationError, KbInvalidError
from .kbio import (
    kb_document_to_obj,
    parse_evidence,
    parse_kb_document,
    sweep_row_to_obj,
    trace_to_obj,
    write_sweep,
)
from .roles import elicit_adv, elicit_contr, elicit_nec, elicit_supp
from .tnorms import tnorm_from_name

TNORM_CHOICES = ("product", "min", "lukasiewicz", "hamacher")


def _styled(text: str, code: str, stream) -> str:
    if os.environ.get("EDE_NO_COLOR") or not (hasattr(stream, "isatty") and stream.isatty()):
        return text
    return f"\x1b[{code}m{text}\x1b[0m"


def _fail(message: str) -> None:
    prefix = _styled("error:", "31", sys.stderr)
    print(f"{prefix} {message}", file=sys.stderr)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _resolve_options(doc_options: EvaluationOptions | None, args) -> EvaluationOptions:
    """Command-line flags override KB-embedded defaults."""
    base = doc_options if doc_options is not None else EvaluationOptions()
    tnorm = base.tnorm
    if args.tnorm is not None:
        tnorm = tnorm_from_name(args.tnorm, args.lam)
    elif args.lam is not None:
        raise DocumentError("--lambda requires --tnorm hamacher")
    policy = OutOfRangePolicy.CLAMP if args.clamp else base.out_of_range_policy
    return EvaluationOptions(tnorm, policy)


def _load_inputs(args):
    doc = parse_kb_document(_read(args.kb))
    evidence = parse_evidence(_read(args.evidence), doc.kb)
    return doc.kb, evidence, _resolve_options(doc.options, args)


def _cmd_evaluate(args) -> int:
    kb, evidence, opts = _load_inputs(args)
    belief, trace = evaluate_pipeline(kb, evidence, opts)
    if args.format == "json":
        doc = {"belief": belief, "trace": trace_to_obj(trace)["stages"]}
        print(json.dumps(doc, indent=2, allow_nan=False))
        return 0
    if args.trace:
        for stage in trace.stages:
            print(f"{stage.stage}: {stage.belief_before:.9f} -> {stage.belief_after:.9f}")
    print(f"{belief:.9f}")
    return 0


def _cmd_sweep(args) -> int:
    kb, evidence, opts = _load_inputs(args)
    rows = sweep_factor(kb, evidence, args.factor, args.steps, opts)
    if args.format == "json":
        print(json.dumps({"rows": [sweep_row_to_obj(r) for r in rows]}, allow_nan=False))
    else:
        sys.stdout.write(write_sweep(rows))
    return 0


def _cmd_compare(args) -> int:
    kb, evidence, opts = _load_inputs(args)
    rows = compare_calculi(kb, evidence, opts)
    if args.format == "json":
        print(json.dumps({"rows": [{"calculus": r.calculus, "value": r.value} for r in rows]},
                         allow_nan=False))
    elif args.format == "csv":
        print("calculus,value")
        for r in rows:
            print(f"{r.calculus},{r.value:.9f}")
    else:
        for r in rows:
            print(f"{r.calculus:<16} {r.value:.9f}")
    return 0


def _cmd_validate(args) -> int:
    doc = parse_kb_document(_read(args.kb))
    if args.evidence is not None:
        parse_evidence(_read(args.evidence), doc.kb)
    if args.verbose:
        print(json.dumps(kb_document_to_obj(doc), indent=2, allow_nan=False))
    return 0


def _unit_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"must be in [0, 1], got {text}")
    return value


def _cmd_elicit(args) -> int:
    two_arg = {"supp": elicit_supp, "adv": elicit_adv}
    one_arg = {"nec": elicit_nec, "contr": elicit_contr}
    expected = 2 if args.kind in two_arg else 1
    if len(args.values) != expected:
        raise DocumentError(
            f"elicit {args.kind} takes {expected} value(s), got {len(args.values)}"
        )
    if args.kind in two_arg:
        result = two_arg[args.kind](args.values[0], args.values[1])
    else:
        result = one_arg[args.kind](args.values[0])
    print(f"{result:.9f}")
    return 0


def _add_common_flags(p: argparse.ArgumentParser):
    p.add_argument("--tnorm", choices=TNORM_CHOICES, default=None,
                   help="t-norm for support/adversity aggregation (overrides KB default)")
    p.add_argument("--lambda", dest="lam", type=_unit_arg, default=None, metavar="L",
                   help="Hamacher correlation parameter in [0, 1]")
    p.add_argument("--clamp", action="store_true",
                   help="clamp out-of-range observed values to the nearer margin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ede",
        description="Evidential decision engine: staged belief evaluation over role-typed factors.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("evaluate", help="evaluate a knowledge base against evidence")
    p_eval.add_argument("kb", help="path to a *.kb.json document")
    p_eval.add_argument("evidence", help="path to a *.ev.json document")
    p_eval.add_argument("--trace", action="store_true", help="print the per-stage trace")
    p_eval.add_argument("--format", choices=("text", "json"), default="text")
    _add_common_flags(p_eval)
    p_eval.set_defaults(func=_cmd_evaluate)

    p_sweep = sub.add_parser("sweep", help="vary one factor's strength and tabulate beliefs")
    p_sweep.add_argument("kb")
    p_sweep.add_argument("evidence")
    p_sweep.add_argument("--factor", required=True, help="id of the factor to sweep")
    p_sweep.add_argument("--steps", type=int, default=11,
                         help="number of evenly spaced strengths from 0 to 1 (default 11)")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    _add_common_flags(p_sweep)
    p_sweep.set_defaults(func=_cmd_sweep)

    p_cmp = sub.add_parser("compare", help="score the evidence under five calculi")
    p_cmp.add_argument("kb")
    p_cmp.add_argument("evidence")
    p_cmp.add_argument("--format", choices=("text", "json", "csv"), default="text")
    _add_common_flags(p_cmp)
    p_cmp.set_defaults(func=_cmd_compare)

    p_val = sub.add_parser("validate", help="check documents and exit 0 if they are valid")
    p_val.add_argument("kb")
    p_val.add_argument("evidence", nargs="?", default=None,
                       help="optional evidence document to check against the KB")
    p_val.add_argument("--verbose", action="store_true", help="echo the canonical form")
    p_val.set_defaults(func=_cmd_validate)

    p_el = sub.add_parser("elicit", help="derive an intensity from solicited beliefs")
    p_el.add_argument("kind", choices=("supp", "adv", "nec", "contr"))
    p_el.add_argument("values", nargs="+", type=_unit_arg, metavar="VALUE",
                      help="prior posterior (supp/adv) or the margin belief (nec/contr)")
    p_el.set_defaults(func=_cmd_elicit)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DocumentError, KbInvalidError) as e:
        _fail(str(e))
        return 2
    except EvaluationError as e:
        _fail(str(e))
        return 3
    except OSError as e:
        _fail(str(e))
        return 2
    except ValueError as e:
        _fail(str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
