"""Command-line frontend.

Exit codes: 0 success, 1 input error (unreadable file, bad argument, undefined
computation), 2 scenario validation failure. Formats and axes are checked in
the handlers rather than through argparse choices so that every input problem
lands on exit code 1 with a helpful message.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .core import DomainError
from .eoq import compare_to_eoq
from .formatting import (
    SWEEP_CSV_COLUMNS,
    decision_document,
    fmt_percent,
    render_eoq,
    render_golden_report,
    render_recommendation,
    render_sweep_table,
    sweep_csv,
    sweep_csv_row,
    sweep_document,
)
from .golden import golden_fixture
from .scenarios import (
    Scenario,
    ScenarioFormatError,
    ValidationIssue,
    has_errors,
    load_scenario_file,
    validate_scenario,
)
from .sweeps import Axis, SweepSpec, evaluate_scenario, recommend_scenario, run_sweep

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_VALIDATION_FAILURE = 2

_AXES = {"p": Axis.SALE_PROBABILITY, "x": Axis.EXTRA_QTY, "days": Axis.STORAGE_DAYS}
_FORMATS = ("table", "csv", "json")


class InputError(Exception):
    pass


def _load(path: str) -> Scenario:
    try:
        return load_scenario_file(path)
    except ScenarioFormatError as exc:
        raise InputError(str(exc)) from exc


def _check_format(fmt: str) -> str:
    if fmt not in _FORMATS:
        raise InputError(f"unknown format {fmt!r} (valid: {', '.join(_FORMATS)})")
    return fmt


def _report_validation(issues: list[ValidationIssue]) -> int:
    for issue in issues:
        if issue.severity == "error":
            print(f"invalid scenario: {issue.field}: {issue.message}", file=sys.stderr)
    return EXIT_VALIDATION_FAILURE


def cmd_evaluate(args: argparse.Namespace) -> int:
    fmt = _check_format(args.format)
    scenario = _load(args.file)
    issues = validate_scenario(scenario)
    if has_errors(issues):
        return _report_validation(issues)
    try:
        rec = recommend_scenario(scenario)
    except DomainError as exc:
        raise InputError(str(exc)) from exc

    if fmt == "json":
        print(json.dumps(decision_document(scenario.name, rec, issues), indent=2))
    elif fmt == "csv":
        print("strategy,recommended_extra_qty," + ",".join(SWEEP_CSV_COLUMNS))
        print(
            f"{rec.strategy.value},{rec.recommended_extra_qty},"
            + sweep_csv_row(Axis.EXTRA_QTY, rec.evaluation.extra_qty, rec.evaluation)
        )
    else:
        print(
            render_recommendation(
                scenario.name, scenario.forecast.target_extra_qty, rec, issues
            ),
            end="",
        )
    return EXIT_OK


def _parse_values(text: str, axis: Axis) -> list[float]:
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(float(token))
        except ValueError:
            raise InputError(f"not a number: {token!r}") from None
    if not values:
        raise InputError("no sweep values given")
    return values


def _parse_range(text: str) -> list[float]:
    body, sep, step_text = text.partition(":")
    start_text, dots, end_text = body.partition("..")
    if not sep or not dots:
        raise InputError("range must look like start..end:step, e.g. 0.1..1.0:0.1")
    try:
        start, end, step = float(start_text), float(end_text), float(step_text)
    except ValueError:
        raise InputError(f"bad range {text!r}") from None
    if step <= 0:
        raise InputError("range step must be positive")
    if end < start:
        raise InputError("range end must not be below start")
    count = int(math.floor((end - start) / step + 1e-9))
    # Rebuild each point from the start to avoid drift from repeated addition.
    return [round(start + k * step, 12) for k in range(count + 1)]


def cmd_sweep(args: argparse.Namespace) -> int:
    fmt = _check_format(args.format)
    axis = _AXES.get(args.axis)
    if axis is None:
        raise InputError(f"unknown axis {args.axis!r} (valid: {', '.join(_AXES)})")
    if (args.values is None) == (args.range is None):
        raise InputError("give exactly one of --values or --range")
    values = _parse_values(args.values, axis) if args.values else _parse_range(args.range)

    scenario = _load(args.file)
    issues = validate_scenario(scenario)
    if has_errors(issues):
        return _report_validation(issues)
    try:
        table = run_sweep(scenario, SweepSpec(axis=axis, values=tuple(values)))
    except DomainError as exc:
        raise InputError(str(exc)) from exc

    if fmt == "json":
        print(json.dumps(sweep_document(table), indent=2))
    elif fmt == "csv":
        print(sweep_csv(table), end="")
    else:
        print(render_sweep_table(table), end="")
    return EXIT_OK


def cmd_breakeven(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    issues = validate_scenario(scenario)
    if has_errors(issues):
        return _report_validation(issues)
    try:
        ev = evaluate_scenario(scenario)
    except DomainError as exc:
        raise InputError(str(exc)) from exc
    p_star = fmt_percent(ev.break_even_probability, 2)
    print(f"break-even sale probability: {p_star}")
    print(f"push profitable for P >= {p_star}")
    return EXIT_OK


def cmd_eoq(args: argparse.Namespace) -> int:
    scenario = _load(args.file)
    issues = validate_scenario(scenario)
    if has_errors(issues):
        return _report_validation(issues)
    try:
        comparison = compare_to_eoq(scenario)
    except DomainError as exc:
        raise InputError(str(exc)) from exc
    implied = max(comparison.eoq_qty - scenario.order.ordered_qty, 0)
    print(render_eoq(comparison, implied), end="")
    return EXIT_OK


def cmd_golden(args: argparse.Namespace) -> int:
    fixtures = [golden_fixture("a"), golden_fixture("b")]
    print(render_golden_report(fixtures), end="")
    return EXIT_OK if all(fx.ok for fx in fixtures) else EXIT_INPUT_ERROR


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    store_dir = args.store or os.environ.get("LOTWISE_STORE") or "./scenarios"
    if args.ui is not None and not os.path.isdir(args.ui):
        raise InputError(f"ui directory not found: {args.ui}")
    app = create_app(store_dir, ui_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lotwise",
        description="Decide whether to produce extra pieces for stock (push) or exactly the order (pull).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("evaluate", help="evaluate one scenario file and recommend pull or push")
    p_eval.add_argument("file")
    p_eval.add_argument("--format", default="table")
    p_eval.set_defaults(handler=cmd_evaluate)

    p_sweep = sub.add_parser("sweep", help="evaluate a scenario across a grid of axis values")
    p_sweep.add_argument("file")
    p_sweep.add_argument("--axis", required=True, help="p, x, or days")
    p_sweep.add_argument("--values", help="comma-separated axis values")
    p_sweep.add_argument("--range", help="start..end:step")
    p_sweep.add_argument("--format", default="table")
    p_sweep.set_defaults(handler=cmd_sweep)

    p_be = sub.add_parser("breakeven", help="print the break-even sale probability")
    p_be.add_argument("file")
    p_be.set_defaults(handler=cmd_breakeven)

    p_eoq = sub.add_parser("eoq", help="compare the recommendation against the square-root lot size")
    p_eoq.add_argument("file")
    p_eoq.set_defaults(handler=cmd_eoq)

    p_golden = sub.add_parser("golden", help="recompute the built-in reference sheets and diff them")
    p_golden.set_defaults(handler=cmd_golden)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=8080)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--store", default=None, help="scenario store directory (default: $LOTWISE_STORE or ./scenarios)")
    p_serve.add_argument("--ui", default=None, help="directory of static UI assets to host at /")
    p_serve.set_defaults(handler=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def entrypoint() -> None:
    sys.exit(main())
