"""Display rounding and output rendering, shared by the CLI and the service.

The engine computes in full float precision. Whatever surface shows a number
to a human rounds it here, identically everywhere: currency to 2 decimals,
unit costs to 3, rates to 4 as fractions (or 1 decimal as percent in prose
renderings). Machine formats always use "." as the decimal separator.
"""

from __future__ import annotations

from decimal import ROUND_HALF_UP, Decimal

from .core import ConstraintStep, PushEvaluation, Recommendation
from .eoq import EoqComparison
from .golden import GoldenFixture
from .scenarios import ValidationIssue
from .sweeps import Axis, SweepTable


def round_half_away(value: float, places: int) -> float:
    """Round with ties going away from zero, as cost sheets do. Python's
    round() breaks ties to even and would turn 0.0735 into 0.073."""
    quantum = Decimal(1).scaleb(-places)
    result = float(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))
    return 0.0 if result == 0 else result  # avoid the "-0.00" rendering


def fmt_currency(value: float) -> str:
    return f"{round_half_away(value, 2):.2f}"


def fmt_unit_cost(value: float) -> str:
    return f"{round_half_away(value, 3):.3f}"


def fmt_fraction(value: float) -> str:
    return f"{round_half_away(value, 4):.4f}"


def fmt_percent(value: float, places: int = 1) -> str:
    return f"{round_half_away(value * 100.0, places):.{places}f}%"


def fmt_axis_value(axis: Axis, value: float) -> str:
    if axis is Axis.SALE_PROBABILITY:
        return fmt_fraction(value)
    if axis is Axis.EXTRA_QTY:
        return str(int(value))
    v = float(value)
    return str(int(v)) if v.is_integer() else repr(v)


# ---------------------------------------------------------------------------
# JSON document builders. The CLI's json output and the HTTP responses are
# built from these same functions, which is what makes them provably equal.

def evaluation_document(ev: PushEvaluation) -> dict:
    return {
        "extra_qty": ev.extra_qty,
        "period_rate": ev.period_rate,
        "pull_unit_cost": ev.pull_unit_cost,
        "push_unit_cost": ev.push_unit_cost,
        "holding_cost_total": ev.holding_cost_total,
        "stocking_rate_threshold": ev.stocking_rate_threshold,
        "result_if_sold_certain": ev.result_if_sold_certain,
        "expected_result_if_sold": ev.expected_result_if_sold,
        "expected_loss_if_unsold": ev.expected_loss_if_unsold,
        "expected_gain": ev.expected_gain,
        "break_even_probability": ev.break_even_probability,
    }


def _trail_document(trail: tuple[ConstraintStep, ...]) -> list[dict]:
    return [{"constraint": s.constraint, "before": s.before, "after": s.after} for s in trail]


def recommendation_document(rec: Recommendation) -> dict:
    return {
        "strategy": rec.strategy.value,
        "recommended_extra_qty": rec.recommended_extra_qty,
        "capacity_cap": rec.capacity_cap,
        "lot_rounded_qty": rec.lot_rounded_qty,
        "economic_ok": rec.economic_ok,
        "gain_at_recommendation": rec.gain_at_recommendation,
        "constraint_trail": _trail_document(rec.constraint_trail),
        "evaluation": evaluation_document(rec.evaluation),
    }


def issue_document(issue: ValidationIssue) -> dict:
    return {
        "code": issue.code,
        "message": issue.message,
        "field": issue.field,
        "severity": issue.severity,
    }


def decision_document(
    scenario_name: str, rec: Recommendation, issues: list[ValidationIssue]
) -> dict:
    return {
        "scenario_name": scenario_name,
        "recommendation": recommendation_document(rec),
        "warnings": [issue_document(i) for i in issues if i.severity == "advisory"],
    }


def sweep_document(table: SweepTable) -> dict:
    return {
        "scenario_name": table.scenario_name,
        "axis": table.axis.value,
        "rows": [
            {"axis_value": value, "evaluation": evaluation_document(ev)}
            for value, ev in table.rows
        ],
    }


def eoq_document(cmp: EoqComparison) -> dict:
    return {
        "eoq_qty": cmp.eoq_qty,
        "eoq_unit_cost": cmp.eoq_unit_cost,
        "model_recommended_qty": cmp.model_recommended_qty,
        "delta_expected_gain": cmp.delta_expected_gain,
    }


# ---------------------------------------------------------------------------
# CSV

SWEEP_CSV_COLUMNS = (
    "axis_value",
    "pull_unit_cost",
    "push_unit_cost",
    "holding_cost",
    "threshold",
    "r_if_sold",
    "r_prime",
    "pr",
    "gain",
    "break_even_p",
)


def sweep_csv_row(axis: Axis, value: float, ev: PushEvaluation) -> str:
    return ",".join(
        (
            fmt_axis_value(axis, value),
            fmt_unit_cost(ev.pull_unit_cost),
            fmt_unit_cost(ev.push_unit_cost),
            fmt_currency(ev.holding_cost_total),
            fmt_fraction(ev.stocking_rate_threshold),
            fmt_currency(ev.result_if_sold_certain),
            fmt_currency(ev.expected_result_if_sold),
            fmt_currency(ev.expected_loss_if_unsold),
            fmt_currency(ev.expected_gain),
            fmt_fraction(ev.break_even_probability),
        )
    )


def sweep_csv(table: SweepTable) -> str:
    lines = [",".join(SWEEP_CSV_COLUMNS)]
    lines.extend(sweep_csv_row(table.axis, value, ev) for value, ev in table.rows)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Human renderings

_TRAIL_LABELS = {"capacity": "capacity", "lot_multiple": "lot", "nonpositive_gain": "gain<=0"}


def render_trail(requested: int, trail: tuple[ConstraintStep, ...]) -> str:
    if not trail:
        return f"requested {requested} (no constraint applied)"
    parts = [f"requested {requested}"]
    for step in trail:
        parts.append(f"{_TRAIL_LABELS.get(step.constraint, step.constraint)} {step.after}")
    return " -> ".join(parts)


def render_evaluation_lines(ev: PushEvaluation) -> list[str]:
    return [
        f"  extra quantity evaluated:  {ev.extra_qty}",
        f"  period holding rate:       {fmt_percent(ev.period_rate)}",
        f"  pull unit cost:            {fmt_unit_cost(ev.pull_unit_cost)}",
        f"  push unit cost:            {fmt_unit_cost(ev.push_unit_cost)}",
        f"  holding cost:              {fmt_currency(ev.holding_cost_total)}",
        f"  stocking rate threshold:   {fmt_percent(ev.stocking_rate_threshold)}",
        f"  result if sold (certain):  {fmt_currency(ev.result_if_sold_certain)}",
        f"  expected result if sold:   {fmt_currency(ev.expected_result_if_sold)}",
        f"  expected loss if unsold:   {fmt_currency(ev.expected_loss_if_unsold)}",
        f"  expected gain:             {fmt_currency(ev.expected_gain)}",
        f"  break-even probability:    {fmt_percent(ev.break_even_probability, 2)}",
    ]


def render_recommendation(
    scenario_name: str,
    requested: int,
    rec: Recommendation,
    issues: list[ValidationIssue],
) -> str:
    lines = [
        f"scenario: {scenario_name}",
        f"strategy: {rec.strategy.value}",
        f"extra: {rec.recommended_extra_qty}",
        f"capacity cap: {rec.capacity_cap} (lot-rounded {rec.lot_rounded_qty})",
        f"economic rate check: {'ok' if rec.economic_ok else 'not ok'}",
        f"gain: {fmt_currency(rec.gain_at_recommendation)}",
        f"trail: {render_trail(requested, rec.constraint_trail)}",
        "evaluation:",
    ]
    lines.extend(render_evaluation_lines(rec.evaluation))
    for issue in issues:
        if issue.severity == "advisory":
            lines.append(f"advisory: {issue.field}: {issue.message}")
    return "\n".join(lines) + "\n"


def render_sweep_table(table: SweepTable) -> str:
    headers = ("axis", "pull", "push", "hold", "thresh", "r_sold", "r_prime", "pr", "gain", "p_star")
    rows = [
        (
            fmt_axis_value(table.axis, value),
            fmt_unit_cost(ev.pull_unit_cost),
            fmt_unit_cost(ev.push_unit_cost),
            fmt_currency(ev.holding_cost_total),
            fmt_percent(ev.stocking_rate_threshold),
            fmt_currency(ev.result_if_sold_certain),
            fmt_currency(ev.expected_result_if_sold),
            fmt_currency(ev.expected_loss_if_unsold),
            fmt_currency(ev.expected_gain),
            fmt_percent(ev.break_even_probability, 2),
        )
        for value, ev in table.rows
    ]
    widths = [
        max(len(headers[i]), max((len(r[i]) for r in rows), default=0))
        for i in range(len(headers))
    ]
    out = [f"sweep of {table.scenario_name} over {table.axis.value}"]
    out.append("  ".join(h.rjust(w) for h, w in zip(headers, widths)))
    for r in rows:
        out.append("  ".join(c.rjust(w) for c, w in zip(r, widths)))
    return "\n".join(out) + "\n"


def render_golden_report(fixtures: list[GoldenFixture]) -> str:
    lines = []
    total_errata = 0
    for fx in fixtures:
        matched = sum(1 for c in fx.cells if c.matches)
        errata = fx.errata
        total_errata += len(errata)
        lines.append(
            f"piece {fx.piece_id}: {len(fx.cells)} cells, {matched} match, "
            f"{len(errata)} errata"
        )
        for cell in fx.cells:
            if cell.documented_erratum:
                where = "" if cell.probability is None else f" at P={fmt_percent(cell.probability, 0)}"
                lines.append(
                    f"  erratum {cell.label}{where}: sheet prints {cell.printed}, "
                    f"computed {round_half_away(cell.computed, 4)}"
                )
            elif not cell.matches:
                where = "" if cell.probability is None else f" at P={fmt_percent(cell.probability, 0)}"
                lines.append(
                    f"  MISMATCH {cell.label}{where}: expected {cell.printed}, "
                    f"computed {round_half_away(cell.computed, 4)}"
                )
    ok = all(fx.ok for fx in fixtures)
    lines.append(f"total errata: {total_errata}")
    lines.append("golden check: " + ("ok" if ok else "FAILED"))
    return "\n".join(lines) + "\n"


def render_eoq(cmp: EoqComparison, implied_extra: int) -> str:
    return "\n".join(
        [
            f"eoq lot size: {cmp.eoq_qty}",
            f"implied extra beyond order: {implied_extra}",
            f"unit cost at eoq lot: {fmt_unit_cost(cmp.eoq_unit_cost)}",
            f"model recommended extra: {cmp.model_recommended_qty}",
            f"expected-gain advantage of model vs eoq: {fmt_currency(cmp.delta_expected_gain)}",
        ]
    ) + "\n"
