"""Scenario definition, strict JSON parsing, and validation.

One Scenario bundles everything the decision needs for a single order. The
same document schema is used everywhere: scenario files on disk, HTTP request
bodies, and the persisted store, so there is exactly one parser and one
serializer for all of them.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path

from .core import (
    CapacityWindow,
    HoldingPolicy,
    OrderContext,
    PieceProfile,
    SaleForecast,
)

# Industry consensus band for annual holding rates; rates outside it are
# legal but suspicious, so validation attaches a non-fatal advisory.
INDUSTRY_RATE_LOW = 0.15
INDUSTRY_RATE_HIGH = 0.35

SEVERITY_ERROR = "error"
SEVERITY_ADVISORY = "advisory"


class ScenarioFormatError(ValueError):
    """A scenario document does not follow the schema. ``field`` carries the
    dotted path of the offending key when one can be named."""

    def __init__(self, message: str, field: str | None = None):
        super().__init__(message)
        self.field = field


@dataclass(frozen=True)
class Scenario:
    """One decision instance: a piece, an order, and the surrounding policy."""

    name: str
    piece: PieceProfile
    order: OrderContext
    holding: HoldingPolicy
    forecast: SaleForecast
    capacity: CapacityWindow
    annual_demand: float | None = None


@dataclass(frozen=True)
class ValidationIssue:
    code: str
    message: str
    field: str
    severity: str


_TOP_KEYS = {"name", "piece", "order", "holding", "forecast", "capacity", "annual_demand"}
_PIECE_KEYS = {"id", "setup_cost", "unit_cost", "cycle_time_min", "lot_multiple"}
_ORDER_KEYS = {"ordered_qty"}
_HOLDING_KEYS = {"annual_rate", "storage_days"}
_FORECAST_KEYS = {"sale_probability", "target_extra_qty"}
_CAPACITY_KEYS = {"available_min"}


def _reject_unknown(section: dict, allowed: set[str], prefix: str) -> None:
    for key in sorted(section):
        if key not in allowed:
            path = f"{prefix}.{key}" if prefix else key
            raise ScenarioFormatError(f"unknown key: {path}", field=path)


def _section(doc: dict, key: str) -> dict:
    if key not in doc:
        raise ScenarioFormatError(f"missing required field: {key}", field=key)
    value = doc[key]
    if not isinstance(value, dict):
        raise ScenarioFormatError(f"{key} must be an object", field=key)
    return value


def _text(section: dict, key: str, prefix: str) -> str:
    path = f"{prefix}.{key}" if prefix else key
    if key not in section:
        raise ScenarioFormatError(f"missing required field: {path}", field=path)
    value = section[key]
    if not isinstance(value, str):
        raise ScenarioFormatError(f"{path} must be text", field=path)
    return value


def _number(section: dict, key: str, prefix: str, default: float | None = None) -> float:
    path = f"{prefix}.{key}" if prefix else key
    if key not in section:
        if default is not None:
            return default
        raise ScenarioFormatError(f"missing required field: {path}", field=path)
    value = section[key]
    # bool is an int subclass; keep true/false out of numeric fields.
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioFormatError(f"{path} must be a number", field=path)
    result = float(value)
    if not math.isfinite(result):
        raise ScenarioFormatError(f"{path} must be finite", field=path)
    return result


def _integer(section: dict, key: str, prefix: str, default: int | None = None) -> int:
    path = f"{prefix}.{key}" if prefix else key
    if key not in section:
        if default is not None:
            return default
        raise ScenarioFormatError(f"missing required field: {path}", field=path)
    value = section[key]
    if isinstance(value, bool):
        raise ScenarioFormatError(f"{path} must be an integer", field=path)
    if isinstance(value, float):
        if not value.is_integer():
            raise ScenarioFormatError(f"{path} must be an integer", field=path)
        value = int(value)
    if not isinstance(value, int):
        raise ScenarioFormatError(f"{path} must be an integer", field=path)
    return value


def parse_scenario(doc: object) -> Scenario:
    """Parse one scenario document, strictly.

    Unknown keys are rejected by name rather than ignored: a typoed optional
    key that silently falls back to a default would change the decision
    without any visible sign.
    """
    if not isinstance(doc, dict):
        raise ScenarioFormatError("scenario document must be an object")
    _reject_unknown(doc, _TOP_KEYS, "")

    name = _text(doc, "name", "")
    piece_doc = _section(doc, "piece")
    _reject_unknown(piece_doc, _PIECE_KEYS, "piece")
    order_doc = _section(doc, "order")
    _reject_unknown(order_doc, _ORDER_KEYS, "order")
    holding_doc = _section(doc, "holding")
    _reject_unknown(holding_doc, _HOLDING_KEYS, "holding")
    forecast_doc = _section(doc, "forecast")
    _reject_unknown(forecast_doc, _FORECAST_KEYS, "forecast")
    capacity_doc = _section(doc, "capacity")
    _reject_unknown(capacity_doc, _CAPACITY_KEYS, "capacity")

    annual_demand: float | None = None
    if "annual_demand" in doc:
        annual_demand = _number(doc, "annual_demand", "")

    return Scenario(
        name=name,
        piece=PieceProfile(
            id=_text(piece_doc, "id", "piece"),
            setup_cost=_number(piece_doc, "setup_cost", "piece"),
            unit_cost_excl_setup=_number(piece_doc, "unit_cost", "piece"),
            cycle_time_min=_number(piece_doc, "cycle_time_min", "piece"),
            lot_multiple=_integer(piece_doc, "lot_multiple", "piece", default=1),
        ),
        order=OrderContext(ordered_qty=_integer(order_doc, "ordered_qty", "order")),
        holding=HoldingPolicy(
            annual_rate=_number(holding_doc, "annual_rate", "holding"),
            storage_days=_number(holding_doc, "storage_days", "holding"),
        ),
        forecast=SaleForecast(
            sale_probability=_number(forecast_doc, "sale_probability", "forecast"),
            target_extra_qty=_integer(forecast_doc, "target_extra_qty", "forecast"),
        ),
        capacity=CapacityWindow(available_min=_number(capacity_doc, "available_min", "capacity")),
        annual_demand=annual_demand,
    )


def scenario_to_document(s: Scenario) -> dict:
    """Serialize back to the external schema. Round-trips with parse_scenario."""
    doc: dict = {
        "name": s.name,
        "piece": {
            "id": s.piece.id,
            "setup_cost": s.piece.setup_cost,
            "unit_cost": s.piece.unit_cost_excl_setup,
            "cycle_time_min": s.piece.cycle_time_min,
            "lot_multiple": s.piece.lot_multiple,
        },
        "order": {"ordered_qty": s.order.ordered_qty},
        "holding": {
            "annual_rate": s.holding.annual_rate,
            "storage_days": s.holding.storage_days,
        },
        "forecast": {
            "sale_probability": s.forecast.sale_probability,
            "target_extra_qty": s.forecast.target_extra_qty,
        },
        "capacity": {"available_min": s.capacity.available_min},
    }
    if s.annual_demand is not None:
        doc["annual_demand"] = s.annual_demand
    return doc


def load_scenario_file(path: str | Path) -> Scenario:
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioFormatError(f"cannot read scenario file: {exc}") from exc
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ScenarioFormatError(f"parse error: {exc}") from exc
    return parse_scenario(doc)


def _issue(code: str, message: str, field: str, severity: str = SEVERITY_ERROR) -> ValidationIssue:
    return ValidationIssue(code=code, message=message, field=field, severity=severity)


def validate_scenario(s: Scenario) -> list[ValidationIssue]:
    """Check every domain invariant. Returns all findings, never raises.

    A scenario is usable when no issue has severity "error"; advisories are
    informational and must not block evaluation.
    """
    issues: list[ValidationIssue] = []

    if not s.name:
        issues.append(_issue("empty_name", "scenario name must be non-empty", "name"))
    if not s.piece.id:
        issues.append(_issue("empty_piece_id", "piece id must be non-empty", "piece.id"))
    if s.piece.setup_cost < 0:
        issues.append(_issue("negative_setup_cost", "setup cost must be >= 0", "piece.setup_cost"))
    if s.piece.unit_cost_excl_setup < 0:
        issues.append(_issue("negative_unit_cost", "unit cost must be >= 0", "piece.unit_cost"))
    if s.piece.cycle_time_min <= 0:
        issues.append(_issue("invalid_cycle_time", "invalid cycle time", "piece.cycle_time_min"))
    if not isinstance(s.piece.lot_multiple, int) or s.piece.lot_multiple < 1:
        issues.append(
            _issue("invalid_lot_multiple", "lot multiple must be an integer >= 1", "piece.lot_multiple")
        )

    if not isinstance(s.order.ordered_qty, int) or s.order.ordered_qty < 1:
        issues.append(_issue("empty_order", "empty order", "order.ordered_qty"))

    rate = s.holding.annual_rate
    if not 0 <= rate <= 1:
        issues.append(
            _issue("annual_rate_out_of_range", "annual rate must be within [0, 1]", "holding.annual_rate")
        )
    elif not INDUSTRY_RATE_LOW <= rate <= INDUSTRY_RATE_HIGH:
        side = "below" if rate < INDUSTRY_RATE_LOW else "above"
        issues.append(
            _issue(
                "rate_outside_industry_range",
                f"rate {side} industry range 15-35%",
                "holding.annual_rate",
                severity=SEVERITY_ADVISORY,
            )
        )
    if s.holding.storage_days <= 0:
        issues.append(
            _issue("invalid_storage_days", "storage days must be > 0", "holding.storage_days")
        )

    if not 0 <= s.forecast.sale_probability <= 1:
        issues.append(
            _issue(
                "probability_out_of_range",
                "sale probability must be within [0, 1]",
                "forecast.sale_probability",
            )
        )
    if not isinstance(s.forecast.target_extra_qty, int) or s.forecast.target_extra_qty < 0:
        issues.append(
            _issue(
                "invalid_extra_qty",
                "target extra quantity must be an integer >= 0",
                "forecast.target_extra_qty",
            )
        )

    if s.capacity.available_min < 0:
        issues.append(
            _issue("negative_available_time", "available time must be >= 0", "capacity.available_min")
        )

    if s.annual_demand is not None and s.annual_demand < 0:
        issues.append(
            _issue("negative_annual_demand", "annual demand must be >= 0", "annual_demand")
        )

    return issues


def has_errors(issues: list[ValidationIssue]) -> bool:
    return any(i.severity == SEVERITY_ERROR for i in issues)


def advisories(issues: list[ValidationIssue]) -> list[ValidationIssue]:
    return [i for i in issues if i.severity == SEVERITY_ADVISORY]
