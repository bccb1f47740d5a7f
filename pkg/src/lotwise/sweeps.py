"""Parameter sweeps: evaluate one scenario across a grid of axis values.

A sweep holds every other parameter fixed and substitutes one axis value at a
time, producing the familiar what-if table (gain versus sale probability, for
instance). Sweeps never apply capacity or lot constraints; they show the
economics of the requested speculative quantity as-is. Constrained answers
come from the recommendation path.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from enum import Enum

from .core import DomainError, PushEvaluation, Recommendation, evaluate_push, recommend
from .scenarios import Scenario


class Axis(str, Enum):
    SALE_PROBABILITY = "sale_probability"
    EXTRA_QTY = "extra_qty"
    STORAGE_DAYS = "storage_days"


@dataclass(frozen=True)
class SweepSpec:
    axis: Axis
    values: tuple[float, ...]


@dataclass(frozen=True)
class SweepTable:
    scenario_name: str
    axis: Axis
    rows: tuple[tuple[float, PushEvaluation], ...]


def evaluate_scenario(s: Scenario) -> PushEvaluation:
    """Evaluate the scenario's own target extra quantity, unconstrained."""
    return evaluate_push(s.piece, s.order, s.holding, s.forecast)


def recommend_scenario(s: Scenario) -> Recommendation:
    return recommend(s.piece, s.order, s.holding, s.forecast, s.capacity)


def _check_spec(spec: SweepSpec) -> None:
    if not isinstance(spec.axis, Axis):
        valid = ", ".join(a.value for a in Axis)
        raise DomainError(f"unknown sweep axis (valid: {valid})")
    if not spec.values:
        raise DomainError("sweep needs at least one axis value")
    for prev, cur in zip(spec.values, spec.values[1:]):
        if cur <= prev:
            raise DomainError("sweep values must be strictly increasing")
    for v in spec.values:
        if spec.axis is Axis.SALE_PROBABILITY and not 0 <= v <= 1:
            raise DomainError(f"sale probability out of [0, 1]: {v}")
        elif spec.axis is Axis.EXTRA_QTY and (v < 0 or float(v) != int(v)):
            raise DomainError(f"extra quantity must be an integer >= 0: {v}")
        elif spec.axis is Axis.STORAGE_DAYS and v <= 0:
            raise DomainError(f"storage days must be > 0: {v}")


def _substitute(s: Scenario, axis: Axis, value: float) -> Scenario:
    if axis is Axis.SALE_PROBABILITY:
        return replace(s, forecast=replace(s.forecast, sale_probability=value))
    if axis is Axis.EXTRA_QTY:
        return replace(s, forecast=replace(s.forecast, target_extra_qty=int(value)))
    return replace(s, holding=replace(s.holding, storage_days=value))


def run_sweep(s: Scenario, spec: SweepSpec) -> SweepTable:
    """One full evaluation per axis value, in the order given."""
    _check_spec(spec)
    rows = []
    for value in spec.values:
        try:
            rows.append((value, evaluate_scenario(_substitute(s, spec.axis, value))))
        except DomainError as exc:
            raise DomainError(f"{exc} (at {spec.axis.value} = {value})") from exc
    table = SweepTable(scenario_name=s.name, axis=spec.axis, rows=tuple(rows))
    _check_gain_monotonic(s, table)
    return table


def _check_gain_monotonic(s: Scenario, table: SweepTable) -> None:
    # Expected gain is affine in the sale probability with slope
    # setup_cost + unit_cost * extra_qty, so along that axis it must never
    # decrease, and must strictly increase whenever the slope is positive.
    # A violation means the arithmetic itself went wrong.
    if table.axis is not Axis.SALE_PROBABILITY:
        return
    slope = s.piece.setup_cost + s.piece.unit_cost_excl_setup * s.forecast.target_extra_qty
    gains = [ev.expected_gain for _, ev in table.rows]
    for prev, cur in zip(gains, gains[1:]):
        if cur < prev or (slope > 0 and cur <= prev):
            raise RuntimeError("sweep self-check failed: gain not monotonic in sale probability")
