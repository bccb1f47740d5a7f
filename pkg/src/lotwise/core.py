"""Core decision math for pull-vs-push lot sizing.

A make-to-order shop receiving an order for ``ordered_qty`` pieces can either
produce exactly that quantity (pull) or launch ``extra_qty`` speculative pieces
on top of it (push). Producing extra amortizes the changeover cost over more
pieces and, if the stock sells within the storage window, saves the changeover
of a second run, but it ties up capital at the holding rate and risks a full
write-off if the stock never sells. Everything in this module is a pure
function of its inputs; no shared state, no caching.

All money values are computed in full float precision. Rounding for display
happens in the presentation layers only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

# Relative tolerance for calling the unit-cost slope flat: the boundary rate
# is usually supplied as a computed float, so an exact zero test is too brittle.
FLAT_REL_TOL = 1e-9

DAYS_PER_YEAR = 365.0


class DomainError(ValueError):
    """An input is outside the domain where the model is defined."""


class Strategy(str, Enum):
    PULL = "pull"
    PUSH = "push"


class CostSlope(str, Enum):
    DECREASING = "decreasing"
    FLAT = "flat"
    INCREASING = "increasing"


@dataclass(frozen=True)
class PieceProfile:
    """Per-part economics and process data.

    ``setup_cost`` is the fixed changeover cost of one production run,
    independent of quantity. ``unit_cost_excl_setup`` covers material,
    machining and overheads per piece, with the changeover stripped out.
    ``lot_multiple`` is the granularity at which the shop can launch
    production; speculative quantities are floored to it.
    """

    id: str
    setup_cost: float
    unit_cost_excl_setup: float
    cycle_time_min: float
    lot_multiple: int = 1


@dataclass(frozen=True)
class OrderContext:
    """A confirmed customer order. Ordered pieces ship immediately after
    production and never sit in stock, so they carry no holding cost."""

    ordered_qty: int


@dataclass(frozen=True)
class HoldingPolicy:
    """Annual holding rate and the committed storage duration for extras."""

    annual_rate: float
    storage_days: float


@dataclass(frozen=True)
class SaleForecast:
    """Chance that the whole extra lot sells within the storage window.

    The probability is all-or-nothing: either every extra piece sells, or
    none do. Partial sell-through is out of scope.
    """

    sale_probability: float
    target_extra_qty: int


@dataclass(frozen=True)
class CapacityWindow:
    """Free minutes on the bottleneck resource. The bottleneck limits the
    whole flow, so extras may only consume its idle time."""

    available_min: float


@dataclass(frozen=True)
class PushEvaluation:
    """Every model output for one candidate extra quantity."""

    extra_qty: int
    period_rate: float
    pull_unit_cost: float
    push_unit_cost: float
    holding_cost_total: float
    stocking_rate_threshold: float
    result_if_sold_certain: float
    expected_result_if_sold: float
    expected_loss_if_unsold: float
    expected_gain: float
    break_even_probability: float


@dataclass(frozen=True)
class ConstraintStep:
    """One audit entry: ``constraint`` reduced the candidate quantity."""

    constraint: str
    before: int
    after: int


@dataclass(frozen=True)
class Recommendation:
    """Final verdict plus the constraint trail that produced it."""

    strategy: Strategy
    recommended_extra_qty: int
    capacity_cap: int
    lot_rounded_qty: int
    economic_ok: bool
    gain_at_recommendation: float
    constraint_trail: tuple[ConstraintStep, ...]
    evaluation: PushEvaluation


def pull_unit_cost(setup_cost: float, unit_cost: float, ordered_qty: int) -> float:
    """Unit cost when producing exactly the ordered quantity."""
    if ordered_qty < 1:
        raise DomainError("empty order")
    return (setup_cost + unit_cost * ordered_qty) / ordered_qty


def derive_unit_cost(quoted_unit_cost: float, setup_cost: float, ordered_qty: int) -> float:
    """Strip the amortized changeover out of a quoted all-in unit cost.

    Inverse of :func:`pull_unit_cost`; round-trips within 1e-12 relative.
    """
    if ordered_qty < 1:
        raise DomainError("empty order")
    if quoted_unit_cost * ordered_qty < setup_cost:
        raise DomainError("setup cost exceeds quoted total")
    return quoted_unit_cost - setup_cost / ordered_qty


def period_holding_rate(annual_rate: float, storage_days: float) -> float:
    """Prorate an annual holding rate to the storage window, linearly over a
    365-day year."""
    if storage_days <= 0:
        raise DomainError("storage duration must be positive")
    return annual_rate * storage_days / DAYS_PER_YEAR


def holding_cost(unit_cost: float, extra_qty: int, period_rate: float) -> float:
    """Cost of holding the extra pieces for the storage window.

    Only the bare unit cost is tied up: the changeover cost is billed with
    the ordered pieces, so it never sits in stock.
    """
    return (unit_cost * extra_qty) * period_rate


def push_unit_cost(
    setup_cost: float,
    unit_cost: float,
    ordered_qty: int,
    extra_qty: int,
    period_rate: float,
) -> float:
    """Unit cost when the run is stretched to ordered + extra pieces, with
    the holding cost of the extras folded in."""
    if ordered_qty < 1:
        raise DomainError("empty order")
    total = unit_cost * extra_qty * (period_rate + 1.0) + ordered_qty * unit_cost + setup_cost
    return total / (ordered_qty + extra_qty)


def cost_slope_sign(
    setup_cost: float, unit_cost: float, ordered_qty: int, period_rate: float
) -> CostSlope:
    """Direction of the push unit cost as the extra quantity grows.

    The quantity-independent numerator ``period_rate * unit_cost * ordered_qty
    - setup_cost`` fixes the sign: negative means stocking lowers the unit
    cost, positive means it raises it.
    """
    held = period_rate * unit_cost * ordered_qty
    numerator = held - setup_cost
    scale = max(abs(held), abs(setup_cost))
    if abs(numerator) <= FLAT_REL_TOL * scale:
        return CostSlope.FLAT
    return CostSlope.DECREASING if numerator < 0 else CostSlope.INCREASING


def stocking_rate_threshold(setup_cost: float, unit_cost: float, ordered_qty: int) -> float:
    """Highest period holding rate at which producing for stock still does
    not raise the unit cost. Independent of the extra quantity."""
    if unit_cost == 0:
        raise DomainError("threshold undefined for zero unit cost")
    return setup_cost / (ordered_qty * unit_cost)


def result_if_sold_certain(setup_cost: float, holding_cost_total: float) -> float:
    """Financial result when the extra lot surely sells: the saved changeover
    of the follow-up run, minus what holding the stock cost."""
    return setup_cost - holding_cost_total


def expected_result_if_sold(
    setup_cost: float,
    unit_cost: float,
    extra_qty: int,
    period_rate: float,
    sale_probability: float,
) -> float:
    """Sale-case result weighted by the sale probability."""
    return (setup_cost - (unit_cost * extra_qty) * period_rate) * sale_probability


def expected_loss_if_unsold(
    unit_cost: float, extra_qty: int, period_rate: float, sale_probability: float
) -> float:
    """No-sale write-off (production plus holding) weighted by the no-sale
    probability."""
    return (unit_cost * extra_qty * (1.0 + period_rate)) * (1.0 - sale_probability)


def expected_gain(result_if_sold: float, loss_if_unsold: float) -> float:
    """Net expected benefit of producing the extra lot."""
    return result_if_sold - loss_if_unsold


def break_even_probability(
    setup_cost: float, unit_cost: float, extra_qty: int, period_rate: float
) -> float:
    """Sale probability at which the expected gain is exactly zero.

    The gain is affine in the probability, so the root is closed-form.
    Clamped to [0, 1]: a clamp at 1 means the lot cannot pay for itself even
    with a certain sale.
    """
    denominator = setup_cost + unit_cost * extra_qty
    if denominator == 0:
        raise DomainError("gain identically zero")
    raw = unit_cost * extra_qty * (1.0 + period_rate) / denominator
    return min(1.0, max(0.0, raw))


def capacity_cap(available_min: float, cycle_time_min: float) -> int:
    """Largest whole number of extra pieces that fit in the bottleneck's
    free minutes."""
    if cycle_time_min <= 0:
        raise DomainError("invalid cycle time")
    if available_min < 0:
        raise DomainError("negative available time")
    cap = int(math.floor(available_min / cycle_time_min))
    # Correct for float division landing on the wrong side of a whole piece.
    while (cap + 1) * cycle_time_min <= available_min:
        cap += 1
    while cap > 0 and cap * cycle_time_min > available_min:
        cap -= 1
    return cap


def floor_to_multiple(qty: int, multiple: int) -> int:
    """Largest multiple of ``multiple`` that is <= ``qty`` (0 if none)."""
    if multiple < 1:
        raise DomainError("lot multiple must be at least 1")
    if qty < 0:
        return 0
    return (qty // multiple) * multiple


def evaluate_push(
    piece: PieceProfile,
    order: OrderContext,
    holding: HoldingPolicy,
    forecast: SaleForecast,
) -> PushEvaluation:
    """Full evaluation of one candidate extra quantity, unconstrained by
    capacity or lot granularity."""
    rate = period_holding_rate(holding.annual_rate, holding.storage_days)
    extra = forecast.target_extra_qty
    setup = piece.setup_cost
    unit = piece.unit_cost_excl_setup
    held = holding_cost(unit, extra, rate)
    sold = expected_result_if_sold(setup, unit, extra, rate, forecast.sale_probability)
    unsold = expected_loss_if_unsold(unit, extra, rate, forecast.sale_probability)
    return PushEvaluation(
        extra_qty=extra,
        period_rate=rate,
        pull_unit_cost=pull_unit_cost(setup, unit, order.ordered_qty),
        push_unit_cost=push_unit_cost(setup, unit, order.ordered_qty, extra, rate),
        holding_cost_total=held,
        stocking_rate_threshold=stocking_rate_threshold(setup, unit, order.ordered_qty),
        result_if_sold_certain=result_if_sold_certain(setup, held),
        expected_result_if_sold=sold,
        expected_loss_if_unsold=unsold,
        expected_gain=expected_gain(sold, unsold),
        break_even_probability=break_even_probability(setup, unit, extra, rate),
    )


def recommend(
    piece: PieceProfile,
    order: OrderContext,
    holding: HoldingPolicy,
    forecast: SaleForecast,
    capacity: CapacityWindow,
) -> Recommendation:
    """Decide pull or push for one order.

    The requested extra quantity is capped by bottleneck capacity, floored to
    the lot multiple, then evaluated. Push is recommended only when at least
    one whole piece survives the constraints and its expected gain is
    strictly positive; an exactly-zero gain falls back to pull (no reason to
    take on risk for nothing). Each quantity reduction is recorded in the
    constraint trail.
    """
    cap = capacity_cap(capacity.available_min, piece.cycle_time_min)
    requested = forecast.target_extra_qty
    capped = min(requested, cap)
    rounded = floor_to_multiple(capped, piece.lot_multiple)

    trail: list[ConstraintStep] = []
    if capped < requested:
        trail.append(ConstraintStep("capacity", requested, capped))
    if rounded < capped:
        trail.append(ConstraintStep("lot_multiple", capped, rounded))

    evaluation = evaluate_push(
        piece, order, holding, replace(forecast, target_extra_qty=rounded)
    )

    push = rounded >= 1 and evaluation.expected_gain > 0
    if not push and rounded >= 1:
        trail.append(ConstraintStep("nonpositive_gain", rounded, 0))

    recommended = rounded if push else 0
    return Recommendation(
        strategy=Strategy.PUSH if push else Strategy.PULL,
        recommended_extra_qty=recommended,
        capacity_cap=cap,
        lot_rounded_qty=floor_to_multiple(cap, piece.lot_multiple),
        economic_ok=evaluation.period_rate <= evaluation.stocking_rate_threshold,
        # With nothing produced ahead there is nothing to gain or lose.
        gain_at_recommendation=evaluation.expected_gain if push else 0.0,
        constraint_trail=tuple(trail),
        evaluation=evaluation,
    )
