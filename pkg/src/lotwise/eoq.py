"""Classic economic-order-quantity baseline, for comparison only.

The square-root rule balances setup cost against a year of holding cost and
is blind to sale risk and to the bottleneck. Putting its answer next to the
risk-aware recommendation shows what that blindness costs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .core import DomainError, evaluate_push, floor_to_multiple
from .scenarios import Scenario
from .sweeps import recommend_scenario


@dataclass(frozen=True)
class EoqComparison:
    eoq_qty: int
    eoq_unit_cost: float
    model_recommended_qty: int
    delta_expected_gain: float


def eoq_lot_size(annual_demand: float, setup_cost: float, unit_cost: float, annual_rate: float) -> int:
    """Wilson lot size: sqrt(2 * demand * setup / (unit cost * annual rate)),
    rounded to the nearest whole piece."""
    if annual_demand <= 0 or setup_cost <= 0 or unit_cost <= 0 or annual_rate <= 0:
        raise DomainError("EOQ undefined")
    q = math.sqrt(2.0 * annual_demand * setup_cost / (unit_cost * annual_rate))
    return int(math.floor(q + 0.5))


def _speculative_gain(s: Scenario, extra_qty: int) -> float:
    """Expected gain attributable to producing ahead. Zero extras means
    nothing speculated, so nothing gained or lost."""
    if extra_qty == 0:
        return 0.0
    ev = evaluate_push(
        s.piece, s.order, s.holding, replace(s.forecast, target_extra_qty=extra_qty)
    )
    return ev.expected_gain


def compare_to_eoq(s: Scenario) -> EoqComparison:
    """Put the square-root answer and the risk-aware answer side by side.

    The EOQ lot is interpreted as "produce up to Q* in this run": pieces
    beyond the order are its implied speculation. Both quantities face the
    same capacity cap and lot rounding before gains are compared; the unit
    cost is reported for the raw implied extra so the baseline is shown
    undistorted.
    """
    if s.annual_demand is None:
        raise DomainError("EOQ undefined")
    qstar = eoq_lot_size(
        s.annual_demand, s.piece.setup_cost, s.piece.unit_cost_excl_setup, s.holding.annual_rate
    )
    implied_extra = max(qstar - s.order.ordered_qty, 0)

    rec = recommend_scenario(s)
    constrained = floor_to_multiple(min(implied_extra, rec.capacity_cap), s.piece.lot_multiple)

    eoq_eval = evaluate_push(
        s.piece, s.order, s.holding, replace(s.forecast, target_extra_qty=implied_extra)
    )
    return EoqComparison(
        eoq_qty=qstar,
        eoq_unit_cost=eoq_eval.push_unit_cost,
        model_recommended_qty=rec.recommended_extra_qty,
        delta_expected_gain=rec.gain_at_recommendation - _speculative_gain(s, constrained),
    )
