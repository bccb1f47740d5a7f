"""Pull-or-push lot sizing decision support.

Given a confirmed order, the engine answers whether producing extra pieces
for stock beats producing exactly the ordered quantity, how many extras the
bottleneck allows, and at what sale probability the bet breaks even.
"""

from .core import (
    CapacityWindow,
    ConstraintStep,
    CostSlope,
    DomainError,
    HoldingPolicy,
    OrderContext,
    PieceProfile,
    PushEvaluation,
    Recommendation,
    SaleForecast,
    Strategy,
    break_even_probability,
    capacity_cap,
    cost_slope_sign,
    derive_unit_cost,
    evaluate_push,
    expected_gain,
    expected_loss_if_unsold,
    expected_result_if_sold,
    floor_to_multiple,
    holding_cost,
    period_holding_rate,
    pull_unit_cost,
    push_unit_cost,
    recommend,
    result_if_sold_certain,
    stocking_rate_threshold,
)
from .eoq import EoqComparison, compare_to_eoq, eoq_lot_size
from .golden import GoldenCell, GoldenFixture, golden_fixture, reference_scenario
from .scenarios import (
    Scenario,
    ScenarioFormatError,
    ValidationIssue,
    load_scenario_file,
    parse_scenario,
    scenario_to_document,
    validate_scenario,
)
from .sweeps import Axis, SweepSpec, SweepTable, evaluate_scenario, recommend_scenario, run_sweep

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "CapacityWindow",
    "ConstraintStep",
    "CostSlope",
    "DomainError",
    "EoqComparison",
    "GoldenCell",
    "GoldenFixture",
    "HoldingPolicy",
    "OrderContext",
    "PieceProfile",
    "PushEvaluation",
    "Recommendation",
    "SaleForecast",
    "Scenario",
    "ScenarioFormatError",
    "Strategy",
    "SweepSpec",
    "SweepTable",
    "ValidationIssue",
    "break_even_probability",
    "capacity_cap",
    "compare_to_eoq",
    "cost_slope_sign",
    "derive_unit_cost",
    "eoq_lot_size",
    "evaluate_push",
    "evaluate_scenario",
    "expected_gain",
    "expected_loss_if_unsold",
    "expected_result_if_sold",
    "floor_to_multiple",
    "golden_fixture",
    "holding_cost",
    "load_scenario_file",
    "parse_scenario",
    "period_holding_rate",
    "pull_unit_cost",
    "push_unit_cost",
    "recommend",
    "recommend_scenario",
    "reference_scenario",
    "result_if_sold_certain",
    "run_sweep",
    "scenario_to_document",
    "stocking_rate_threshold",
    "validate_scenario",
]
