/**
 * Wire types for the decision service. These mirror the JSON documents the
 * server produces verbatim; nothing in the client reshapes or recomputes
 * them. Numbers arrive at full precision and stay that way until a view
 * formats them for display.
 */

export interface PieceSection {
  id: string;
  setup_cost: number;
  unit_cost: number;
  cycle_time_min: number;
  lot_multiple: number;
}

export interface ScenarioDocument {
  name: string;
  piece: PieceSection;
  order: { ordered_qty: number };
  holding: { annual_rate: number; storage_days: number };
  forecast: { sale_probability: number; target_extra_qty: number };
  capacity: { available_min: number };
  annual_demand?: number | null;
}

/** One full costing of a speculative extra quantity. */
export interface Evaluation {
  extra_qty: number;
  period_rate: number;
  pull_unit_cost: number;
  push_unit_cost: number;
  holding_cost_total: number;
  stocking_rate_threshold: number;
  result_if_sold_certain: number;
  expected_result_if_sold: number;
  expected_loss_if_unsold: number;
  expected_gain: number;
  break_even_probability: number;
}

export interface ConstraintStep {
  constraint: string;
  before: number;
  after: number;
}

export interface Recommendation {
  strategy: "pull" | "push";
  recommended_extra_qty: number;
  capacity_cap: number;
  lot_rounded_qty: number;
  economic_ok: boolean;
  gain_at_recommendation: number;
  constraint_trail: ConstraintStep[];
  evaluation: Evaluation;
}

export interface Advisory {
  code: string;
  message: string;
  field: string;
  severity: string;
}

export interface DecisionDocument {
  scenario_name: string;
  recommendation: Recommendation;
  warnings: Advisory[];
}

export interface SweepRow {
  axis_value: number;
  evaluation: Evaluation;
}

export interface SweepDocument {
  scenario_name: string;
  axis: string;
  rows: SweepRow[];
}

export interface ApiErrorBody {
  code: string;
  message: string;
  field?: string;
}

export interface StoredScenarioSummary {
  name: string;
  revision: number;
  created_at: string;
}

export interface StoredScenario extends StoredScenarioSummary {
  scenario: ScenarioDocument;
}
