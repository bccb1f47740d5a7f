/**
 * View model for the recommendation card: pure data in, pure data out, the
 * DOM layer just prints it. Numbers go through the shared display rounding,
 * so the card always shows exactly what the engine's own table output would.
 */

import { fmtCurrency, fmtPercent, fmtQty, fmtUnitCost } from "./format.js";
import { draftHints, type FieldHint, type WhatIfState } from "./state.js";
import type { ConstraintStep } from "./types.js";

export interface CardLine {
  label: string;
  value: string;
}

export type DecisionCardModel =
  | { kind: "disabled"; hints: FieldHint[] }
  | {
      kind: "ready";
      strategy: "pull" | "push";
      headline: string;
      gainLabel: string;
      trail: string;
      economicOk: boolean;
      lines: CardLine[];
      advisories: string[];
      stale: boolean;
    };

// Same short labels the engine's table renderer uses, so the trail reads
// identically on both surfaces.
const TRAIL_LABELS: Record<string, string> = {
  capacity: "capacity",
  lot_multiple: "lot",
  nonpositive_gain: "gain<=0",
};

function trailText(trail: ConstraintStep[], unconstrainedQty: number): string {
  if (trail.length === 0) {
    return `requested ${unconstrainedQty} (no constraint applied)`;
  }
  const parts = [`requested ${trail[0].before}`];
  for (const step of trail) {
    parts.push(`${TRAIL_LABELS[step.constraint] ?? step.constraint} ${step.after}`);
  }
  return parts.join(" -> ");
}

export function buildDecisionCard(state: WhatIfState): DecisionCardModel {
  const hints = draftHints(state.draft);
  if (hints.length > 0 || state.decision === null) {
    return { kind: "disabled", hints };
  }
  const rec = state.decision.recommendation;
  const ev = rec.evaluation;
  return {
    kind: "ready",
    strategy: rec.strategy,
    headline: rec.strategy === "push" ? `PUSH +${fmtQty(rec.recommended_extra_qty)}` : "PULL",
    gainLabel: `gain ${fmtCurrency(rec.gain_at_recommendation)}`,
    trail: trailText(rec.constraint_trail, rec.recommended_extra_qty),
    economicOk: rec.economic_ok,
    lines: [
      { label: "pull unit cost", value: fmtUnitCost(ev.pull_unit_cost) },
      { label: "push unit cost", value: fmtUnitCost(ev.push_unit_cost) },
      { label: "holding cost", value: fmtCurrency(ev.holding_cost_total) },
      { label: "stocking rate threshold", value: fmtPercent(ev.stocking_rate_threshold) },
      { label: "expected gain", value: fmtCurrency(ev.expected_gain) },
      { label: "break-even probability", value: fmtPercent(ev.break_even_probability, 2) },
      { label: "capacity cap", value: fmtQty(rec.capacity_cap) },
    ],
    advisories: state.decision.warnings.map((w) => `${w.field}: ${w.message}`),
    stale: state.stale,
  };
}
