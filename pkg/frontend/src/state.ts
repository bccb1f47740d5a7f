/**
 * What-if state: the scenario draft as the form holds it, the slider
 * positions, and the last server response.
 *
 * The draft keeps raw strings so a half-typed number is representable
 * without losing the field. Turning the draft into a request document is an
 * explicit step that either yields a complete scenario or a list of hints
 * naming what is missing; requests only ever leave through that step, which
 * is also what keeps out-of-domain slider values from reaching the wire.
 */

import type { DecisionDocument, ScenarioDocument, SweepDocument } from "./types.js";

export interface SliderPositions {
  saleProbability: number;
  annualRate: number;
  storageDays: number;
  extraQty: number;
}

export type SliderName = keyof SliderPositions;

export interface DraftFields {
  name: string;
  pieceId: string;
  setupCost: string;
  unitCost: string;
  cycleTimeMin: string;
  lotMultiple: string;
  orderedQty: string;
  availableMin: string;
  annualDemand: string;
}

export type DraftFieldName = keyof DraftFields;

export interface FieldHint {
  field: string;
  message: string;
}

export interface WhatIfState {
  draft: DraftFields;
  sliders: SliderPositions;
  /** Last good decision response; kept (and marked stale) across failures. */
  decision: DecisionDocument | null;
  /** Last good probability sweep, always fetched together with the decision. */
  sweep: SweepDocument | null;
  /** True from the moment an input changes until the matching response renders. */
  stale: boolean;
  serverUnreachable: boolean;
  /** Server-reported 400s, keyed by the dotted field path they blame. */
  fieldErrors: Record<string, string>;
}

/**
 * Slider travel. The minima are hard domain bounds the engine enforces; the
 * maxima are just sensible UI travel for a workstation panel.
 */
export const SLIDER_RANGES: Record<SliderName, { min: number; max: number; step: number }> = {
  saleProbability: { min: 0, max: 1, step: 0.01 },
  annualRate: { min: 0, max: 1, step: 0.01 },
  storageDays: { min: 1, max: 365, step: 1 },
  extraQty: { min: 0, max: 100000, step: 500 },
};

export function clampSlider(name: SliderName, value: number): number {
  const { min, max } = SLIDER_RANGES[name];
  if (!Number.isFinite(value)) {
    return min;
  }
  const clamped = Math.min(max, Math.max(min, value));
  return name === "storageDays" || name === "extraQty" ? Math.round(clamped) : clamped;
}

export function emptyDraft(): DraftFields {
  return {
    name: "",
    pieceId: "",
    setupCost: "",
    unitCost: "",
    cycleTimeMin: "",
    lotMultiple: "",
    orderedQty: "",
    availableMin: "",
    annualDemand: "",
  };
}

export function initialState(): WhatIfState {
  return {
    draft: emptyDraft(),
    sliders: { saleProbability: 0.8, annualRate: 0.09, storageDays: 150, extraQty: 20000 },
    decision: null,
    sweep: null,
    stale: true,
    serverUnreachable: false,
    fieldErrors: {},
  };
}

const REQUIRED: Array<{ key: DraftFieldName; field: string; label: string; numeric: boolean }> = [
  { key: "name", field: "name", label: "scenario name", numeric: false },
  { key: "pieceId", field: "piece.id", label: "piece id", numeric: false },
  { key: "setupCost", field: "piece.setup_cost", label: "setup cost", numeric: true },
  { key: "unitCost", field: "piece.unit_cost", label: "unit cost", numeric: true },
  { key: "cycleTimeMin", field: "piece.cycle_time_min", label: "cycle time", numeric: true },
  { key: "lotMultiple", field: "piece.lot_multiple", label: "lot multiple", numeric: true },
  { key: "orderedQty", field: "order.ordered_qty", label: "ordered quantity", numeric: true },
  { key: "availableMin", field: "capacity.available_min", label: "available minutes", numeric: true },
];

/** What still stands between this draft and a sendable scenario. */
export function draftHints(draft: DraftFields): FieldHint[] {
  const hints: FieldHint[] = [];
  for (const { key, field, label, numeric } of REQUIRED) {
    const raw = draft[key].trim();
    if (raw === "") {
      hints.push({ field, message: `${label} is required` });
    } else if (numeric && !Number.isFinite(Number(raw))) {
      hints.push({ field, message: `${label} must be a number` });
    }
  }
  const demand = draft.annualDemand.trim();
  if (demand !== "" && !Number.isFinite(Number(demand))) {
    hints.push({ field: "annual_demand", message: "annual demand must be a number" });
  }
  return hints;
}

export type BuildResult =
  | { ok: true; scenario: ScenarioDocument }
  | { ok: false; hints: FieldHint[] };

/**
 * Assemble the request document. Sliders are clamped once more on the way
 * out, so no code path can send a probability outside [0, 1] or a negative
 * extra quantity. Values the server itself must judge (a fractional lot
 * multiple, a zero order) pass through untouched; its 400 comes back as a
 * field-level error.
 */
export function buildScenario(draft: DraftFields, sliders: SliderPositions): BuildResult {
  const hints = draftHints(draft);
  if (hints.length > 0) {
    return { ok: false, hints };
  }
  const scenario: ScenarioDocument = {
    name: draft.name.trim(),
    piece: {
      id: draft.pieceId.trim(),
      setup_cost: Number(draft.setupCost),
      unit_cost: Number(draft.unitCost),
      cycle_time_min: Number(draft.cycleTimeMin),
      lot_multiple: Number(draft.lotMultiple),
    },
    order: { ordered_qty: Number(draft.orderedQty) },
    holding: {
      annual_rate: clampSlider("annualRate", sliders.annualRate),
      storage_days: clampSlider("storageDays", sliders.storageDays),
    },
    forecast: {
      sale_probability: clampSlider("saleProbability", sliders.saleProbability),
      target_extra_qty: clampSlider("extraQty", sliders.extraQty),
    },
    capacity: { available_min: Number(draft.availableMin) },
  };
  const demand = draft.annualDemand.trim();
  if (demand !== "") {
    scenario.annual_demand = Number(demand);
  }
  return { ok: true, scenario };
}

/** Populate the form from a stored document: the scenario-load path. */
export function draftFromScenario(doc: ScenarioDocument): {
  draft: DraftFields;
  sliders: SliderPositions;
} {
  return {
    draft: {
      name: doc.name,
      pieceId: doc.piece.id,
      setupCost: String(doc.piece.setup_cost),
      unitCost: String(doc.piece.unit_cost),
      cycleTimeMin: String(doc.piece.cycle_time_min),
      lotMultiple: String(doc.piece.lot_multiple),
      orderedQty: String(doc.order.ordered_qty),
      availableMin: String(doc.capacity.available_min),
      annualDemand: doc.annual_demand == null ? "" : String(doc.annual_demand),
    },
    sliders: {
      saleProbability: clampSlider("saleProbability", doc.forecast.sale_probability),
      annualRate: clampSlider("annualRate", doc.holding.annual_rate),
      storageDays: clampSlider("storageDays", doc.holding.storage_days),
      extraQty: clampSlider("extraQty", doc.forecast.target_extra_qty),
    },
  };
}
