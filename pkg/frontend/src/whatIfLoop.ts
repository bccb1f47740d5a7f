/**
 * The request loop behind the panel.
 *
 * Input edits mark the view stale and, once the user settles for a beat,
 * fire exactly one evaluate plus one probability sweep. The pair lands
 * atomically (both responses or neither) and strictly in order: every
 * dispatch takes a sequence number, and anything older than what is already
 * rendered is dropped on arrival. A failed pair keeps the last good result
 * on screen, marked stale, with either a field-level message (400) or an
 * unreachable banner (anything else).
 */

import { ApiRequestError } from "./client.js";
import { debounce, type Debounced } from "./debounce.js";
import {
  buildScenario,
  clampSlider,
  initialState,
  type DraftFieldName,
  type DraftFields,
  type SliderName,
  type SliderPositions,
  type WhatIfState,
} from "./state.js";
import type { DecisionDocument, ScenarioDocument, SweepDocument } from "./types.js";

export interface WhatIfApi {
  evaluate(scenario: ScenarioDocument): Promise<DecisionDocument>;
  sweep(
    scenario: ScenarioDocument,
    axis: string,
    values: readonly number[],
  ): Promise<SweepDocument>;
}

/** Probability grid for the gain curve: 101 points, 0.00 through 1.00. */
export const CURVE_GRID: readonly number[] = Object.freeze(
  Array.from({ length: 101 }, (_, i) => i / 100),
);

export const DEFAULT_DEBOUNCE_MS = 250;

/** Key under which a 400 without a field path is reported. */
export const GENERAL_FIELD = "scenario";

export class WhatIfLoop {
  private state: WhatIfState;
  private dispatched = 0; // sequence number of the newest request pair sent
  private applied = 0; // sequence number of the pair currently rendered
  private readonly schedule: Debounced<[]>;

  constructor(
    private readonly api: WhatIfApi,
    private readonly onChange: (state: WhatIfState) => void,
    debounceMs: number = DEFAULT_DEBOUNCE_MS,
  ) {
    this.state = initialState();
    this.schedule = debounce(() => this.dispatch(), debounceMs);
  }

  getState(): WhatIfState {
    return this.state;
  }

  setSlider(name: SliderName, value: number): void {
    const sliders = { ...this.state.sliders, [name]: clampSlider(name, value) };
    this.patch({ sliders, stale: true });
    this.schedule();
  }

  setField(name: DraftFieldName, value: string): void {
    const draft = { ...this.state.draft, [name]: value };
    this.patch({ draft, stale: true });
    this.schedule();
  }

  /** Replace the whole draft (the scenario-load path) and refresh at once. */
  setDraft(draft: DraftFields, sliders: SliderPositions): void {
    this.patch({ draft, sliders, stale: true });
    this.refresh();
  }

  /** Skip the debounce; used at startup and after loading a scenario. */
  refresh(): void {
    this.schedule.cancel();
    this.dispatch();
  }

  private patch(partial: Partial<WhatIfState>): void {
    this.state = { ...this.state, ...partial };
    this.onChange(this.state);
  }

  private dispatch(): void {
    const built = buildScenario(this.state.draft, this.state.sliders);
    if (!built.ok) {
      return; // incomplete draft; the card shows the hints instead of a request
    }
    const seq = ++this.dispatched;
    Promise.all([
      this.api.evaluate(built.scenario),
      this.api.sweep(built.scenario, "p", CURVE_GRID),
    ]).then(
      ([decision, sweep]) => this.applyPair(seq, decision, sweep),
      (err: unknown) => this.applyFailure(seq, err),
    );
  }

  private applyPair(seq: number, decision: DecisionDocument, sweep: SweepDocument): void {
    if (seq <= this.applied) {
      return; // out of order: a newer pair already rendered
    }
    this.applied = seq;
    this.patch({
      decision,
      sweep,
      fieldErrors: {},
      serverUnreachable: false,
      // still stale if an even newer request is in flight
      stale: seq !== this.dispatched,
    });
  }

  private applyFailure(seq: number, err: unknown): void {
    if (seq !== this.dispatched) {
      return; // superseded; the newer request speaks for the current inputs
    }
    if (err instanceof ApiRequestError && err.status === 400) {
      this.patch({
        fieldErrors: { [err.field ?? GENERAL_FIELD]: err.message },
        serverUnreachable: false,
      });
    } else {
      this.patch({ serverUnreachable: true });
    }
  }
}
