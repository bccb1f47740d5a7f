/**
 * Entry point: wires the form, sliders, and store controls to the what-if
 * loop and repaints the decision card and gain curve on every state change.
 *
 * The page is a thin client. Every number on screen comes from the server;
 * this module only moves strings between inputs and the request builder.
 */

import { ApiRequestError, PlannerClient } from "./client.js";
import { buildDecisionCard } from "./decisionCard.js";
import { buildGainCurve } from "./gainCurve.js";
import {
  renderBanner,
  renderDecisionCard,
  renderFieldErrors,
  renderGainCurve,
} from "./dom.js";
import { fmtPercent } from "./format.js";
import {
  buildScenario,
  draftFromScenario,
  type DraftFieldName,
  type SliderName,
  SLIDER_RANGES,
  type WhatIfState,
} from "./state.js";
import { WhatIfLoop } from "./whatIfLoop.js";

/** Optional deployment override; empty string means same-origin requests. */
const apiBase = (globalThis as { PLANNER_API_BASE?: string }).PLANNER_API_BASE ?? "";

const DRAFT_INPUTS: ReadonlyArray<{ id: string; field: DraftFieldName }> = [
  { id: "f-name", field: "name" },
  { id: "f-piece-id", field: "pieceId" },
  { id: "f-setup-cost", field: "setupCost" },
  { id: "f-unit-cost", field: "unitCost" },
  { id: "f-cycle-time", field: "cycleTimeMin" },
  { id: "f-lot-multiple", field: "lotMultiple" },
  { id: "f-ordered-qty", field: "orderedQty" },
  { id: "f-available-min", field: "availableMin" },
  { id: "f-annual-demand", field: "annualDemand" },
];

const SLIDER_INPUTS: ReadonlyArray<{
  id: string;
  outputId: string;
  name: SliderName;
  describe: (value: number) => string;
}> = [
  {
    id: "s-probability",
    outputId: "o-probability",
    name: "saleProbability",
    describe: (v) => fmtPercent(v, 0),
  },
  {
    id: "s-rate",
    outputId: "o-rate",
    name: "annualRate",
    describe: (v) => fmtPercent(v, 0),
  },
  {
    id: "s-days",
    outputId: "o-days",
    name: "storageDays",
    describe: (v) => `${v} days`,
  },
  {
    id: "s-extra",
    outputId: "o-extra",
    name: "extraQty",
    describe: (v) => String(v),
  },
];

function byId<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (node === null) {
    throw new Error(`missing element #${id}`);
  }
  return node as T;
}

function main(): void {
  const client = new PlannerClient(apiBase);

  const cardRoot = byId<HTMLElement>("decision-card");
  const curveRoot = byId<HTMLElement>("gain-curve");
  const bannerRoot = byId<HTMLElement>("banner");
  const form = byId<HTMLElement>("scenario-form");
  const storeStatus = byId<HTMLElement>("store-status");
  const scenarioSelect = byId<HTMLSelectElement>("scenario-list");

  const fieldInputs = DRAFT_INPUTS.map((entry) => ({
    ...entry,
    input: byId<HTMLInputElement>(entry.id),
  }));
  const sliderInputs = SLIDER_INPUTS.map((entry) => ({
    ...entry,
    input: byId<HTMLInputElement>(entry.id),
    output: byId<HTMLElement>(entry.outputId),
  }));

  for (const { input, name } of sliderInputs) {
    const range = SLIDER_RANGES[name];
    input.min = String(range.min);
    input.max = String(range.max);
    input.step = String(range.step);
  }

  /**
   * Push state back into the controls. Values are only written when they
   * differ, so repaints triggered by the user's own typing never move the
   * caret.
   */
  function syncControls(state: WhatIfState): void {
    for (const { input, field } of fieldInputs) {
      if (input.value !== state.draft[field]) {
        input.value = state.draft[field];
      }
    }
    for (const { input, output, name, describe } of sliderInputs) {
      const value = state.sliders[name];
      if (Number(input.value) !== value) {
        input.value = String(value);
      }
      output.textContent = describe(value);
    }
  }

  function render(state: WhatIfState): void {
    syncControls(state);
    renderDecisionCard(cardRoot, buildDecisionCard(state));
    renderGainCurve(curveRoot, buildGainCurve(state.sweep));
    renderBanner(bannerRoot, state.serverUnreachable);
    renderFieldErrors(form, state.fieldErrors);
  }

  const loop = new WhatIfLoop(client, render);

  for (const { input, field } of fieldInputs) {
    input.addEventListener("input", () => loop.setField(field, input.value));
  }
  for (const { input, name } of sliderInputs) {
    input.addEventListener("input", () => loop.setSlider(name, Number(input.value)));
  }

  function setStatus(message: string, isError = false): void {
    storeStatus.textContent = message;
    storeStatus.className = isError ? "store-status store-status-error" : "store-status";
  }

  function describeError(err: unknown): string {
    return err instanceof ApiRequestError ? err.message : "server unreachable";
  }

  async function refreshScenarioList(preferred?: string): Promise<string | null> {
    const keep = preferred ?? scenarioSelect.value;
    const summaries = await client.listScenarios();
    scenarioSelect.textContent = "";
    for (const summary of summaries) {
      const option = document.createElement("option");
      option.value = summary.name;
      option.textContent = `${summary.name} (rev ${summary.revision})`;
      scenarioSelect.append(option);
    }
    if (summaries.some((s) => s.name === keep)) {
      scenarioSelect.value = keep;
    }
    return summaries.length > 0 ? scenarioSelect.value : null;
  }

  async function loadScenario(name: string): Promise<void> {
    const stored = await client.getScenario(name);
    const { draft, sliders } = draftFromScenario(stored.scenario);
    loop.setDraft(draft, sliders);
    setStatus(`loaded ${stored.name} (rev ${stored.revision})`);
  }

  /** Create, or replace when the name is already taken. */
  async function saveScenario(): Promise<void> {
    const { draft, sliders } = loop.getState();
    const built = buildScenario(draft, sliders);
    if (!built.ok) {
      setStatus("fill in the scenario before saving", true);
      return;
    }
    try {
      const saved = await client.createScenario(built.scenario);
      setStatus(`saved ${saved.name} (rev ${saved.revision})`);
      await refreshScenarioList(saved.name);
    } catch (err) {
      if (err instanceof ApiRequestError && err.status === 409) {
        const saved = await client.replaceScenario(built.scenario.name, built.scenario);
        setStatus(`updated ${saved.name} (rev ${saved.revision})`);
        await refreshScenarioList(saved.name);
        return;
      }
      throw err;
    }
  }

  async function deleteScenario(): Promise<void> {
    const name = scenarioSelect.value;
    if (name === "") {
      setStatus("nothing to delete", true);
      return;
    }
    await client.deleteScenario(name);
    setStatus(`deleted ${name}`);
    await refreshScenarioList();
  }

  byId<HTMLButtonElement>("btn-load").addEventListener("click", () => {
    const name = scenarioSelect.value;
    if (name === "") {
      setStatus("nothing to load", true);
      return;
    }
    loadScenario(name).catch((err: unknown) => setStatus(describeError(err), true));
  });

  byId<HTMLButtonElement>("btn-save").addEventListener("click", () => {
    saveScenario().catch((err: unknown) => setStatus(describeError(err), true));
  });

  byId<HTMLButtonElement>("btn-delete").addEventListener("click", () => {
    deleteScenario().catch((err: unknown) => setStatus(describeError(err), true));
  });

  render(loop.getState());

  // Start from whatever the store already holds, preferring the sample
  // push piece when someone has saved it. An empty store leaves the blank
  // draft and its hints on screen.
  refreshScenarioList("piece-b")
    .then(async (first) => {
      if (first !== null) {
        await loadScenario(first);
      }
    })
    .catch(() => setStatus("store not reachable; start from a blank scenario", true));
}

if (document.readyState === "loading") {
  document.addEventListener("DOMContentLoaded", main);
} else {
  main();
}
