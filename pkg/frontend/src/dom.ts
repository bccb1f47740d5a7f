/** DOM writers: each takes a view model and overwrites one container. No math here. */

import type { DecisionCardModel } from "./decisionCard.js";
import { hoverLabel, type GainCurveModel } from "./gainCurve.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

export function renderDecisionCard(root: HTMLElement, model: DecisionCardModel): void {
  root.textContent = "";
  if (model.kind === "disabled") {
    root.className = "card card-disabled";
    root.append(el("p", "card-hint-title", "Fill in the scenario to get a recommendation."));
    for (const hint of model.hints) {
      root.append(el("p", "card-hint", `${hint.field}: ${hint.message}`));
    }
    return;
  }
  root.className = `card card-${model.strategy}${model.stale ? " card-stale" : ""}`;
  const head = el("div", "card-head");
  head.append(el("span", "card-headline", model.headline));
  head.append(el("span", "card-gain", model.gainLabel));
  if (model.stale) {
    head.append(el("span", "card-stale-badge", "stale"));
  }
  root.append(head);
  root.append(el("p", "card-trail", model.trail));
  if (!model.economicOk) {
    root.append(el("p", "card-flag", "holding rate exceeds the stocking threshold"));
  }
  const dl = el("dl", "card-lines");
  for (const line of model.lines) {
    dl.append(el("dt", "", line.label));
    dl.append(el("dd", "", line.value));
  }
  root.append(dl);
  for (const advisory of model.advisories) {
    root.append(el("p", "card-advisory", `advisory: ${advisory}`));
  }
}

export function renderGainCurve(root: HTMLElement, model: GainCurveModel | null): void {
  root.textContent = "";
  if (model === null) {
    root.append(el("p", "curve-empty", "The gain curve appears once a sweep arrives."));
    return;
  }
  const svg = svgEl("svg", {
    viewBox: `0 0 ${model.width} ${model.height}`,
    class: "curve-svg",
    role: "img",
  });

  if (model.lossBand !== null) {
    svg.append(
      svgEl("rect", {
        x: String(model.lossBand.x0),
        y: String(model.plot.top),
        width: String(model.lossBand.x1 - model.lossBand.x0),
        height: String(model.plot.bottom - model.plot.top),
        class: "curve-loss",
      }),
    );
  }
  for (const tick of model.yTicks) {
    svg.append(
      svgEl("line", {
        x1: String(model.plot.left),
        x2: String(model.plot.right),
        y1: String(tick.at),
        y2: String(tick.at),
        class: "curve-grid",
      }),
    );
    const label = svgEl("text", {
      x: String(model.plot.left - 8),
      y: String(tick.at + 4),
      class: "curve-tick curve-tick-y",
    });
    label.textContent = tick.label;
    svg.append(label);
  }
  for (const tick of model.xTicks) {
    const label = svgEl("text", {
      x: String(tick.at),
      y: String(model.plot.bottom + 18),
      class: "curve-tick curve-tick-x",
    });
    label.textContent = tick.label;
    svg.append(label);
  }
  if (model.zeroLineY !== null) {
    svg.append(
      svgEl("line", {
        x1: String(model.plot.left),
        x2: String(model.plot.right),
        y1: String(model.zeroLineY),
        y2: String(model.zeroLineY),
        class: "curve-zero",
      }),
    );
  }
  svg.append(svgEl("path", { d: model.linePath, class: "curve-line" }));

  svg.append(
    svgEl("line", {
      x1: String(model.breakEven.x),
      x2: String(model.breakEven.x),
      y1: String(model.plot.top),
      y2: String(model.plot.bottom),
      class: "curve-breakeven",
    }),
  );
  const beLabel = svgEl("text", {
    x: String(model.breakEven.x),
    y: String(model.plot.top - 4),
    class: "curve-breakeven-label",
  });
  beLabel.textContent = `break-even ${model.breakEven.label}`;
  svg.append(beLabel);

  const marker = svgEl("circle", { r: "3.5", class: "curve-hover-dot" });
  marker.style.display = "none";
  svg.append(marker);

  const tooltip = el("div", "curve-tooltip");
  tooltip.style.display = "none";

  svg.addEventListener("mousemove", (event: MouseEvent) => {
    const box = svg.getBoundingClientRect();
    const scale = model.width / box.width;
    const hit = hoverLabel(model, (event.clientX - box.left) * scale);
    if (hit === null) {
      return;
    }
    marker.setAttribute("cx", String(hit.point.x));
    marker.setAttribute("cy", String(hit.point.y));
    marker.style.display = "";
    tooltip.textContent = hit.text;
    tooltip.style.display = "";
    tooltip.style.left = `${hit.point.x / scale}px`;
    tooltip.style.top = `${hit.point.y / scale - 28}px`;
  });
  svg.addEventListener("mouseleave", () => {
    marker.style.display = "none";
    tooltip.style.display = "none";
  });

  root.append(svg, tooltip);
}

/** Non-blocking connectivity banner; the stale result stays on screen below it. */
export function renderBanner(root: HTMLElement, unreachable: boolean): void {
  root.textContent = unreachable
    ? "server unreachable; showing the last good result"
    : "";
  root.style.display = unreachable ? "" : "none";
}

/**
 * Write server 400 messages next to their inputs. Every element carrying
 * data-err-for="<dotted field path>" gets the matching message or is
 * cleared.
 */
export function renderFieldErrors(root: ParentNode, errors: Record<string, string>): void {
  for (const slot of root.querySelectorAll<HTMLElement>("[data-err-for]")) {
    const field = slot.dataset.errFor ?? "";
    slot.textContent = errors[field] ?? "";
  }
}
