/**
 * Geometry for the gain-versus-probability curve.
 *
 * The engine's expected gain is affine in the sale probability, so the sweep
 * rows trace a straight line; this module only maps server numbers onto
 * pixels. The break-even marker sits exactly at the server-reported
 * probability, never at a client-side interpolation. Note the curve shows
 * the economics of the requested speculative quantity as-is (the sweep
 * contract), so its marker can differ from the card's break-even line when
 * capacity or lot constraints have reduced the recommended quantity.
 */

import { fmtCurrency, fmtPercent } from "./format.js";
import type { SweepDocument } from "./types.js";

export interface CurvePoint {
  p: number;
  gain: number;
  x: number;
  y: number;
}

export interface CurveTick {
  at: number;
  label: string;
}

export interface GainCurveModel {
  width: number;
  height: number;
  plot: { left: number; top: number; right: number; bottom: number };
  points: CurvePoint[];
  linePath: string;
  /** y of the G = 0 axis line, when zero is inside the plotted range. */
  zeroLineY: number | null;
  breakEven: { p: number; x: number; label: string };
  /** Horizontal band where the sweep says the gamble loses money. */
  lossBand: { x0: number; x1: number } | null;
  xTicks: CurveTick[];
  yTicks: CurveTick[];
}

export const CURVE_WIDTH = 640;
export const CURVE_HEIGHT = 280;

const MARGIN = { left: 64, right: 16, top: 16, bottom: 32 };

const px = (n: number): number => Number(n.toFixed(2));

export function buildGainCurve(
  sweep: SweepDocument | null,
  width = CURVE_WIDTH,
  height = CURVE_HEIGHT,
): GainCurveModel | null {
  if (sweep === null || sweep.rows.length === 0) {
    return null;
  }
  const rows = sweep.rows;
  const left = MARGIN.left;
  const top = MARGIN.top;
  const right = width - MARGIN.right;
  const bottom = height - MARGIN.bottom;
  const innerW = right - left;
  const innerH = bottom - top;

  const gains = rows.map((r) => r.evaluation.expected_gain);
  let gMin = Math.min(0, ...gains);
  let gMax = Math.max(0, ...gains);
  if (gMax === gMin) {
    gMax = gMin + 1; // degenerate all-zero sweep; keep the mapping finite
  }
  const pad = (gMax - gMin) * 0.05;
  gMin -= pad;
  gMax += pad;

  const xOf = (p: number): number => left + p * innerW;
  const yOf = (g: number): number => top + ((gMax - g) / (gMax - gMin)) * innerH;

  const points = rows.map((r) => ({
    p: r.axis_value,
    gain: r.evaluation.expected_gain,
    x: xOf(r.axis_value),
    y: yOf(r.evaluation.expected_gain),
  }));
  const linePath = points
    .map((pt, i) => `${i === 0 ? "M" : "L"}${px(pt.x)} ${px(pt.y)}`)
    .join(" ");

  // break_even_probability does not depend on P, so every row carries the
  // same server-computed value; take it from the first.
  const pStar = rows[0].evaluation.break_even_probability;
  const breakEven = { p: pStar, x: xOf(pStar), label: fmtPercent(pStar, 2) };
  const lossBand = pStar > 0 ? { x0: xOf(0), x1: xOf(pStar) } : null;

  const xTicks = [0, 0.25, 0.5, 0.75, 1].map((p) => ({
    at: xOf(p),
    label: fmtPercent(p, 0),
  }));
  const yTicks = Array.from({ length: 5 }, (_, i) => {
    const g = gMin + (i / 4) * (gMax - gMin);
    return { at: yOf(g), label: fmtCurrency(g) };
  });

  return {
    width,
    height,
    plot: { left, top, right, bottom },
    points,
    linePath,
    zeroLineY: gMin <= 0 && 0 <= gMax ? yOf(0) : null,
    breakEven,
    lossBand,
    xTicks,
    yTicks,
  };
}

/** Nearest sweep sample to a pointer x, with its exact row values printed. */
export function hoverLabel(
  model: GainCurveModel,
  x: number,
): { point: CurvePoint; text: string } | null {
  let best: CurvePoint | null = null;
  for (const pt of model.points) {
    if (best === null || Math.abs(pt.x - x) < Math.abs(best.x - x)) {
      best = pt;
    }
  }
  if (best === null) {
    return null;
  }
  return { point: best, text: `P ${fmtPercent(best.p, 0)}: gain ${fmtCurrency(best.gain)}` };
}
