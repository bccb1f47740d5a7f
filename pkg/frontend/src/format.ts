/**
 * Display rounding, matching the engine's documented convention: ties round
 * away from zero (a cost sheet prints 0.0735 as 0.074), currency gets two
 * decimals, unit costs three, probabilities render as percentages.
 *
 * This is presentation only. Every number on screen came from the server at
 * full precision; nothing here recomputes the model. The rounding operates
 * on the shortest decimal representation of the value, because rounding the
 * binary float directly would turn the 0.0735 tie into 0.073.
 */

/** Expand the rare exponent form ("1e-7") into plain positional digits. */
function plainDigits(abs: number): string {
  const s = String(abs);
  const e = s.indexOf("e");
  if (e === -1) {
    return s;
  }
  const mantissa = s.slice(0, e);
  const exp = Number(s.slice(e + 1));
  const dot = mantissa.indexOf(".");
  const digits = dot === -1 ? mantissa : mantissa.slice(0, dot) + mantissa.slice(dot + 1);
  const intLen = (dot === -1 ? mantissa.length : dot) + exp;
  if (intLen <= 0) {
    return "0." + "0".repeat(-intLen) + digits;
  }
  if (intLen >= digits.length) {
    return digits + "0".repeat(intLen - digits.length);
  }
  return digits.slice(0, intLen) + "." + digits.slice(intLen);
}

/**
 * Fixed-point string with the given number of decimals, ties away from
 * zero. Negative zero collapses to plain zero so the panel never shows
 * "-0.00".
 */
export function formatFixed(value: number, places: number): string {
  if (!Number.isFinite(value)) {
    return String(value);
  }
  const neg = value < 0;
  const s = plainDigits(Math.abs(value));
  const dot = s.indexOf(".");
  const intPart = dot === -1 ? s : s.slice(0, dot);
  let frac = dot === -1 ? "" : s.slice(dot + 1);
  let roundUp = false;
  if (frac.length > places) {
    roundUp = frac.charCodeAt(places) >= 53; // "5": the dropped remainder is at least half a unit
    frac = frac.slice(0, places);
  } else {
    frac = frac.padEnd(places, "0");
  }
  const scaled = BigInt(intPart + frac) + (roundUp ? 1n : 0n);
  const padded = scaled.toString().padStart(places + 1, "0");
  const cut = padded.length - places;
  const body = places === 0 ? padded : `${padded.slice(0, cut)}.${padded.slice(cut)}`;
  return neg && scaled !== 0n ? `-${body}` : body;
}

export function fmtCurrency(value: number): string {
  return formatFixed(value, 2);
}

export function fmtUnitCost(value: number): string {
  return formatFixed(value, 3);
}

export function fmtPercent(value: number, places = 1): string {
  return `${formatFixed(value * 100, places)}%`;
}

/** Quantities are integers on the wire; print them as such. */
export function fmtQty(value: number): string {
  return String(value);
}
