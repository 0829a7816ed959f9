/** Shareable view state: everything the explorer shows is derivable from
 * this plus API responses, and the whole thing round-trips through the URL
 * query string. */

import type { LayerName } from "./types.js";
import { LAYER_NAMES } from "./types.js";

export interface Selection {
  kind: "concept" | "association";
  a: string;
  /** second stem; present only for associations */
  b?: string;
}

export interface ViewState {
  /** group specs; null means "use the served bundle's defaults" */
  groupA: string | null;
  groupB: string | null;
  minMembersA: number;
  minMembersB: number;
  /** null inherits the bundle parameter */
  minTotal: number | null;
  specificMin: number | null;
  layer: LayerName;
  selection: Selection | null;
  quoteOffset: number;
}

export const DEFAULT_STATE: ViewState = {
  groupA: null,
  groupB: null,
  minMembersA: 2,
  minMembersB: 2,
  minTotal: null,
  specificMin: null,
  layer: "common",
  selection: null,
  quoteOffset: 0,
};

export const BOUNDS = {
  minMembers: { min: 2, max: 99 },
  minTotal: { min: 1, max: 999 },
  specificMin: { min: 2, max: 99 },
  quoteOffset: { min: 0, max: 100_000 },
} as const;

function clamp(value: number, lo: number, hi: number): number {
  return Math.min(hi, Math.max(lo, Math.trunc(value)));
}

function readInt(
  raw: string | null,
  lo: number,
  hi: number,
): number | null {
  if (raw === null || !/^-?\d+$/.test(raw.trim())) {
    return null;
  }
  return clamp(Number(raw), lo, hi);
}

function encodeSelection(sel: Selection): string {
  // stems never contain ":" or "," (the tokenizer splits on both), but
  // escape defensively so decode(encode(s)) holds for any string
  const esc = (s: string) => encodeURIComponent(s);
  return sel.kind === "concept"
    ? `c:${esc(sel.a)}`
    : `a:${esc(sel.a)},${esc(sel.b ?? "")}`;
}

function decodeSelection(raw: string): Selection | null {
  const kind = raw.slice(0, 2);
  const rest = raw.slice(2);
  if (kind === "c:") {
    const concept = decodeURIComponent(rest);
    return concept ? { kind: "concept", a: concept } : null;
  }
  if (kind === "a:") {
    const comma = rest.indexOf(",");
    if (comma < 0) {
      return null;
    }
    const a = decodeURIComponent(rest.slice(0, comma));
    const b = decodeURIComponent(rest.slice(comma + 1));
    return a && b ? { kind: "association", a, b } : null;
  }
  return null;
}

/** Serialize to query parameters, omitting anything at its default. */
export function encodeViewState(state: ViewState): string {
  const out = new URLSearchParams();
  if (state.groupA !== null) out.set("ga", state.groupA);
  if (state.groupB !== null) out.set("gb", state.groupB);
  if (state.minMembersA !== DEFAULT_STATE.minMembersA) {
    out.set("ma", String(state.minMembersA));
  }
  if (state.minMembersB !== DEFAULT_STATE.minMembersB) {
    out.set("mb", String(state.minMembersB));
  }
  if (state.minTotal !== null) out.set("mt", String(state.minTotal));
  if (state.specificMin !== null) out.set("sm", String(state.specificMin));
  if (state.layer !== DEFAULT_STATE.layer) out.set("layer", state.layer);
  if (state.selection) out.set("sel", encodeSelection(state.selection));
  if (state.quoteOffset !== 0) out.set("q", String(state.quoteOffset));
  return out.toString();
}

/** Parse a query string; unknown keys are ignored and out-of-range values
 * clamped, so any URL yields a usable state. */
export function decodeViewState(query: string): ViewState {
  const params = new URLSearchParams(query);
  const state: ViewState = { ...DEFAULT_STATE };
  const ga = params.get("ga");
  const gb = params.get("gb");
  if (ga !== null) state.groupA = ga;
  if (gb !== null) state.groupB = gb;
  state.minMembersA =
    readInt(params.get("ma"), BOUNDS.minMembers.min, BOUNDS.minMembers.max) ??
    DEFAULT_STATE.minMembersA;
  state.minMembersB =
    readInt(params.get("mb"), BOUNDS.minMembers.min, BOUNDS.minMembers.max) ??
    DEFAULT_STATE.minMembersB;
  state.minTotal = readInt(
    params.get("mt"),
    BOUNDS.minTotal.min,
    BOUNDS.minTotal.max,
  );
  state.specificMin = readInt(
    params.get("sm"),
    BOUNDS.specificMin.min,
    BOUNDS.specificMin.max,
  );
  const layer = params.get("layer");
  if (layer && (LAYER_NAMES as readonly string[]).includes(layer)) {
    state.layer = layer as LayerName;
  }
  const sel = params.get("sel");
  if (sel !== null) {
    state.selection = decodeSelection(sel);
  }
  state.quoteOffset =
    readInt(params.get("q"), BOUNDS.quoteOffset.min, BOUNDS.quoteOffset.max) ??
    0;
  return state;
}

/** Canonical form: what decode(encode(state)) yields.  Encoding drops
 * nothing from a state that is already canonical. */
export function canonicalViewState(state: ViewState): ViewState {
  return decodeViewState(encodeViewState(state));
}

export function statesEqual(x: ViewState, y: ViewState): boolean {
  return encodeViewState(x) === encodeViewState(y);
}
