/** UI state and its pure transitions.
 *
 * The browser owns the whole scenario document; the service is stateless and
 * receives the full document on every request. Every transition returns a
 * fresh state object and never mutates its input, which is what makes the
 * "toggling visibility never changes parameters" guarantee trivial to test.
 */

import type {
  ParamKey,
  RegimeName,
  ScenarioDocument,
  ScenarioEntry,
  ScenarioParams,
} from "./api.js";

export const MODEL_NAMES = ["Model 1", "Model 2", "Model 3"] as const;

/** One fixed, colorblind-safe hue per model, stable for the whole session. */
export const MODEL_COLORS = ["#0072B2", "#E69F00", "#009E73"] as const;

export const DEFAULT_PARAMS: ScenarioParams = {
  A: 160,
  c: 0.5,
  T: 200,
  B: 215,
  b: 10,
  pi_e: 0,
  G: 250,
  NX: 50,
  h1: 0.2,
  h2: 2,
  M: 200,
  P: 1,
};

export interface SliderMeta {
  key: ParamKey;
  label: string;
  unit: string;
  lo: number;
  hi: number;
  step: number;
}

/* Slider bounds mirror the service's legal ranges; where the contract is
   open (c strictly inside (0.01, 0.99)) the slider stops one step short. */
export const PARAM_SLIDERS: readonly SliderMeta[] = [
  { key: "A", label: "Autonomous consumption (A)", unit: "CU", lo: 0, hi: 1000, step: 1 },
  { key: "c", label: "Propensity to consume (c)", unit: "", lo: 0.02, hi: 0.98, step: 0.01 },
  { key: "T", label: "Taxes (T)", unit: "CU", lo: -500, hi: 1000, step: 1 },
  { key: "B", label: "Autonomous investment (B)", unit: "CU", lo: 0, hi: 1000, step: 1 },
  { key: "b", label: "Investment rate sensitivity (b)", unit: "", lo: 0.1, hi: 100, step: 0.1 },
  { key: "pi_e", label: "Expected inflation (πᵉ)", unit: "%", lo: -10, hi: 10, step: 0.1 },
  { key: "G", label: "Government spending (G)", unit: "CU", lo: -500, hi: 1000, step: 1 },
  { key: "NX", label: "Net exports (NX)", unit: "CU", lo: -500, hi: 1000, step: 1 },
  { key: "h1", label: "Money demand, output weight (h₁)", unit: "", lo: 0.01, hi: 2, step: 0.01 },
  { key: "h2", label: "Money demand, rate weight (h₂)", unit: "", lo: 0.1, hi: 100, step: 0.1 },
  { key: "M", label: "Money supply (M)", unit: "CU", lo: 0, hi: 2000, step: 1 },
  { key: "P", label: "Price level (P)", unit: "", lo: 0.1, hi: 10, step: 0.1 },
];

export const I_BAR_SLIDER = {
  label: "Rate target (ī)",
  unit: "%",
  lo: 0,
  hi: 30,
  step: 0.1,
};

export interface SlotState {
  params: ScenarioParams;
  rateControl: boolean;
  iBar: number;
}

/** The four analysis views carrying per-model visibility toggles. */
export type ViewId = "overview" | "islm" | "money" | "goods";

export const VIEW_IDS: readonly ViewId[] = ["overview", "islm", "money", "goods"];

export type Triple = [boolean, boolean, boolean];

export type AnalysisTab = "results" | "setup" | "instructions";

export interface UiState {
  slots: [SlotState, SlotState, SlotState];
  inputTab: 0 | 1 | 2;
  analysisTab: AnalysisTab;
  visibility: Record<ViewId, Triple>;
}

function freshSlot(params: ScenarioParams): SlotState {
  return { params: { ...params }, rateControl: false, iBar: 5.0 };
}

export function initialState(params: ScenarioParams = DEFAULT_PARAMS): UiState {
  return {
    slots: [freshSlot(params), freshSlot(params), freshSlot(params)],
    inputTab: 0,
    analysisTab: "results",
    visibility: {
      overview: [true, false, false],
      islm: [true, false, false],
      money: [true, false, false],
      goods: [true, false, false],
    },
  };
}

/** Seed slots from a served document (the defaults endpoint returns three
 * entries); regimes and rate targets carry over. */
export function stateFromDocument(doc: ScenarioDocument): UiState {
  const state = initialState();
  const slots = state.slots.map((slot, k) => {
    const entry = doc.scenarios[k];
    if (!entry) return slot;
    return {
      params: { ...entry.params },
      rateControl: entry.regime === "interest_rate",
      iBar: entry.i_bar ?? slot.iBar,
    };
  }) as [SlotState, SlotState, SlotState];
  return { ...state, slots };
}

export function clampToSlider(meta: { lo: number; hi: number }, value: number): number {
  if (Number.isNaN(value)) return meta.lo;
  return Math.min(meta.hi, Math.max(meta.lo, value));
}

function withSlot(state: UiState, k: number, slot: SlotState): UiState {
  const slots = state.slots.map((own, j) => (j === k ? slot : own)) as [
    SlotState,
    SlotState,
    SlotState,
  ];
  return { ...state, slots };
}

export function setParam(
  state: UiState,
  k: number,
  key: ParamKey,
  value: number,
): UiState {
  const meta = PARAM_SLIDERS.find((one) => one.key === key);
  if (!meta) throw new Error(`unknown parameter: ${key}`);
  const slot = state.slots[k];
  const params = { ...slot.params, [key]: clampToSlider(meta, value) };
  return withSlot(state, k, { ...slot, params });
}

export function setIBar(state: UiState, k: number, value: number): UiState {
  const slot = state.slots[k];
  return withSlot(state, k, { ...slot, iBar: clampToSlider(I_BAR_SLIDER, value) });
}

export function setRateControl(state: UiState, k: number, on: boolean): UiState {
  const slot = state.slots[k];
  return withSlot(state, k, { ...slot, rateControl: on });
}

/** The M slider stops steering anything while the rate target is engaged. */
export function moneySliderStale(slot: SlotState): boolean {
  return slot.rateControl;
}

export function restoreDefaults(state: UiState): UiState {
  return withSlot(state, 0, freshSlot(DEFAULT_PARAMS));
}

/** Copy the previous slot's parameters and regime into slot k (tabs 2 and 3). */
export function assignFromPrevious(state: UiState, k: 1 | 2): UiState {
  const source = state.slots[k - 1];
  return withSlot(state, k, {
    params: { ...source.params },
    rateControl: source.rateControl,
    iBar: source.iBar,
  });
}

export function toggleVisibility(state: UiState, view: ViewId, k: number): UiState {
  const triple = state.visibility[view].map((on, j) =>
    j === k ? !on : on,
  ) as Triple;
  return { ...state, visibility: { ...state.visibility, [view]: triple } };
}

export function setInputTab(state: UiState, tab: 0 | 1 | 2): UiState {
  return { ...state, inputTab: tab };
}

export function setAnalysisTab(state: UiState, tab: AnalysisTab): UiState {
  return { ...state, analysisTab: tab };
}

export function toDocument(state: UiState): ScenarioDocument {
  const scenarios = state.slots.map((slot, k): ScenarioEntry => {
    const regime: RegimeName = slot.rateControl ? "interest_rate" : "money_supply";
    return {
      name: MODEL_NAMES[k],
      regime,
      ...(slot.rateControl ? { i_bar: slot.iBar } : {}),
      params: { ...slot.params },
    };
  });
  return { scenarios };
}
