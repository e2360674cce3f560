/** HTML renderers. Every function returns a markup string from (state, data)
 * alone; event wiring happens once in main.ts via delegation on data-*
 * attributes, so these stay testable without a DOM.
 */

import type {
  CompareResponse,
  CurvesResponse,
  EquilibriumOut,
  PlotId,
  SeriesOut,
  SolveResponse,
} from "./api.js";
import {
  type ChartMarker,
  type ChartSeries,
  escapeXml,
  lineChart,
  SEGMENT_OPACITY,
  stackedBarChart,
} from "./charts.js";
import {
  I_BAR_SLIDER,
  MODEL_COLORS,
  MODEL_NAMES,
  moneySliderStale,
  PARAM_SLIDERS,
  type SliderMeta,
  type UiState,
  type ViewId,
} from "./state.js";

export interface AnalysisData {
  solve: SolveResponse | null;
  curves: Partial<Record<PlotId, CurvesResponse>>;
  compare: CompareResponse | null;
  error: string | null;
}

export function emptyData(): AnalysisData {
  return { solve: null, curves: {}, compare: null, error: null };
}

const esc = escapeXml;

function fmt(v: number): string {
  return v.toFixed(2);
}

function fmtSlider(meta: { step: number }, v: number): string {
  return meta.step >= 1 ? v.toFixed(0) : v.toFixed(2);
}

/** 1-based slots toggled on for a view. */
export function visibleSlots(state: UiState, view: ViewId): number[] {
  const out: number[] = [];
  state.visibility[view].forEach((on, idx) => {
    if (on) out.push(idx + 1);
  });
  return out;
}

// ---------------------------------------------------------------------------
// input section

function sliderRow(
  meta: SliderMeta,
  slot: number,
  value: number,
  stale: boolean,
): string {
  const id = `param-${slot}-${meta.key}`;
  const staleBadge = stale
    ? `<span class="stale" title="Set by the rate target; this slider has no effect until Interest Rate Control is released">stale</span>`
    : "";
  const unit = meta.unit ? ` <span class="unit">${esc(meta.unit)}</span>` : "";
  return (
    `<div class="slider-row">` +
    `<label for="${id}">${esc(meta.label)}${staleBadge}</label>` +
    `<input type="range" id="${id}" data-param="${meta.key}" data-slot="${slot}" ` +
    `min="${meta.lo}" max="${meta.hi}" step="${meta.step}" value="${value}">` +
    `<output data-output="${meta.key}" data-slot="${slot}">${fmtSlider(meta, value)}</output>${unit}` +
    `</div>`
  );
}

export function renderInputSection(state: UiState): string {
  const tabs = MODEL_NAMES.map((name, idx) => {
    const active = state.inputTab === idx ? " active" : "";
    return (
      `<button class="tab${active}" role="tab" data-input-tab="${idx}" ` +
      `style="--model:${MODEL_COLORS[idx]}" aria-selected="${state.inputTab === idx}">` +
      `${esc(name)}</button>`
    );
  }).join("");

  const k = state.inputTab;
  const slot = state.slots[k];
  const action =
    k === 0
      ? `<button class="action" data-action="restore">Restore Defaults</button>`
      : `<button class="action" data-action="assign" data-slot="${k}">Assign Values of ${esc(MODEL_NAMES[k - 1])}</button>`;

  const stale = moneySliderStale(slot);
  const rows = PARAM_SLIDERS.map((meta) =>
    sliderRow(meta, k, slot.params[meta.key], stale && meta.key === "M"),
  ).join("");

  const checked = slot.rateControl ? " checked" : "";
  const disabled = slot.rateControl ? "" : " disabled";
  const note = slot.rateControl
    ? `<p class="regime-note">The nominal rate is pinned at ${fmt(slot.iBar)}%; the money stock adjusts to whatever the money market needs.</p>`
    : "";
  const regime =
    `<div class="regime">` +
    `<label class="regime-toggle"><input type="checkbox" data-regime data-slot="${k}"${checked}> Interest Rate Control</label>` +
    `<div class="slider-row">` +
    `<label for="ibar-${k}">${esc(I_BAR_SLIDER.label)}</label>` +
    `<input type="range" id="ibar-${k}" data-ibar data-slot="${k}" ` +
    `min="${I_BAR_SLIDER.lo}" max="${I_BAR_SLIDER.hi}" step="${I_BAR_SLIDER.step}" value="${slot.iBar}"${disabled}>` +
    `<output data-output="i_bar" data-slot="${k}">${fmt(slot.iBar)}</output> <span class="unit">%</span>` +
    `</div>${note}</div>`;

  return (
    `<h2>Parameters</h2>` +
    `<div class="tabs" role="tablist">${tabs}</div>` +
    `<div class="slot-panel" data-active-slot="${k}">${action}${rows}${regime}</div>`
  );
}

// ---------------------------------------------------------------------------
// analysis section

function toggleRow(state: UiState, view: ViewId, title: string): string {
  const buttons = MODEL_NAMES.map((name, idx) => {
    const on = state.visibility[view][idx];
    return (
      `<button class="model-toggle" data-toggle-view="${view}" data-toggle-slot="${idx}" ` +
      `style="--model:${MODEL_COLORS[idx]}" aria-pressed="${on}">${esc(name)}</button>`
    );
  }).join("");
  return `<div class="toggles"><span class="toggles-title">${esc(title)}</span>${buttons}</div>`;
}

function banner(data: AnalysisData): string {
  if (!data.error) return "";
  return `<div class="banner" role="alert">${esc(data.error)}</div>`;
}

function resultFor(data: AnalysisData, slot: number): EquilibriumOut | null {
  if (!data.solve) return null;
  return data.solve.results.find((one) => one.slot === slot) ?? null;
}

function diagnosticLabel(raw: string): string {
  return raw.replace(/_/g, " ");
}

function valuesPanel(state: UiState, data: AnalysisData): string {
  const slots = visibleSlots(state, "overview");
  if (slots.length === 0) {
    return `<p class="placeholder">No model selected.</p>`;
  }
  const heads = slots
    .map((k) => {
      const eq = resultFor(data, k);
      return `<th><span class="chip" style="--model:${MODEL_COLORS[k - 1]}"></span>${esc(eq?.name ?? MODEL_NAMES[k - 1])}</th>`;
    })
    .join("");
  const row = (label: string, cell: (eq: EquilibriumOut) => string): string => {
    const cells = slots
      .map((k) => {
        const eq = resultFor(data, k);
        return `<td>${eq ? cell(eq) : "—"}</td>`;
      })
      .join("");
    return `<tr><th scope="row">${label}</th>${cells}</tr>`;
  };
  const badges = (eq: EquilibriumOut): string => {
    const parts: string[] = [];
    if (eq.at_zlb) parts.push(`<span class="badge zlb">rate floor</span>`);
    for (const d of eq.diagnostics) {
      parts.push(`<span class="badge warn">${esc(diagnosticLabel(d))}</span>`);
    }
    return parts.length > 0 ? parts.join(" ") : `<span class="badge ok">ok</span>`;
  };
  return (
    `<table class="values">` +
    `<thead><tr><th></th>${heads}</tr></thead><tbody>` +
    row("Output Y* (CU)", (eq) => fmt(eq.Y_star)) +
    row("Nominal rate i* (%)", (eq) => fmt(eq.i_star)) +
    row("Real rate r* (%)", (eq) => fmt(eq.r_star)) +
    row("Money stock M (CU)", (eq) => fmt(eq.M_realized)) +
    row("Budget balance T − G (CU)", (eq) => fmt(eq.budget_balance)) +
    row("Flags", badges) +
    `</tbody></table>`
  );
}

function compositionChart(state: UiState, data: AnalysisData): string {
  const slots = visibleSlots(state, "overview");
  const bars = slots.flatMap((k) => {
    const eq = resultFor(data, k);
    if (!eq) return [];
    return [
      {
        label: eq.name,
        color: MODEL_COLORS[k - 1],
        segments: [
          { name: "C", value: eq.composition.C },
          { name: "I", value: eq.composition.I },
          { name: "G", value: eq.composition.G },
          { name: "NX", value: eq.composition.NX },
        ],
      },
    ];
  });
  const legend = ["C", "I", "G", "NX"]
    .map(
      (name, idx) =>
        `<span class="legend-item"><span class="swatch" style="opacity:${SEGMENT_OPACITY[idx]}"></span>${name}</span>`,
    )
    .join("");
  return (
    `<div class="legend">${legend}</div>` +
    stackedBarChart({ yLabel: "Demand contribution (CU)", bars })
  );
}

function compareBlock(data: AnalysisData): string {
  if (!data.compare || data.compare.columns.length < 2) return "";
  const { columns, deltas } = data.compare;
  const heads = columns
    .map(
      (col) =>
        `<th><span class="chip" style="--model:${MODEL_COLORS[col.slot - 1]}"></span>${esc(col.name)}</th>`,
    )
    .join("");
  const deltaHeads = deltas
    .map((d) => `<th>Δ (${d.to_slot} − ${d.from_slot})</th>`)
    .join("");
  const row = (
    label: string,
    col: (c: (typeof columns)[number]) => string,
    delta: (d: (typeof deltas)[number]) => string,
  ): string =>
    `<tr><th scope="row">${label}</th>` +
    columns.map((c) => `<td>${col(c)}</td>`).join("") +
    deltas.map((d) => `<td class="delta">${delta(d)}</td>`).join("") +
    `</tr>`;
  const signed = (v: number): string => (v >= 0 ? `+${fmt(v)}` : fmt(v));
  return (
    `<h3>Comparison</h3>` +
    `<table class="values compare">` +
    `<thead><tr><th></th>${heads}${deltaHeads}</tr></thead><tbody>` +
    row("Output Y* (CU)", (c) => fmt(c.Y_star), (d) => signed(d.Y_star)) +
    row("Nominal rate i* (%)", (c) => fmt(c.i_star), (d) => signed(d.i_star)) +
    row("Money stock M (CU)", (c) => fmt(c.M_realized), (d) => signed(d.M_realized)) +
    row("Investment I (CU)", (c) => fmt(c.I), (d) => signed(d.I)) +
    row("Budget balance (CU)", (c) => fmt(c.budget_balance), (d) => signed(d.budget_balance)) +
    `</tbody></table>`
  );
}

interface PlotSpec {
  id: PlotId;
  title: string;
  xLabel: string;
  yLabel: string;
}

const PLOT_SPECS: readonly PlotSpec[] = [
  { id: "islm", title: "IS-LM", xLabel: "Output Y (CU)", yLabel: "Nominal rate i (%)" },
  { id: "money", title: "Money market", xLabel: "Real balances M/P (CU)", yLabel: "Nominal rate i (%)" },
  { id: "goods", title: "Goods market", xLabel: "Output Y (CU)", yLabel: "Demand ZZ (CU)" },
];

function seriesStyle(one: SeriesOut): { dashed: boolean; shared: boolean } {
  switch (one.curve_kind) {
    case "LM":
    case "MoneySupply":
      return { dashed: true, shared: false };
    case "FortyFiveDegree":
      return { dashed: true, shared: true };
    default:
      return { dashed: false, shared: false };
  }
}

function markerFor(plot: PlotId, eq: EquilibriumOut, price: number): ChartMarker {
  const color = MODEL_COLORS[eq.slot - 1];
  const label = `${eq.name}: Y*=${fmt(eq.Y_star)}, i*=${fmt(eq.i_star)}`;
  switch (plot) {
    case "islm":
      return { x: eq.Y_star, y: eq.i_star, color, label };
    case "money":
      return { x: eq.M_realized / price, y: eq.i_star, color, label };
    case "goods":
      return { x: eq.Y_star, y: eq.Y_star, color, label };
  }
}

function plotFigure(state: UiState, data: AnalysisData, spec: PlotSpec): string {
  const slots = visibleSlots(state, spec.id);
  const curves = data.curves[spec.id];
  const series: ChartSeries[] = [];
  let sharedDrawn = false;
  if (curves) {
    for (const one of curves.series) {
      if (!slots.includes(one.slot)) continue;
      const style = seriesStyle(one);
      if (style.shared) {
        if (sharedDrawn) continue; // one 45-degree line is enough
        sharedDrawn = true;
        series.push({
          label: "45°",
          color: "#9a9a9a",
          points: one.points,
          dashed: true,
        });
        continue;
      }
      series.push({
        label: `${one.scenario} ${one.curve_kind}`,
        color: MODEL_COLORS[one.slot - 1],
        points: one.points,
        dashed: style.dashed,
      });
    }
  }
  const markers: ChartMarker[] = [];
  for (const k of slots) {
    const eq = resultFor(data, k);
    if (eq) markers.push(markerFor(spec.id, eq, state.slots[k - 1].params.P));
  }
  return (
    `<figure class="plot">` +
    `<figcaption>${esc(spec.title)}</figcaption>` +
    toggleRow(state, spec.id, "") +
    lineChart({ xLabel: spec.xLabel, yLabel: spec.yLabel, series, markers }) +
    `</figure>`
  );
}

export function renderResultsTab(state: UiState, data: AnalysisData): string {
  const plots = PLOT_SPECS.map((spec) => plotFigure(state, data, spec)).join("");
  return (
    banner(data) +
    `<div class="overview">` +
    toggleRow(state, "overview", "Models") +
    `<div class="overview-grid">` +
    `<div class="values-panel"><h3>Equilibrium</h3>${valuesPanel(state, data)}</div>` +
    `<div class="composition"><h3>GDP composition</h3>${compositionChart(state, data)}</div>` +
    `</div>` +
    compareBlock(data) +
    `</div>` +
    `<div class="plots">${plots}</div>`
  );
}

export function renderSetupTab(): string {
  return (
    `<div class="prose">` +
    `<h3>Goods market</h3>` +
    `<p class="eq">(1)&nbsp;&nbsp;Y = C + I + G + NX</p>` +
    `<p class="eq">C = A + c·(Y − T)</p>` +
    `<p class="eq">I = B − b·(i − πᵉ)</p>` +
    `<p>Output equals planned spending: consumption rises with disposable income, investment falls with the expected real rate.</p>` +
    `<h3>Money market</h3>` +
    `<p class="eq">(2)&nbsp;&nbsp;i = max(0, (h₁/h₂)·Y − M/(h₂·P))</p>` +
    `<p class="eq">L = h₁·Y − h₂·i</p>` +
    `<p>Real money demand L rises with activity and falls with the nominal rate. ` +
    `The rate clearing the market is floored at zero: when real balances are plentiful, ` +
    `the economy sits at the floor and output is set by the goods market alone.</p>` +
    `<h3>Policy regimes</h3>` +
    `<p><strong>Money supply control</strong>: M is exogenous and the nominal rate clears the money market.</p>` +
    `<p><strong>Interest rate control</strong>: the rate is pinned at the target ī and the money stock ` +
    `accommodates, M = P·(h₁·Y − h₂·ī).</p>` +
    `<h3>Notation</h3>` +
    `<dl class="notation">` +
    `<dt>Y, i, r</dt><dd>output, nominal rate, real rate r = i − πᵉ</dd>` +
    `<dt>A, c</dt><dd>autonomous consumption and the propensity to consume out of disposable income</dd>` +
    `<dt>T, G, NX</dt><dd>taxes, government spending, net exports</dd>` +
    `<dt>B, b</dt><dd>autonomous investment and its sensitivity to the real rate</dd>` +
    `<dt>πᵉ</dt><dd>expected inflation</dd>` +
    `<dt>h₁, h₂</dt><dd>money-demand weights on output and on the rate</dd>` +
    `<dt>M, P</dt><dd>money stock and price level</dd>` +
    `</dl>` +
    `</div>`
  );
}

export function renderInstructionsTab(): string {
  return (
    `<div class="prose">` +
    `<p>The workbench holds three models side by side. Adjust a model, toggle it onto the charts, and read the differences off the comparison table.</p>` +
    `<ol>` +
    `<li>Start on the <strong>Model 1</strong> tab. Drag any slider; the equilibrium, the GDP bars and the plots update as you drag.</li>` +
    `<li>Switch to <strong>Model 2</strong> and press <strong>Assign Values of Model 1</strong> to copy the current baseline, then change the one parameter you want to study.</li>` +
    `<li>Use the colored buttons above each chart to add or remove a model from that chart. Colors identify models everywhere.</li>` +
    `<li>Engage <strong>Interest Rate Control</strong> to pin a model's nominal rate: the money stock then adjusts on its own and the M slider is marked stale until you release the toggle.</li>` +
    `<li><strong>Restore Defaults</strong> on the Model 1 tab returns the baseline calibration; the Comparison table lists consecutive model differences.</li>` +
    `</ol>` +
    `<p>The page talks to the equilibrium service at <code>127.0.0.1:8080</code> by default; point it elsewhere with <code>?api=http://host:port</code>.</p>` +
    `</div>`
  );
}

export function renderAnalysisSection(state: UiState, data: AnalysisData): string {
  const tabs = (
    [
      ["results", "Results"],
      ["setup", "Model Set-up"],
      ["instructions", "Instructions"],
    ] as const
  )
    .map(([id, label]) => {
      const active = state.analysisTab === id ? " active" : "";
      return (
        `<button class="tab${active}" role="tab" data-analysis-tab="${id}" ` +
        `aria-selected="${state.analysisTab === id}">${label}</button>`
      );
    })
    .join("");
  let body: string;
  switch (state.analysisTab) {
    case "results":
      body = renderResultsTab(state, data);
      break;
    case "setup":
      body = renderSetupTab();
      break;
    case "instructions":
      body = renderInstructionsTab();
      break;
  }
  return (
    `<h2>Analysis</h2>` +
    `<div class="tabs" role="tablist">${tabs}</div>` +
    `<div class="analysis-body">${body}</div>`
  );
}
