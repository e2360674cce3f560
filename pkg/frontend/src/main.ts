/** Page bootstrap: renders the two sections, wires delegated events, and
 * schedules service requests through the throttled coordinator. Slider drags
 * update state and the value readout in place; the analysis section lives in
 * its own container, so re-rendering results never disturbs an active drag.
 */

import {
  ApiClient,
  type ParamKey,
  resolveBaseUrl,
  ServiceError,
} from "./api.js";
import { RequestCoordinator } from "./coordinator.js";
import {
  type AnalysisTab,
  assignFromPrevious,
  initialState,
  PARAM_SLIDERS,
  restoreDefaults,
  setAnalysisTab,
  setIBar,
  setInputTab,
  setParam,
  setRateControl,
  stateFromDocument,
  toDocument,
  toggleVisibility,
  type ViewId,
} from "./state.js";
import {
  emptyData,
  renderAnalysisSection,
  renderInputSection,
} from "./views.js";

function bootstrap(): void {
  const inputsEl = document.getElementById("inputs");
  const analysisEl = document.getElementById("analysis");
  if (!inputsEl || !analysisEl) {
    throw new Error("page shell is missing #inputs or #analysis");
  }

  const client = new ApiClient(resolveBaseUrl(window.location.search));
  let state = initialState();
  const data = emptyData();

  const coordinator = new RequestCoordinator(100, (version) => {
    void refresh(version);
  });

  function renderInputs(): void {
    inputsEl!.innerHTML = renderInputSection(state);
  }

  function renderAnalysis(): void {
    analysisEl!.innerHTML = renderAnalysisSection(state, data);
  }

  async function refresh(version: number): Promise<void> {
    const doc = toDocument(state);
    try {
      const [solve, islm, money, goods, compare] = await Promise.all([
        client.solve(doc),
        client.curves(doc, "islm"),
        client.curves(doc, "money"),
        client.curves(doc, "goods"),
        client.compare(doc, [1, 2, 3]),
      ]);
      if (!coordinator.isCurrent(version)) return; // a newer batch is due
      data.solve = solve;
      data.curves = { islm, money, goods };
      data.compare = compare;
      data.error = null;
    } catch (err) {
      if (!coordinator.isCurrent(version)) return;
      data.error =
        err instanceof ServiceError
          ? err.message
          : `service unreachable at ${client.base}`;
    }
    renderAnalysis();
  }

  inputsEl.addEventListener("input", (event) => {
    const el = event.target as HTMLInputElement;
    if (!(el instanceof HTMLInputElement)) return;
    const slot = Number(el.dataset.slot);
    if (el.dataset.param !== undefined) {
      const key = el.dataset.param as ParamKey;
      state = setParam(state, slot, key, el.valueAsNumber);
      const meta = PARAM_SLIDERS.find((one) => one.key === key);
      const out = inputsEl.querySelector(
        `output[data-output="${key}"][data-slot="${slot}"]`,
      );
      if (out && meta) {
        const value = state.slots[slot].params[key];
        out.textContent = meta.step >= 1 ? value.toFixed(0) : value.toFixed(2);
      }
      coordinator.bump();
    } else if (el.dataset.ibar !== undefined) {
      state = setIBar(state, slot, el.valueAsNumber);
      const out = inputsEl.querySelector(
        `output[data-output="i_bar"][data-slot="${slot}"]`,
      );
      if (out) out.textContent = state.slots[slot].iBar.toFixed(2);
      coordinator.bump();
    }
  });

  inputsEl.addEventListener("change", (event) => {
    const el = event.target as HTMLInputElement;
    if (!(el instanceof HTMLInputElement)) return;
    if (el.dataset.regime !== undefined) {
      state = setRateControl(state, Number(el.dataset.slot), el.checked);
      renderInputs();
      coordinator.bump();
    }
  });

  inputsEl.addEventListener("click", (event) => {
    const el = (event.target as HTMLElement).closest<HTMLElement>(
      "[data-input-tab],[data-action]",
    );
    if (!el) return;
    if (el.dataset.inputTab !== undefined) {
      state = setInputTab(state, Number(el.dataset.inputTab) as 0 | 1 | 2);
      renderInputs();
    } else if (el.dataset.action === "restore") {
      state = restoreDefaults(state);
      renderInputs();
      coordinator.bump();
    } else if (el.dataset.action === "assign") {
      state = assignFromPrevious(state, Number(el.dataset.slot) as 1 | 2);
      renderInputs();
      coordinator.bump();
    }
  });

  analysisEl.addEventListener("click", (event) => {
    const el = (event.target as HTMLElement).closest<HTMLElement>(
      "[data-analysis-tab],[data-toggle-view]",
    );
    if (!el) return;
    if (el.dataset.analysisTab !== undefined) {
      state = setAnalysisTab(state, el.dataset.analysisTab as AnalysisTab);
      renderAnalysis();
    } else if (el.dataset.toggleView !== undefined) {
      // curves responses carry every slot, so toggling only re-renders
      state = toggleVisibility(
        state,
        el.dataset.toggleView as ViewId,
        Number(el.dataset.toggleSlot),
      );
      renderAnalysis();
    }
  });

  renderInputs();
  renderAnalysis();

  void (async () => {
    try {
      const doc = await client.defaults();
      state = stateFromDocument(doc);
      renderInputs();
    } catch {
      data.error = `could not reach the service at ${client.base}; adjust ?api=... if it runs elsewhere`;
    }
    coordinator.bump();
  })();
}

bootstrap();
