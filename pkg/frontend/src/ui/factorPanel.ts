/**
 * Knowledge-base panel: one row per factor showing its role badges,
 * intensities and margins, plus the evidence control for that factor.
 *
 * Interval-scaled factors get a slider that can operate on the value
 * scale (constrained to the margins) or directly on the evidential
 * strength in [0, 1], or be set to Unknown. Nominal/ordinal factors get
 * a present / absent / unknown tri-state, which maps to strength 1 / 0 /
 * no evidence.
 */

import { el } from "../format.js";
import type { FactorEvidenceState } from "../state.js";
import type { FactorObj } from "../types.js";

export type EvidencePatch = Partial<FactorEvidenceState>;
export type EvidenceChangeHandler = (factorId: string, patch: EvidencePatch) => void;

const STRENGTH_STEP = 0.01;

function marginsText(factor: FactorObj): string {
  const { v_low, v_high, units } = factor.scale;
  const span = `[${v_low}, ${v_high}]`;
  return units ? `${span} ${units}` : span;
}

export class FactorPanel {
  readonly root: HTMLElement;
  private readonly rows: HTMLElement;
  private readonly diagnostics: HTMLElement;
  private readonly onChange: EvidenceChangeHandler;

  constructor(onChange: EvidenceChangeHandler) {
    this.onChange = onChange;
    this.root = el("div", "factor-panel");
    this.rows = el("div", "factor-rows");
    this.diagnostics = el("div", "kb-diagnostics");
    this.root.appendChild(this.rows);
    this.root.appendChild(this.diagnostics);
  }

  /** Replace the panel content with diagnostics; no controls rendered. */
  showInvalidKb(message: string, path: string | null): void {
    this.rows.textContent = "";
    this.diagnostics.textContent = "";
    const where = path ? `${path}: ` : "";
    this.diagnostics.appendChild(el("div", "kb-diagnostic", `${where}${message}`));
  }

  render(factors: FactorObj[], evidence: Map<string, FactorEvidenceState>): void {
    this.rows.textContent = "";
    this.diagnostics.textContent = "";
    for (const factor of factors) {
      const state = evidence.get(factor.id);
      if (state) this.rows.appendChild(this.renderRow(factor, state));
    }
  }

  private renderRow(factor: FactorObj, state: FactorEvidenceState): HTMLElement {
    const row = el("div", "factor-row");
    row.dataset.factor = factor.id;

    const head = el("div", "factor-head");
    head.appendChild(el("span", "factor-id", factor.id));
    if (factor.label) head.appendChild(el("span", "factor-label", factor.label));
    for (const role of factor.roles) {
      head.appendChild(
        el("span", `badge badge-${role.kind}`, `${role.kind} ${role.intensity}`),
      );
    }
    if (factor.scale.kind === "interval") {
      head.appendChild(el("span", "factor-margins", marginsText(factor)));
    } else {
      head.appendChild(el("span", "factor-margins", factor.scale.kind));
    }
    if ((factor.sharpness ?? 1) !== 1) {
      head.appendChild(el("span", "factor-sharpness", `sharpness ${factor.sharpness}`));
    }
    row.appendChild(head);

    const controls = el("div", "factor-controls");
    if (factor.scale.kind === "interval") {
      this.renderIntervalControls(controls, factor, state);
    } else {
      this.renderTriState(controls, factor, state);
    }
    row.appendChild(controls);
    return row;
  }

  private renderIntervalControls(
    container: HTMLElement,
    factor: FactorObj,
    state: FactorEvidenceState,
  ): void {
    const mode = el("select", "evidence-mode") as HTMLSelectElement;
    for (const option of ["unknown", "value", "strength"] as const) {
      const opt = el("option", undefined, option) as HTMLOptionElement;
      opt.value = option;
      mode.appendChild(opt);
    }
    mode.value = state.mode;

    const slider = el("input", "evidence-slider") as HTMLInputElement;
    slider.type = "range";
    const readout = el("span", "evidence-readout");

    const low = factor.scale.v_low ?? 0;
    const high = factor.scale.v_high ?? 1;
    let current: FactorEvidenceState = { ...state };

    const applyMode = () => {
      if (current.mode === "value") {
        slider.min = String(low);
        slider.max = String(high);
        slider.step = String((high - low) / 100);
        slider.value = String(current.value);
        slider.disabled = false;
        readout.textContent = slider.value;
      } else if (current.mode === "strength") {
        slider.min = "0";
        slider.max = "1";
        slider.step = String(STRENGTH_STEP);
        slider.value = String(current.eta);
        slider.disabled = false;
        readout.textContent = slider.value;
      } else {
        slider.disabled = true;
        readout.textContent = "unknown";
      }
    };
    applyMode();

    mode.addEventListener("change", () => {
      current = { ...current, mode: mode.value as FactorEvidenceState["mode"] };
      applyMode();
      this.onChange(factor.id, { mode: current.mode });
    });
    slider.addEventListener("input", () => {
      const position = Number(slider.value);
      readout.textContent = slider.value;
      if (current.mode === "value") {
        current = { ...current, value: position };
        this.onChange(factor.id, { value: position });
      } else {
        current = { ...current, eta: position };
        this.onChange(factor.id, { eta: position });
      }
    });

    container.appendChild(mode);
    container.appendChild(slider);
    container.appendChild(readout);
  }

  private renderTriState(
    container: HTMLElement,
    factor: FactorObj,
    state: FactorEvidenceState,
  ): void {
    const select = el("select", "evidence-tristate") as HTMLSelectElement;
    for (const option of ["unknown", "present", "absent"]) {
      const opt = el("option", undefined, option) as HTMLOptionElement;
      opt.value = option;
      select.appendChild(opt);
    }
    select.value =
      state.mode === "unknown" ? "unknown" : state.eta >= 1 ? "present" : "absent";
    select.addEventListener("change", () => {
      if (select.value === "unknown") {
        this.onChange(factor.id, { mode: "unknown" });
      } else {
        this.onChange(factor.id, {
          mode: "strength",
          eta: select.value === "present" ? 1 : 0,
        });
      }
    });
    container.appendChild(select);
  }
}
