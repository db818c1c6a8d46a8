/**
 * What-if explorer: load a knowledge base, enter evidence as it is
 * obtained, and watch the belief gauge and stage waterfall follow the
 * engine. Sensitivity sweeps and the calculus overlay ride on the same
 * stateless API.
 *
 * All belief numbers on screen come from API responses; this module
 * moves them around and formats them but never computes one.
 */

import { ApiClient, ApiRequestError, SupersededError } from "./api.js";
import { el } from "./format.js";
import { WORKED_EXAMPLE } from "./presets.js";
import { debounce, SessionState } from "./state.js";
import type { EvaluateRequest, KbDocument } from "./types.js";
import { FactorPanel } from "./ui/factorPanel.js";
import { BeliefGauge } from "./ui/gauge.js";
import { CalculusOverlay } from "./ui/overlay.js";
import { SweepChart } from "./ui/sweepChart.js";
import { StageWaterfall } from "./ui/waterfall.js";

export interface AppOptions {
  /** evidence-change debounce before calling evaluate (default 150 ms) */
  debounceMs?: number;
}

export class WhatIfApp {
  readonly state = new SessionState();
  readonly gauge = new BeliefGauge();
  readonly waterfall = new StageWaterfall();
  readonly sweepChart = new SweepChart();
  readonly overlay = new CalculusOverlay();
  readonly panel: FactorPanel;

  private readonly api: ApiClient;
  private readonly banners: HTMLElement;
  private readonly hypothesisNode: HTMLElement;
  private readonly priorNode: HTMLElement;
  private readonly sweepFactorSelect: HTMLSelectElement;
  private readonly sweepStepsInput: HTMLInputElement;
  private readonly scheduleEvaluate: () => void;

  /** resolves after the evaluate triggered by the latest change settles */
  private settled: Promise<void> = Promise.resolve();

  constructor(root: HTMLElement, api: ApiClient, options: AppOptions = {}) {
    this.api = api;
    this.panel = new FactorPanel((factorId, patch) => {
      this.state.setEvidence(factorId, patch);
      this.onEvidenceChange();
    });
    this.scheduleEvaluate = debounce(options.debounceMs ?? 150, () => {
      this.settled = this.evaluateNow();
    });

    root.textContent = "";
    const layout = el("div", "layout");

    const aside = el("aside", "kb-panel");
    this.hypothesisNode = el("h1", "hypothesis", "No knowledge base loaded");
    this.priorNode = el("div", "prior-line");
    aside.appendChild(this.hypothesisNode);
    aside.appendChild(this.priorNode);
    aside.appendChild(this.buildKbActions());
    aside.appendChild(this.panel.root);

    const main = el("main", "results");
    this.banners = el("div", "banners");
    main.appendChild(this.banners);
    main.appendChild(this.gauge.root);
    main.appendChild(this.waterfall.root);

    const sweepSection = el("section", "sweep-section");
    sweepSection.appendChild(el("h2", "section-title", "Sensitivity sweep"));
    const sweepControls = el("div", "sweep-controls");
    this.sweepFactorSelect = el("select", "sweep-factor") as HTMLSelectElement;
    this.sweepStepsInput = el("input", "sweep-steps") as HTMLInputElement;
    this.sweepStepsInput.type = "number";
    this.sweepStepsInput.min = "2";
    this.sweepStepsInput.value = "11";
    const sweepButton = el("button", "sweep-run", "Run sweep") as HTMLButtonElement;
    sweepButton.addEventListener("click", () => {
      void this.runSweep(this.sweepFactorSelect.value, Number(this.sweepStepsInput.value));
    });
    sweepControls.appendChild(this.sweepFactorSelect);
    sweepControls.appendChild(this.sweepStepsInput);
    sweepControls.appendChild(sweepButton);
    sweepSection.appendChild(sweepControls);
    sweepSection.appendChild(this.sweepChart.root);
    main.appendChild(sweepSection);

    const overlaySection = el("section", "overlay-section");
    overlaySection.appendChild(el("h2", "section-title", "Calculus comparison"));
    const overlayButton = el("button", "overlay-run", "Compare calculi") as HTMLButtonElement;
    overlayButton.addEventListener("click", () => {
      void this.runCompare();
    });
    overlaySection.appendChild(overlayButton);
    overlaySection.appendChild(this.overlay.root);
    main.appendChild(overlaySection);

    layout.appendChild(aside);
    layout.appendChild(main);
    root.appendChild(layout);
  }

  private buildKbActions(): HTMLElement {
    const actions = el("div", "kb-actions");

    const example = el("button", "load-example", "Load example") as HTMLButtonElement;
    example.addEventListener("click", () => this.loadKb(WORKED_EXAMPLE));
    actions.appendChild(example);

    const fileInput = el("input", "kb-file") as HTMLInputElement;
    fileInput.type = "file";
    fileInput.accept = ".json,application/json";
    fileInput.addEventListener("change", () => {
      const file = fileInput.files?.[0];
      if (file) void this.loadKbFile(file);
    });
    actions.appendChild(fileInput);

    const save = el("button", "save-kb", "Save KB") as HTMLButtonElement;
    save.addEventListener("click", () => this.downloadKb());
    actions.appendChild(save);

    return actions;
  }

  loadKb(doc: KbDocument): void {
    this.state.loadKb(doc);
    this.state.saveToLocalStorage();
    this.hypothesisNode.textContent = doc.hypothesis;
    this.priorNode.textContent = `prior tendency: ${doc.prior ?? 0}`;
    this.panel.render(doc.factors, this.state.evidence);
    this.sweepFactorSelect.textContent = "";
    for (const factor of doc.factors) {
      const opt = el("option", undefined, factor.id) as HTMLOptionElement;
      opt.value = factor.id;
      this.sweepFactorSelect.appendChild(opt);
    }
    this.gauge.clear();
    this.waterfall.clear();
    this.sweepChart.clear();
    this.overlay.clear();
    this.onEvidenceChange();
  }

  private async loadKbFile(file: File): Promise<void> {
    try {
      const doc = JSON.parse(await file.text()) as KbDocument;
      this.loadKb(doc);
    } catch (err) {
      this.addBanner("error", `could not read knowledge base file: ${String(err)}`);
    }
  }

  private downloadKb(): void {
    if (!this.state.kbDocument) return;
    try {
      const blob = new Blob([JSON.stringify(this.state.kbDocument, null, 2)], {
        type: "application/json",
      });
      const link = document.createElement("a");
      link.href = URL.createObjectURL(blob);
      link.download = "knowledge-base.kb.json";
      link.click();
      URL.revokeObjectURL(link.href);
    } catch {
      this.addBanner("error", "saving is not available in this browser");
    }
  }

  /** Debounced entry point for every control change. */
  onEvidenceChange(): void {
    if (!this.state.kbDocument) return;
    this.gauge.setPending(true);
    this.scheduleEvaluate();
  }

  /** Awaitable by tests: resolves once the pending evaluation rendered. */
  whenSettled(): Promise<void> {
    return this.settled;
  }

  private buildRequest(): EvaluateRequest {
    const doc = this.state.kbDocument;
    if (!doc) throw new Error("no knowledge base loaded");
    return { kb: doc, evidence: this.state.evidenceEntries() };
  }

  private async evaluateNow(): Promise<void> {
    try {
      const response = await this.api.evaluate(this.buildRequest());
      this.state.lastResponse = response;
      this.gauge.update(response.belief);
      this.waterfall.update(response.trace);
      for (const warning of response.warnings) {
        this.addBanner("warning", warning);
      }
      this.gauge.setPending(false);
    } catch (err) {
      if (err instanceof SupersededError) return; // a newer evaluation is on its way
      this.gauge.setPending(false);
      if (err instanceof ApiRequestError && err.status === 400) {
        this.panel.showInvalidKb(err.message, err.path);
        this.addBanner("error", err.message);
      } else {
        this.addBanner("error", err instanceof Error ? err.message : String(err));
      }
    }
  }

  async runSweep(factorId: string, steps: number): Promise<void> {
    if (!this.state.kbDocument || !factorId) return;
    try {
      let response = this.state.cachedSweep(factorId, steps);
      if (!response) {
        response = await this.api.sweep({ ...this.buildRequest(), factor_id: factorId, steps });
        this.state.cacheSweep(factorId, steps, response);
      }
      const evidence = this.state.evidence.get(factorId);
      const currentEta =
        evidence && evidence.mode === "strength" ? evidence.eta : null;
      this.sweepChart.update(response.rows, currentEta);
    } catch (err) {
      const message = err instanceof Error ? err.message : String(err);
      this.sweepChart.showError(message);
      this.addBanner("error", message);
    }
  }

  async runCompare(): Promise<void> {
    if (!this.state.kbDocument) return;
    try {
      const response = await this.api.compare(this.buildRequest());
      this.overlay.update(response.rows);
    } catch (err) {
      if (err instanceof ApiRequestError && err.status === 422) {
        this.overlay.showUnsupported(err.message);
        return;
      }
      this.addBanner("error", err instanceof Error ? err.message : String(err));
    }
  }

  addBanner(kind: "error" | "warning", text: string): void {
    const banner = el("div", `banner banner-${kind}`);
    banner.appendChild(el("span", "banner-text", text));
    const dismiss = el("button", "banner-dismiss", "dismiss") as HTMLButtonElement;
    dismiss.addEventListener("click", () => banner.remove());
    banner.appendChild(dismiss);
    this.banners.appendChild(banner);
  }
}
