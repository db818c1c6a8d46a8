/**
 * Stage waterfall: the prior followed by the belief after each pipeline
 * stage. Labels and order come verbatim from the trace in the last
 * evaluate response, one bar per value, so the display can never drift
 * from what the engine actually did.
 */

import { el, formatBelief } from "../format.js";
import type { StageRecordObj } from "../types.js";

export class StageWaterfall {
  readonly root: HTMLElement;
  private readonly bars: HTMLElement;

  constructor() {
    this.root = el("section", "waterfall");
    this.root.appendChild(el("h2", "section-title", "Stage waterfall"));
    this.bars = el("div", "waterfall-bars");
    this.root.appendChild(this.bars);
  }

  update(trace: StageRecordObj[]): void {
    this.bars.textContent = "";
    if (trace.length === 0) return;
    const first = trace[0]!;
    const points: Array<{ label: string; value: number }> = [
      { label: "prior", value: first.belief_before },
      ...trace.map((stage) => ({ label: stage.stage, value: stage.belief_after })),
    ];
    for (const point of points) {
      const item = el("div", "waterfall-item");
      const bar = el("div", "waterfall-bar");
      bar.style.height = `${Math.round(point.value * 120)}px`;
      item.appendChild(el("div", "waterfall-value", formatBelief(point.value)));
      item.appendChild(bar);
      item.appendChild(el("div", "waterfall-label", point.label));
      this.bars.appendChild(item);
    }
  }

  clear(): void {
    this.bars.textContent = "";
  }
}
