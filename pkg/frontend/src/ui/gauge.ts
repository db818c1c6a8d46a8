/** Final-belief gauge: one big server-provided number plus a fill bar. */

import { el, formatBelief } from "../format.js";

export class BeliefGauge {
  readonly root: HTMLElement;
  private readonly valueNode: HTMLElement;
  private readonly fillNode: HTMLElement;

  constructor() {
    this.root = el("section", "gauge");
    this.root.appendChild(el("h2", "section-title", "Degree of belief"));
    this.valueNode = el("div", "gauge-value", "—");
    const track = el("div", "gauge-track");
    this.fillNode = el("div", "gauge-fill");
    track.appendChild(this.fillNode);
    this.root.appendChild(this.valueNode);
    this.root.appendChild(track);
  }

  /** Dim while a request is in flight; controls elsewhere stay live. */
  setPending(pending: boolean): void {
    this.root.classList.toggle("pending", pending);
  }

  update(belief: number): void {
    this.valueNode.textContent = formatBelief(belief);
    this.fillNode.style.width = `${belief * 100}%`;
  }

  clear(): void {
    this.valueNode.textContent = "—";
    this.fillNode.style.width = "0%";
  }
}
