/**
 * Calculus comparison overlay: the role pipeline's belief next to the
 * MYCIN/EMYCIN certainty factors and both Dempster-Shafer variants.
 * Only supportive/adverse knowledge bases are comparable; for anything
 * else the engine refuses and the overlay greys out with its message.
 */

import { el, formatBelief } from "../format.js";
import type { CompareRowObj } from "../types.js";

export class CalculusOverlay {
  readonly root: HTMLElement;
  private readonly body: HTMLElement;

  constructor() {
    this.root = el("section", "overlay");
    this.body = el("div", "overlay-body");
    this.root.appendChild(this.body);
  }

  update(rows: CompareRowObj[]): void {
    this.root.classList.remove("unsupported");
    this.body.textContent = "";
    for (const row of rows) {
      const item = el("div", "overlay-row");
      item.appendChild(el("span", "overlay-name", row.calculus));
      const track = el("div", "overlay-track");
      const fill = el("div", "overlay-fill");
      // certainty factors live in [-1, 1]; beliefs in [0, 1]
      const magnitude = Math.min(1, Math.abs(row.value));
      fill.style.width = `${magnitude * 100}%`;
      if (row.value < 0) fill.classList.add("negative");
      track.appendChild(fill);
      item.appendChild(track);
      item.appendChild(el("span", "overlay-value", formatBelief(row.value)));
      this.body.appendChild(item);
    }
  }

  showUnsupported(message: string): void {
    this.root.classList.add("unsupported");
    this.body.textContent = "";
    this.body.appendChild(el("div", "overlay-unsupported", message));
  }

  clear(): void {
    this.root.classList.remove("unsupported");
    this.body.textContent = "";
  }
}
