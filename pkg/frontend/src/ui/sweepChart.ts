/**
 * Sensitivity chart: belief versus the swept strength of one factor,
 * with the factor's current strength marked when it has one. Points are
 * the server's sweep rows, untouched.
 */

import { el, formatBelief, svgEl } from "../format.js";
import type { SweepRowObj } from "../types.js";

const WIDTH = 560;
const HEIGHT = 220;
const PAD = 34;

export class SweepChart {
  readonly root: HTMLElement;
  private readonly plot: HTMLElement;

  constructor() {
    this.root = el("section", "sweep-chart");
    this.plot = el("div", "sweep-plot");
    this.root.appendChild(this.plot);
  }

  private x(eta: number): number {
    return PAD + eta * (WIDTH - 2 * PAD);
  }

  private y(belief: number): number {
    return HEIGHT - PAD - belief * (HEIGHT - 2 * PAD);
  }

  update(rows: SweepRowObj[], currentEta: number | null): void {
    this.plot.textContent = "";
    const svg = svgEl("svg", {
      viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
      width: WIDTH,
      height: HEIGHT,
      role: "img",
    });
    svg.classList.add("sweep-svg");

    // axes
    svg.appendChild(svgEl("line", {
      x1: PAD, y1: HEIGHT - PAD, x2: WIDTH - PAD, y2: HEIGHT - PAD, class: "axis",
    }));
    svg.appendChild(svgEl("line", {
      x1: PAD, y1: PAD, x2: PAD, y2: HEIGHT - PAD, class: "axis",
    }));

    const points = rows.map((row) => `${this.x(row.eta)},${this.y(row.belief)}`);
    svg.appendChild(svgEl("polyline", { points: points.join(" "), class: "sweep-line" }));

    for (const row of rows) {
      const dot = svgEl("circle", {
        cx: this.x(row.eta), cy: this.y(row.belief), r: 3, class: "sweep-dot",
        "data-eta": row.eta, "data-belief": row.belief,
      });
      const title = svgEl("title");
      title.textContent = `eta ${row.eta} -> ${formatBelief(row.belief)}`;
      dot.appendChild(title);
      svg.appendChild(dot);
    }

    if (currentEta !== null) {
      svg.appendChild(svgEl("line", {
        x1: this.x(currentEta), y1: PAD, x2: this.x(currentEta), y2: HEIGHT - PAD,
        class: "sweep-current",
      }));
    }

    this.plot.appendChild(svg);
    const readout = el("div", "sweep-readout");
    for (const row of rows) {
      readout.appendChild(
        el("span", "sweep-point", `(${row.eta}, ${formatBelief(row.belief)})`),
      );
    }
    this.plot.appendChild(readout);
  }

  showError(message: string): void {
    this.plot.textContent = "";
    this.plot.appendChild(el("div", "chart-error", message));
  }

  clear(): void {
    this.plot.textContent = "";
  }
}
