/** Bundled starter knowledge base (mirrors the engine's worked example). */

import type { KbDocument } from "./types.js";

export const WORKED_EXAMPLE: KbDocument = {
  format_version: "1",
  hypothesis: "Fund the venture",
  prior: 0.2,
  factors: [
    {
      id: "team_track_record",
      label: "Founding team has shipped comparable products",
      scale: { kind: "interval", v_low: 0, v_high: 10, units: "launch score" },
      roles: [{ kind: "supportive", intensity: 0.5 }],
      sharpness: 1,
    },
    {
      id: "burn_rate",
      label: "Monthly burn relative to committed runway",
      scale: { kind: "interval", v_low: 0, v_high: 1, units: "fraction of runway" },
      roles: [{ kind: "adverse", intensity: 0.4 }],
      sharpness: 1,
    },
    {
      id: "anchor_contract",
      label: "Signed anchor customer contract",
      scale: { kind: "nominal" },
      roles: [{ kind: "sufficient", intensity: 0.9 }],
      sharpness: 1,
    },
    {
      id: "legal_clearance",
      label: "No blocking legal exposure",
      scale: { kind: "nominal" },
      roles: [{ kind: "necessary", intensity: 0.9 }],
      sharpness: 1,
    },
    {
      id: "founder_exit_intent",
      label: "Founders are shopping for an immediate exit",
      scale: { kind: "nominal" },
      roles: [{ kind: "contrary", intensity: 0.95 }],
      sharpness: 1,
    },
  ],
};
