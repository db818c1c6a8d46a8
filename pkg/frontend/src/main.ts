import { ApiClient } from "./api.js";
import { WhatIfApp } from "./app.js";
import { WORKED_EXAMPLE } from "./presets.js";
import { SessionState } from "./state.js";

const root = document.getElementById("app");
if (root) {
  const app = new WhatIfApp(root, new ApiClient());
  app.loadKb(SessionState.fromLocalStorage() ?? WORKED_EXAMPLE);
}
