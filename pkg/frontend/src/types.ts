/**
 * Wire types for the evidential decision engine API.
 *
 * These mirror the *.kb.json / *.ev.json document schemas and the
 * response bodies of /api/evaluate, /api/sweep and /api/compare. The UI
 * never invents numbers of its own: everything rendered as a belief
 * comes out of one of these response shapes.
 */

export type RoleKind =
  | "supportive"
  | "adverse"
  | "sufficient"
  | "necessary"
  | "contrary";

export type ScaleKind = "interval" | "nominal" | "ordinal";

export interface RoleObj {
  kind: RoleKind;
  intensity: number;
}

export interface ScaleObj {
  kind: ScaleKind;
  v_low?: number;
  v_high?: number;
  units?: string;
}

export interface FactorObj {
  id: string;
  label?: string;
  scale: ScaleObj;
  roles: RoleObj[];
  sharpness?: number;
}

export interface OptionsObj {
  tnorm?: "product" | "minimum" | "lukasiewicz" | "hamacher";
  lambda?: number;
  out_of_range_policy?: "error" | "clamp";
}

export interface KbDocument {
  format_version: string;
  hypothesis: string;
  prior?: number;
  factors: FactorObj[];
  options?: OptionsObj;
}

export type EvidenceEntry =
  | { factor: string; value: number }
  | { factor: string; eta: number }
  | { factor: string; unknown: true };

export interface TraceInput {
  factor: string;
  intensity: number;
  eta: number;
}

export interface StageRecordObj {
  stage: string;
  inputs: TraceInput[];
  belief_before: number;
  belief_after: number;
}

export interface EvaluateResponse {
  belief: number;
  trace: StageRecordObj[];
  warnings: string[];
}

export interface SweepRowObj {
  eta: number;
  belief: number;
  stage_supportive: number;
  stage_adverse: number;
  stage_sufficient: number;
  stage_contrary: number;
  stage_necessary: number;
}

export interface SweepResponse {
  rows: SweepRowObj[];
}

export interface CompareRowObj {
  calculus: string;
  value: number;
}

export interface CompareResponse {
  rows: CompareRowObj[];
}

export interface ApiErrorBody {
  error: string;
  path: string | null;
}

export interface EvaluateRequest {
  kb: KbDocument;
  evidence: EvidenceEntry[];
  options?: OptionsObj;
}

export interface SweepRequest extends EvaluateRequest {
  factor_id: string;
  steps: number;
}
