"""Parsing and serialization for knowledge bases, evidence, traces, and sweeps.

The wire format is strict JSON with snake_case field names: unknown
fields and unknown format versions are rejected rather than ignored (a
typo in a role kind must surface, not silently drop a factor), NaN and
infinities are rejected everywhere, and parsing never repairs a
document. Every diagnostic carries a field path like
``factors[0].roles[1].intensity``.

Knowledge bases live in ``*.kb.json`` files, evidence sets in
``*.ev.json``. Traces serialize to JSON mirroring the stage records;
sweep rows serialize to CSV with a fixed header and 9-decimal beliefs.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .aggregation import SweepRow
from .core import (
    EvaluationOptions,
    EvaluationTrace,
    EvidenceItem,
    FactorSpec,
    KnowledgeBase,
    OutOfRangePolicy,
    RoleKind,
    RoleSpec,
    ScaleKind,
    StageRecord,
    UnknownObservation,
    ValueObservation,
    ValueScale,
    StrengthObservation,
    WeightedEvidence,
    validate_kb,
)
from .errors import (
    DocumentError,
    DuplicateEvidenceError,
    KbInvalidError,
    ScaleError,
    UnknownFactorError,
)
from .tnorms import Hamacher, tnorm_from_name, tnorm_name

FORMAT_VERSION = "1"

SWEEP_HEADER = (
    "eta",
    "belief",
    "stage_supportive",
    "stage_adverse",
    "stage_sufficient",
    "stage_contrary",
    "stage_necessary",
)


@dataclass(frozen=True)
class KbDocument:
    """A knowledge base plus its optional evaluation defaults, as filed."""

    kb: KnowledgeBase
    options: EvaluationOptions | None = None
    format_version: str = FORMAT_VERSION


def _reject_constant(token: str):
    raise DocumentError(f"non-finite number {token!r} is not allowed")


def _load_json(text: str) -> object:
    try:
        return json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise DocumentError(f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from e


def _require_object(obj, path: str) -> dict:
    if not isinstance(obj, dict):
        raise DocumentError(f"expected an object, got {type(obj).__name__}", path)
    return obj


def _require_array(obj, path: str) -> list:
    if not isinstance(obj, list):
        raise DocumentError(f"expected an array, got {type(obj).__name__}", path)
    return obj


def _check_fields(obj: dict, path: str, required: tuple[str, ...], optional: tuple[str, ...] = ()):
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise DocumentError(f"unknown field(s): {', '.join(unknown)}", path)
    missing = sorted(set(required) - set(obj))
    if missing:
        raise DocumentError(f"missing field(s): {', '.join(missing)}", path)


def _get_str(obj: dict, key: str, path: str) -> str:
    v = obj[key]
    if not isinstance(v, str):
        raise DocumentError(f"expected a string, got {type(v).__name__}", f"{path}.{key}")
    return v


def _get_number(obj: dict, key: str, path: str) -> float:
    v = obj[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise DocumentError(f"expected a number, got {type(v).__name__}", f"{path}.{key}")
    if not math.isfinite(float(v)):
        raise DocumentError(f"number must be finite, got {v}", f"{path}.{key}")
    return float(v)


def _get_unit(obj: dict, key: str, path: str) -> float:
    v = _get_number(obj, key, path)
    if not 0.0 <= v <= 1.0:
        raise DocumentError(f"{key} must be in [0, 1], got {v}", f"{path}.{key}")
    return v


def _check_version(obj: dict, path: str):
    version = obj.get("format_version")
    if not isinstance(version, str):
        raise DocumentError("expected a string", f"{path}format_version" if path else "format_version")
    if version != FORMAT_VERSION:
        raise DocumentError(
            f"unrecognized format_version {version!r} (this engine reads {FORMAT_VERSION!r})",
            "format_version",
        )


def _scale_from_obj(obj, path: str) -> ValueScale:
    obj = _require_object(obj, path)
    _check_fields(obj, path, ("kind",), ("v_low", "v_high", "units"))
    kind_str = _get_str(obj, "kind", path)
    try:
        kind = ScaleKind(kind_str)
    except ValueError:
        raise DocumentError(
            f"unknown scale kind {kind_str!r} (expected one of: "
            f"{', '.join(k.value for k in ScaleKind)})",
            f"{path}.kind",
        ) from None
    if kind is ScaleKind.INTERVAL:
        for key in ("v_low", "v_high"):
            if key not in obj:
                raise DocumentError("interval scale requires v_low and v_high", path)
        v_low = _get_number(obj, "v_low", path)
        v_high = _get_number(obj, "v_high", path)
        units = _get_str(obj, "units", path) if "units" in obj else ""
        return ValueScale(kind, v_low, v_high, units)
    for key in ("v_low", "v_high", "units"):
        if key in obj:
            raise DocumentError(
                f"{key} only applies to interval scales", f"{path}.{key}"
            )
    return ValueScale(kind)


def _role_from_obj(obj, path: str) -> RoleSpec:
    obj = _require_object(obj, path)
    _check_fields(obj, path, ("kind", "intensity"))
    kind_str = _get_str(obj, "kind", path)
    try:
        kind = RoleKind(kind_str)
    except ValueError:
        raise DocumentError(
            f"unknown role kind {kind_str!r} (expected one of: "
            f"{', '.join(k.value for k in RoleKind)})",
            f"{path}.kind",
        ) from None
    intensity = _get_number(obj, "intensity", path)
    if not 0.0 <= intensity <= 1.0:
        raise DocumentError(
            f"intensity out of [0, 1]: {intensity}", f"{path}.intensity"
        )
    return RoleSpec(kind, intensity)


def _factor_from_obj(obj, path: str) -> FactorSpec:
    obj = _require_object(obj, path)
    _check_fields(obj, path, ("id", "scale", "roles"), ("label", "sharpness"))
    factor_id = _get_str(obj, "id", path)
    label = _get_str(obj, "label", path) if "label" in obj else ""
    scale = _scale_from_obj(obj["scale"], f"{path}.scale")
    roles_raw = _require_array(obj["roles"], f"{path}.roles")
    roles = tuple(
        _role_from_obj(r, f"{path}.roles[{i}]") for i, r in enumerate(roles_raw)
    )
    sharpness = 1
    if "sharpness" in obj:
        v = obj["sharpness"]
        if isinstance(v, bool) or not isinstance(v, int):
            raise DocumentError(
                f"sharpness must be an integer, got {v!r}", f"{path}.sharpness"
            )
        if v < 1:
            raise DocumentError(f"sharpness must be >= 1, got {v}", f"{path}.sharpness")
        sharpness = v
    return FactorSpec(factor_id, label, scale, roles, sharpness)


def options_from_obj(obj, path: str = "options") -> EvaluationOptions:
    obj = _require_object(obj, path)
    _check_fields(obj, path, (), ("tnorm", "lambda", "out_of_range_policy"))
    lam = _get_unit(obj, "lambda", path) if "lambda" in obj else None
    tnorm_str = _get_str(obj, "tnorm", path) if "tnorm" in obj else "product"
    try:
        tnorm = tnorm_from_name(tnorm_str, lam)
    except ValueError as e:
        raise DocumentError(str(e), f"{path}.tnorm") from None
    policy = OutOfRangePolicy.ERROR
    if "out_of_range_policy" in obj:
        policy_str = _get_str(obj, "out_of_range_policy", path)
        try:
            policy = OutOfRangePolicy(policy_str)
        except ValueError:
            raise DocumentError(
                f"unknown out_of_range_policy {policy_str!r} (expected error or clamp)",
                f"{path}.out_of_range_policy",
            ) from None
    return EvaluationOptions(tnorm, policy)


def kb_document_from_obj(obj) -> KbDocument:
    """Build a validated document from already-decoded JSON."""
    obj = _require_object(obj, "")
    _check_fields(
        obj,
        "",
        ("format_version", "hypothesis", "factors"),
        ("prior", "options"),
    )
    _check_version(obj, "")
    hypothesis = _get_str(obj, "hypothesis", "")
    prior = _get_unit(obj, "prior", "") if "prior" in obj else 0.0
    factors_raw = _require_array(obj["factors"], "factors")
    factors = tuple(
        _factor_from_obj(f, f"factors[{i}]") for i, f in enumerate(factors_raw)
    )
    options = options_from_obj(obj["options"], "options") if "options" in obj else None
    kb = KnowledgeBase(hypothesis, prior, factors)
    violations = validate_kb(kb)
    if violations:
        raise KbInvalidError(violations)
    return KbDocument(kb, options)


def parse_kb_document(text: str) -> KbDocument:
    return kb_document_from_obj(_load_json(text))


def parse_kb(text: str) -> KnowledgeBase:
    """Parse a ``*.kb.json`` document into a validated knowledge base."""
    return parse_kb_document(text).kb


def evidence_from_obj(obj, kb: KnowledgeBase) -> list[EvidenceItem]:
    """Build evidence items from decoded JSON, resolved against a knowledge base."""
    obj = _require_object(obj, "")
    _check_fields(obj, "", ("format_version", "evidence"))
    _check_version(obj, "")
    entries = _require_array(obj["evidence"], "evidence")
    items: list[EvidenceItem] = []
    seen: set[str] = set()
    for i, entry in enumerate(entries):
        path = f"evidence[{i}]"
        entry = _require_object(entry, path)
        _check_fields(entry, path, ("factor",), ("value", "eta", "unknown"))
        factor_id = _get_str(entry, "factor", path)
        factor = kb.factor(factor_id)
        if factor is None:
            raise UnknownFactorError(factor_id)
        if factor_id in seen:
            raise DuplicateEvidenceError(factor_id)
        seen.add(factor_id)
        given = [k for k in ("value", "eta", "unknown") if k in entry]
        if len(given) != 1:
            raise DocumentError(
                "exactly one of value, eta, or unknown is required", path
            )
        if "value" in entry:
            if factor.scale.kind is not ScaleKind.INTERVAL:
                raise ScaleError(
                    f"factor {factor_id!r} has a {factor.scale.kind.value} scale; "
                    "a value observation requires an interval scale"
                )
            items.append(EvidenceItem.value(factor_id, _get_number(entry, "value", path)))
        elif "eta" in entry:
            items.append(EvidenceItem.strength(factor_id, _get_unit(entry, "eta", path)))
        else:
            if entry["unknown"] is not True:
                raise DocumentError("unknown, when present, must be true", f"{path}.unknown")
            items.append(EvidenceItem.unknown(factor_id))
    return items


def parse_evidence(text: str, kb: KnowledgeBase) -> list[EvidenceItem]:
    """Parse a ``*.ev.json`` document against its knowledge base."""
    return evidence_from_obj(_load_json(text), kb)


def _scale_to_obj(scale: ValueScale) -> dict:
    if scale.kind is ScaleKind.INTERVAL:
        return {
            "kind": scale.kind.value,
            "v_low": scale.v_low,
            "v_high": scale.v_high,
            "units": scale.units,
        }
    return {"kind": scale.kind.value}


def options_to_obj(options: EvaluationOptions) -> dict:
    out: dict = {"tnorm": tnorm_name(options.tnorm)}
    if isinstance(options.tnorm, Hamacher):
        out["lambda"] = options.tnorm.lam
    out["out_of_range_policy"] = options.out_of_range_policy.value
    return out


def kb_document_to_obj(doc: KbDocument) -> dict:
    out: dict = {
        "format_version": doc.format_version,
        "hypothesis": doc.kb.hypothesis,
        "prior": doc.kb.prior,
        "factors": [
            {
                "id": f.id,
                "label": f.label,
                "scale": _scale_to_obj(f.scale),
                "roles": [{"kind": r.kind.value, "intensity": r.intensity} for r in f.roles],
                "sharpness": f.sharpness,
            }
            for f in doc.kb.factors
        ],
    }
    if doc.options is not None:
        out["options"] = options_to_obj(doc.options)
    return out


def write_kb_document(doc: KbDocument) -> str:
    return json.dumps(kb_document_to_obj(doc), indent=2, allow_nan=False) + "\n"


def evidence_to_obj(items: list[EvidenceItem]) -> dict:
    entries = []
    for item in items:
        obs = item.observation
        if isinstance(obs, ValueObservation):
            entries.append({"factor": item.factor_id, "value": obs.v})
        elif isinstance(obs, StrengthObservation):
            entries.append({"factor": item.factor_id, "eta": obs.eta})
        elif isinstance(obs, UnknownObservation):
            entries.append({"factor": item.factor_id, "unknown": True})
        else:
            raise TypeError(f"not an observation: {obs!r}")
    return {"format_version": FORMAT_VERSION, "evidence": entries}


def write_evidence(items: list[EvidenceItem]) -> str:
    return json.dumps(evidence_to_obj(items), indent=2, allow_nan=False) + "\n"


def trace_to_obj(trace: EvaluationTrace) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "stages": [
            {
                "stage": s.stage,
                "inputs": [
                    {"factor": w.factor_id, "intensity": w.intensity, "eta": w.eta}
                    for w in s.inputs
                ],
                "belief_before": s.belief_before,
                "belief_after": s.belief_after,
            }
            for s in trace.stages
        ],
    }


def write_trace(trace: EvaluationTrace) -> str:
    """Serialize a trace with stage order preserved."""
    return json.dumps(trace_to_obj(trace), indent=2, allow_nan=False) + "\n"


def parse_trace(text: str) -> EvaluationTrace:
    obj = _require_object(_load_json(text), "")
    _check_fields(obj, "", ("format_version", "stages"))
    _check_version(obj, "")
    stages = []
    for i, raw in enumerate(_require_array(obj["stages"], "stages")):
        path = f"stages[{i}]"
        raw = _require_object(raw, path)
        _check_fields(raw, path, ("stage", "inputs", "belief_before", "belief_after"))
        inputs = []
        for j, w in enumerate(_require_array(raw["inputs"], f"{path}.inputs")):
            wpath = f"{path}.inputs[{j}]"
            w = _require_object(w, wpath)
            _check_fields(w, wpath, ("factor", "intensity", "eta"))
            inputs.append(
                WeightedEvidence(
                    _get_str(w, "factor", wpath),
                    _get_unit(w, "intensity", wpath),
                    _get_unit(w, "eta", wpath),
                )
            )
        stages.append(
            StageRecord(
                _get_str(raw, "stage", path),
                tuple(inputs),
                _get_unit(raw, "belief_before", path),
                _get_unit(raw, "belief_after", path),
            )
        )
    return EvaluationTrace(tuple(stages))


def sweep_row_to_obj(row: SweepRow) -> dict:
    return {name: getattr(row, name) for name in SWEEP_HEADER}


def write_sweep(rows: list[SweepRow]) -> str:
    """Serialize sweep rows as CSV: fixed header, 9-decimal beliefs."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(SWEEP_HEADER)
    for row in rows:
        writer.writerow(f"{getattr(row, name):.9f}" for name in SWEEP_HEADER)
    return buf.getvalue()


def parse_sweep(text: str) -> list[SweepRow]:
    reader = csv.reader(io.StringIO(text))
    try:
        header = tuple(next(reader))
    except StopIteration:
        raise DocumentError("empty sweep document") from None
    if header != SWEEP_HEADER:
        raise DocumentError(f"unexpected sweep header: {','.join(header)}")
    rows = []
    for i, fields in enumerate(reader):
        if not fields:
            continue
        if len(fields) != len(SWEEP_HEADER):
            raise DocumentError(f"expected {len(SWEEP_HEADER)} columns", f"row {i + 1}")
        try:
            values = [float(x) for x in fields]
        except ValueError as e:
            raise DocumentError(f"bad number: {e}", f"row {i + 1}") from None
        rows.append(SweepRow(*values))
    return rows


# Machine-readable description of the document fields, served to clients
# so forms can be rendered without hard-coding the vocabulary.
FIELD_SCHEMA: dict = {
    "format_version": FORMAT_VERSION,
    "kb": {
        "fields": ["format_version", "hypothesis", "prior", "factors", "options"],
        "factor": {
            "fields": ["id", "label", "scale", "roles", "sharpness"],
            "scale": {
                "fields": ["kind", "v_low", "v_high", "units"],
                "kinds": [k.value for k in ScaleKind],
            },
            "role": {
                "fields": ["kind", "intensity"],
                "kinds": [k.value for k in RoleKind],
                "intensity_range": [0, 1],
            },
            "sharpness_min": 1,
        },
        "prior_range": [0, 1],
        "options": {
            "fields": ["tnorm", "lambda", "out_of_range_policy"],
            "tnorms": ["product", "minimum", "lukasiewicz", "hamacher"],
            "lambda_range": [0, 1],
            "out_of_range_policies": [p.value for p in OutOfRangePolicy],
        },
    },
    "evidence": {
        "fields": ["format_version", "evidence"],
        "entry": {
            "fields": ["factor", "value", "eta", "unknown"],
            "exactly_one_of": ["value", "eta", "unknown"],
            "eta_range": [0, 1],
        },
    },
}
