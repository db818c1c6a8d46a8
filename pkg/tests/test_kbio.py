"""Document parsing, diagnostics, and round-trip serialization."""

import json

import pytest
from hypothesis import given, settings

from ede import (
    DocumentError,
    DuplicateEvidenceError,
    EvaluationOptions,
    EvidenceItem,
    Hamacher,
    KbDocument,
    KbInvalidError,
    OutOfRangePolicy,
    ScaleError,
    StrengthObservation,
    UnknownFactorError,
    UnknownObservation,
    ValueObservation,
    evaluate_pipeline,
    parse_evidence,
    parse_kb,
    parse_sweep,
    parse_trace,
    sweep_factor,
    write_evidence,
    write_kb_document,
    write_sweep,
    write_trace,
)
from ede.kbio import SWEEP_HEADER, parse_kb_document
from tests.conftest import kb_with_evidence, knowledge_bases

MINIMAL_KB = {
    "format_version": "1",
    "hypothesis": "h",
    "prior": 0,
    "factors": [
        {
            "id": "f1",
            "scale": {"kind": "interval", "v_low": 0, "v_high": 1},
            "roles": [{"kind": "supportive", "intensity": 0.5}],
        }
    ],
}


def _kb_json(**overrides):
    doc = json.loads(json.dumps(MINIMAL_KB))
    doc.update(overrides)
    return json.dumps(doc)


class TestParseKb:
    def test_minimal_document(self):
        kb = parse_kb(_kb_json())
        assert kb.hypothesis == "h"
        assert kb.prior == 0.0
        assert kb.factors[0].id == "f1"
        assert kb.factors[0].sharpness == 1
        assert kb.factors[0].label == ""

    def test_intensity_out_of_range_names_the_path(self):
        doc = json.loads(_kb_json())
        doc["factors"][0]["roles"][0]["intensity"] = 1.3
        with pytest.raises(DocumentError) as exc:
            parse_kb(json.dumps(doc))
        assert exc.value.path == "factors[0].roles[0].intensity"
        assert "out of [0, 1]" in exc.value.reason

    def test_duplicate_factor_id_is_semantic(self):
        doc = json.loads(_kb_json())
        doc["factors"].append(doc["factors"][0])
        with pytest.raises(KbInvalidError, match="duplicate factor id"):
            parse_kb(json.dumps(doc))

    def test_unknown_field_rejected(self):
        with pytest.raises(DocumentError, match="unknown field"):
            parse_kb(_kb_json(surprise=1))

    def test_unknown_role_kind_rejected(self):
        doc = json.loads(_kb_json())
        doc["factors"][0]["roles"][0]["kind"] = "supportve"
        with pytest.raises(DocumentError) as exc:
            parse_kb(json.dumps(doc))
        assert exc.value.path == "factors[0].roles[0].kind"

    def test_unknown_version_rejected(self):
        with pytest.raises(DocumentError, match="format_version"):
            parse_kb(_kb_json(format_version="2"))

    def test_nan_rejected(self):
        text = _kb_json().replace('"prior": 0', '"prior": NaN')
        with pytest.raises(DocumentError, match="non-finite"):
            parse_kb(text)

    def test_syntax_error(self):
        with pytest.raises(DocumentError, match="invalid JSON"):
            parse_kb("{not json")

    def test_degenerate_margins_reported(self):
        doc = json.loads(_kb_json())
        doc["factors"][0]["scale"] = {"kind": "interval", "v_low": 3, "v_high": 3}
        with pytest.raises(KbInvalidError, match="degenerate margins"):
            parse_kb(json.dumps(doc))

    def test_embedded_options(self):
        doc = parse_kb_document(
            _kb_json(options={"tnorm": "hamacher", "lambda": 0.5, "out_of_range_policy": "clamp"})
        )
        assert doc.options == EvaluationOptions(Hamacher(0.5), OutOfRangePolicy.CLAMP)

    def test_options_default_none(self):
        assert parse_kb_document(_kb_json()).options is None


class TestParseEvidence:
    @pytest.fixture
    def kb(self):
        return parse_kb(_kb_json())

    def test_value_entry(self, kb):
        items = parse_evidence(
            json.dumps({"format_version": "1", "evidence": [{"factor": "f1", "value": 0.4}]}), kb
        )
        assert items == [EvidenceItem("f1", ValueObservation(0.4))]

    def test_strength_entry(self, kb):
        items = parse_evidence(
            json.dumps({"format_version": "1", "evidence": [{"factor": "f1", "eta": 0.4}]}), kb
        )
        assert items == [EvidenceItem("f1", StrengthObservation(0.4))]

    def test_unknown_entry(self, kb):
        items = parse_evidence(
            json.dumps({"format_version": "1", "evidence": [{"factor": "f1", "unknown": True}]}), kb
        )
        assert isinstance(items[0].observation, UnknownObservation)

    def test_ghost_factor(self, kb):
        with pytest.raises(UnknownFactorError, match="ghost"):
            parse_evidence(
                json.dumps({"format_version": "1", "evidence": [{"factor": "ghost", "eta": 1}]}), kb
            )

    def test_duplicate_entries(self, kb):
        text = json.dumps(
            {"format_version": "1", "evidence": [{"factor": "f1", "eta": 1}, {"factor": "f1", "eta": 0}]}
        )
        with pytest.raises(DuplicateEvidenceError):
            parse_evidence(text, kb)

    def test_value_on_nominal_factor(self):
        doc = json.loads(_kb_json())
        doc["factors"][0]["scale"] = {"kind": "nominal"}
        kb = parse_kb(json.dumps(doc))
        with pytest.raises(ScaleError, match="interval"):
            parse_evidence(
                json.dumps({"format_version": "1", "evidence": [{"factor": "f1", "value": 3}]}), kb
            )

    def test_requires_exactly_one_observation(self, kb):
        text = json.dumps(
            {"format_version": "1", "evidence": [{"factor": "f1", "eta": 1, "value": 0.5}]}
        )
        with pytest.raises(DocumentError, match="exactly one"):
            parse_evidence(text, kb)

    def test_eta_out_of_range_names_path(self, kb):
        text = json.dumps({"format_version": "1", "evidence": [{"factor": "f1", "eta": 1.5}]})
        with pytest.raises(DocumentError) as exc:
            parse_evidence(text, kb)
        assert exc.value.path == "evidence[0].eta"


class TestRoundTrips:
    @given(knowledge_bases())
    @settings(max_examples=100, deadline=None)
    def test_kb_document_round_trip(self, kb):
        doc = KbDocument(kb, EvaluationOptions(Hamacher(0.25), OutOfRangePolicy.CLAMP))
        text = write_kb_document(doc)
        again = parse_kb_document(text)
        assert again == doc
        assert write_kb_document(again) == text

    @given(kb_with_evidence())
    @settings(max_examples=100, deadline=None)
    def test_evidence_round_trip(self, kb_ev):
        kb, evidence = kb_ev
        text = write_evidence(evidence)
        assert parse_evidence(text, kb) == evidence

    @given(kb_with_evidence())
    @settings(max_examples=60, deadline=None)
    def test_trace_round_trip(self, kb_ev):
        kb, evidence = kb_ev
        _, trace = evaluate_pipeline(kb, evidence)
        assert parse_trace(write_trace(trace)) == trace

    def test_empty_trace_document(self):
        from ede import EvaluationTrace

        text = write_trace(EvaluationTrace(()))
        assert json.loads(text)["stages"] == []
        assert parse_trace(text) == EvaluationTrace(())

    def test_worked_example_trace_document(self, worked_example):
        kb, evidence = worked_example
        belief, trace = evaluate_pipeline(kb, evidence)
        doc = json.loads(write_trace(trace))
        assert len(doc["stages"]) == 5
        assert doc["stages"][-1]["belief_after"] == pytest.approx(0.36, abs=1e-12)
        assert belief == pytest.approx(0.36, abs=1e-12)

    def test_sweep_round_trip(self, worked_example):
        kb, evidence = worked_example
        rows = sweep_factor(kb, evidence, "team_track_record", 5)
        text = write_sweep(rows)
        parsed = parse_sweep(text)
        assert write_sweep(parsed) == text
        assert len(parsed) == 5

    def test_sweep_header_and_precision(self):
        kb = parse_kb(_kb_json())
        rows = sweep_factor(kb, [], "f1", 3)
        lines = write_sweep(rows).splitlines()
        assert lines[0] == ",".join(SWEEP_HEADER)
        assert len(lines) == 4
        for line in lines[1:]:
            for cell in line.split(","):
                whole, frac = cell.split(".")
                assert len(frac) == 9

    def test_sweep_header_mismatch(self):
        with pytest.raises(DocumentError, match="header"):
            parse_sweep("eta,whatever\n0,1\n")
