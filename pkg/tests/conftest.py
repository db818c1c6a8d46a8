"""Shared strategies and fixtures for the test suite."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from ede import (
    EvidenceItem,
    FactorSpec,
    KnowledgeBase,
    RoleKind,
    RoleSpec,
    ScaleKind,
    ValueScale,
)

# Unit-interval floats without NaN/inf; the engine's working domain.
units = st.floats(min_value=0.0, max_value=1.0, allow_nan=False, allow_infinity=False)


def _valid_role_sets() -> list[tuple[RoleKind, ...]]:
    """Every nonempty role-kind combination with no conflicting pair."""
    forbidden = {
        frozenset((a, b))
        for a in (RoleKind.SUPPORTIVE, RoleKind.SUFFICIENT)
        for b in (RoleKind.ADVERSE, RoleKind.CONTRARY)
    }
    kinds = list(RoleKind)
    sets = []
    for r in range(1, len(kinds) + 1):
        for combo in combinations(kinds, r):
            if not any(frozenset(p) in forbidden for p in combinations(combo, 2)):
                sets.append(combo)
    return sets


VALID_ROLE_SETS = _valid_role_sets()


@st.composite
def factors(draw, factor_id: str):
    kinds = draw(st.sampled_from(VALID_ROLE_SETS))
    roles = tuple(RoleSpec(k, draw(units)) for k in kinds)
    if draw(st.booleans()):
        v_low = draw(st.floats(min_value=-1e6, max_value=1e6, allow_nan=False))
        width = draw(st.floats(min_value=1e-3, max_value=1e6, allow_nan=False))
        scale = ValueScale.interval(v_low, v_low + width)
    else:
        scale = ValueScale.nominal() if draw(st.booleans()) else ValueScale.ordinal()
    sharpness = draw(st.integers(min_value=1, max_value=4))
    return FactorSpec(factor_id, f"factor {factor_id}", scale, roles, sharpness)


@st.composite
def knowledge_bases(draw, min_factors: int = 0, max_factors: int = 5):
    n = draw(st.integers(min_value=min_factors, max_value=max_factors))
    fs = tuple(draw(factors(f"f{i}")) for i in range(n))
    return KnowledgeBase("test hypothesis", draw(units), fs)


@st.composite
def evidence_for(draw, kb: KnowledgeBase):
    items = []
    for factor in kb.factors:
        choice = draw(st.integers(min_value=0, max_value=3))
        if choice == 0:
            continue  # no evidence at all for this factor
        if choice == 1:
            items.append(EvidenceItem.unknown(factor.id))
        elif choice == 2 or factor.scale.kind is not ScaleKind.INTERVAL:
            items.append(EvidenceItem.strength(factor.id, draw(units)))
        else:
            v = draw(
                st.floats(
                    min_value=factor.scale.v_low,
                    max_value=factor.scale.v_high,
                    allow_nan=False,
                )
            )
            items.append(EvidenceItem.value(factor.id, v))
    return items


@st.composite
def kb_with_evidence(draw, min_factors: int = 0, max_factors: int = 5):
    kb = draw(knowledge_bases(min_factors, max_factors))
    return kb, draw(evidence_for(kb))


@pytest.fixture(scope="session")
def worked_example():
    """The bundled five-factor example with its evidence."""
    from importlib.resources import files

    from ede import parse_evidence, parse_kb

    kb = parse_kb((files("ede") / "data/worked_example.kb.json").read_text())
    ev = parse_evidence((files("ede") / "data/worked_example.ev.json").read_text(), kb)
    return kb, ev
