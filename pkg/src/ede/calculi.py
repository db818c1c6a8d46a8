"""Reference calculi on the two-element frame: Dempster-Shafer and MYCIN.

These exist to cross-check the role pipeline, not to replace it. On the
frame {H, not-H} a basic probability assignment puts mass on H, on
not-H, and on the whole frame (uncommitted belief), which is exactly
what lets belief in H and belief in not-H sum to less than 1.

Combining supportive factors matches normalized Dempster combination;
combining adversities (or supports with adversities) matches the
*unnormalized* variant, where the conflicting mass is discarded instead
of being redistributed. The oracles below make both correspondences
executable. The MYCIN and EMYCIN certainty factors are included as the
classical composite scores the pipeline deliberately avoids.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .aggregation import aggregate_adversity, aggregate_support, evaluate_pipeline
from .core import (
    EvaluationOptions,
    EvidenceItem,
    KnowledgeBase,
    RoleKind,
    WeightedEvidence,
    check_unit,
    effective_strength,
    validate_kb,
)
from .errors import (
    KbInvalidError,
    TotalConflictError,
    UndefinedCertaintyError,
    UnknownFactorError,
    UnsupportedComparisonError,
)
from .roles import update_adverse, update_supportive

_MASS_TOL = 1e-12


@dataclass(frozen=True)
class Bpa:
    """Basic probability assignment over {H, not-H, frame}.

    Masses are nonnegative and sum to 1; an ``unnormalized`` result of a
    combination is allowed to sum to less (the discarded conflict), and
    carries the flag so nobody mistakes it for a proper assignment.
    """

    m_h: float
    m_not_h: float
    m_theta: float
    unnormalized: bool = False

    def __post_init__(self):
        for name, m in (("m_h", self.m_h), ("m_not_h", self.m_not_h), ("m_theta", self.m_theta)):
            if isinstance(m, bool) or not isinstance(m, (int, float)) or not math.isfinite(float(m)):
                raise ValueError(f"{name} must be a finite number, got {m!r}")
            if m < -_MASS_TOL:
                raise ValueError(f"{name} must be nonnegative, got {m}")
            object.__setattr__(self, name, max(0.0, float(m)))
        total = self.m_h + self.m_not_h + self.m_theta
        if self.unnormalized:
            if total > 1.0 + _MASS_TOL:
                raise ValueError(f"masses must sum to at most 1, got {total}")
        elif abs(total - 1.0) > _MASS_TOL:
            raise ValueError(f"masses must sum to 1, got {total}")

    @classmethod
    def supporting(cls, belief: float) -> "Bpa":
        """All committed mass on H, the rest uncommitted."""
        b = check_unit(belief, "belief")
        return cls(b, 0.0, 1.0 - b)

    @classmethod
    def opposing(cls, disbelief: float) -> "Bpa":
        """All committed mass on not-H, the rest uncommitted."""
        d = check_unit(disbelief, "disbelief")
        return cls(0.0, d, 1.0 - d)

    @classmethod
    def vacuous(cls) -> "Bpa":
        return cls(0.0, 0.0, 1.0)


def ds_combine(b1: Bpa, b2: Bpa, normalized: bool = True) -> Bpa:
    """Dempster's rule of combination on the two-element frame.

    Mass products land on the intersection of their hypotheses; the mass
    K on the empty intersection is the conflict. Normalized combination
    redistributes it by dividing through 1 - K; the unnormalized variant
    simply discards it, so the result sums to 1 - K and is flagged.

    Raises :class:`TotalConflictError` when normalizing at K = 1.
    """
    if normalized and (b1.unnormalized or b2.unnormalized):
        raise ValueError("normalized combination requires normalized inputs")
    m_h = b1.m_h * b2.m_h + b1.m_h * b2.m_theta + b1.m_theta * b2.m_h
    m_not_h = b1.m_not_h * b2.m_not_h + b1.m_not_h * b2.m_theta + b1.m_theta * b2.m_not_h
    m_theta = b1.m_theta * b2.m_theta
    if not normalized:
        return Bpa(m_h, m_not_h, m_theta, unnormalized=True)
    # the surviving mass equals 1 - K for proper inputs; dividing by it
    # (rather than by a separately computed 1 - K) keeps the normalized
    # masses summing to 1 even when the conflict is within rounding of 1
    denom = m_h + m_not_h + m_theta
    if denom <= 0.0:
        raise TotalConflictError(
            "total conflict (K = 1): the assignments flatly contradict each other"
        )
    return Bpa(m_h / denom, m_not_h / denom, m_theta / denom)


def cf_mycin(mb: float, md: float) -> float:
    """MYCIN certainty factor: CF = MB - MD, in [-1, 1]."""
    mb = check_unit(mb, "mb")
    md = check_unit(md, "md")
    return mb - md


def cf_emycin(mb: float, md: float) -> float:
    """EMYCIN certainty factor: (MB - MD) / (1 - min(MB, MD)).

    Undefined at MB = MD = 1, where belief and disbelief are both total.
    """
    mb = check_unit(mb, "mb")
    md = check_unit(md, "md")
    if min(mb, md) == 1.0:
        raise UndefinedCertaintyError("certainty factor undefined at MB = MD = 1")
    return (mb - md) / (1.0 - min(mb, md))


@dataclass(frozen=True)
class EquivalenceReport:
    """Pipeline belief vs Dempster-combined belief for the same inputs."""

    pipeline_belief: float
    dempster_belief: float

    @property
    def difference(self) -> float:
        return abs(self.pipeline_belief - self.dempster_belief)


def oracle_supportive(bel_e: float, s1: float, s2: float) -> EquivalenceReport:
    """Two full-strength supportive factors vs iterated normalized combination.

    The prior and each degree of support become assignments committing
    mass to H only; combining them is conflict-free and reproduces the
    pipeline's joint support exactly.
    """
    bel_e = check_unit(bel_e, "bel_e")
    items = [WeightedEvidence("f1", s1, 1.0), WeightedEvidence("f2", s2, 1.0)]
    pipeline = update_supportive(bel_e, aggregate_support(items), 1.0)
    combined = ds_combine(ds_combine(Bpa.supporting(bel_e), Bpa.supporting(s1)), Bpa.supporting(s2))
    return EquivalenceReport(pipeline, combined.m_h)


def oracle_adverse(bel_e: float, a1: float, a2: float) -> EquivalenceReport:
    """Two full-strength adverse factors vs iterated unnormalized combination.

    Each degree of adversity becomes an assignment committing mass to
    not-H; discarding (not redistributing) the conflict is what makes
    the combined mass on H equal the pipeline's discounted belief.
    """
    bel_e = check_unit(bel_e, "bel_e")
    items = [WeightedEvidence("f1", a1, 1.0), WeightedEvidence("f2", a2, 1.0)]
    pipeline = update_adverse(bel_e, aggregate_adversity(items), 1.0)
    combined = ds_combine(
        ds_combine(Bpa.supporting(bel_e), Bpa.opposing(a1), normalized=False),
        Bpa.opposing(a2),
        normalized=False,
    )
    return EquivalenceReport(pipeline, combined.m_h)


CALCULUS_NAMES: tuple[str, ...] = (
    "role_pipeline",
    "cf_mycin",
    "cf_emycin",
    "ds_normalized",
    "ds_unnormalized",
)


@dataclass(frozen=True)
class CalculusResult:
    """One calculus' verdict on the same body of evidence."""

    calculus: str
    value: float


def compare_calculi(
    kb: KnowledgeBase,
    evidence: Sequence[EvidenceItem],
    opts: EvaluationOptions | None = None,
) -> list[CalculusResult]:
    """Score the same evidence under five calculi, one row each.

    Only supportive and adverse roles are comparable: the other calculi
    have no notion of sufficiency, necessity, or contrariness. MB is the
    aggregated support and MD the aggregated adversity, so every row is
    computed from identical effective strengths.

    Raises :class:`UnsupportedComparisonError` naming the offending
    factors when the knowledge base plays any other role.
    """
    if opts is None:
        opts = EvaluationOptions()
    violations = validate_kb(kb)
    if violations:
        raise KbInvalidError(violations)
    comparable = {RoleKind.SUPPORTIVE, RoleKind.ADVERSE}
    offending = [
        f.id for f in kb.factors if any(r.kind not in comparable for r in f.roles)
    ]
    if offending:
        raise UnsupportedComparisonError(offending)

    pipeline_belief, _ = evaluate_pipeline(kb, evidence, opts)

    factors = {f.id: f for f in kb.factors}
    supports: list[WeightedEvidence] = []
    adversities: list[WeightedEvidence] = []
    seen: set[str] = set()
    for item in evidence:
        factor = factors.get(item.factor_id)
        if factor is None:
            raise UnknownFactorError(item.factor_id)
        if item.factor_id in seen:
            continue  # evaluate_pipeline above already rejected duplicates
        seen.add(item.factor_id)
        eta = effective_strength(item, factor, opts.out_of_range_policy)
        if eta is None:
            continue
        for role in factor.roles:
            target = supports if role.kind is RoleKind.SUPPORTIVE else adversities
            target.append(WeightedEvidence(factor.id, role.intensity, eta))

    mb = aggregate_support(supports, opts.tnorm)
    md = aggregate_adversity(adversities, opts.tnorm)

    prior_and_support = ds_combine(Bpa.supporting(kb.prior), Bpa.supporting(mb))
    ds_norm = ds_combine(prior_and_support, Bpa.opposing(md)).m_h
    ds_unnorm = ds_combine(
        ds_combine(Bpa.supporting(kb.prior), Bpa.supporting(mb), normalized=False),
        Bpa.opposing(md),
        normalized=False,
    ).m_h

    return [
        CalculusResult("role_pipeline", pipeline_belief),
        CalculusResult("cf_mycin", cf_mycin(mb, md)),
        CalculusResult("cf_emycin", cf_emycin(mb, md)),
        CalculusResult("ds_normalized", ds_norm),
        CalculusResult("ds_unnormalized", ds_unnorm),
    ]
