"""Multi-factor combination and the staged evaluation pipeline.

Supportive and adverse contributions aggregate: effective supports
combine by the probabilistic sum, with a t-norm controlling how the two
evidential strengths interact (the product norm recovers plain
independence). Sufficient, necessary, and contrary factors are
nonaggregative: the strongest one decides, via a max or min over the
per-factor interpolations.

The pipeline applies the role classes in a fixed order: supportive,
adverse, sufficient, contrary, necessary. Supports are combined first
and then discounted by the adversities; the result is then guaranteed by
sufficient factors, capped by contrary ones, and finally filtered by the
necessary ones. Each stage is recorded in a trace with the belief before
and after, so a result can always be explained stage by stage.

Order caveats, recorded in the trace rather than hidden: the n-ary
support/adversity fold is left-to-right in declared factor order. With
the product t-norm the fold is order-independent; for other t-norms the
first pair interacts through the t-norm and later items attach to the
accumulated group (strength 1), so declared order matters. The contrary
stage runs before the necessary stage; both interpolate against the
current belief, so their relative order matters too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    EvaluationOptions,
    EvaluationTrace,
    EvidenceItem,
    KnowledgeBase,
    RoleKind,
    StageRecord,
    WeightedEvidence,
    check_unit,
    clip_unit,
    effective_strength,
    validate_kb,
)
from .errors import DuplicateEvidenceError, KbInvalidError, UnknownFactorError
from .roles import update_adverse, update_supportive
from .tnorms import PRODUCT, TNorm, tnorm_eval

STAGE_ORDER: tuple[RoleKind, ...] = (
    RoleKind.SUPPORTIVE,
    RoleKind.ADVERSE,
    RoleKind.SUFFICIENT,
    RoleKind.CONTRARY,
    RoleKind.NECESSARY,
)

STAGE_NAMES: tuple[str, ...] = tuple(kind.value for kind in STAGE_ORDER)


def combine_support(s1: float, s2: float) -> float:
    """Join two full-strength degrees of support: s1 + s2 - s1*s2.

    Commutative and associative, with 0 as identity and 1 absorbing; the
    same formula joins degrees of adversity.
    """
    s1 = check_unit(s1, "s1")
    s2 = check_unit(s2, "s2")
    return clip_unit(s1 + s2 - s1 * s2)


def _aggregate_effective(items: Sequence[WeightedEvidence], t: TNorm) -> float:
    """Fold (intensity, eta) pairs into one aggregated intensity.

    The first pair interacts through the t-norm; afterwards the
    accumulated group acts as a virtual factor with strength 1, so the
    t-norm's unit axiom keeps every later step well-defined.
    """
    if not items:
        return 0.0
    if len(items) == 1:
        return clip_unit(items[0].intensity * items[0].eta)
    first, second, *rest = items
    acc = (
        first.intensity * first.eta
        + second.intensity * second.eta
        - first.intensity * second.intensity * tnorm_eval(t, first.eta, second.eta)
    )
    for it in rest:
        acc = clip_unit(acc)
        acc = acc + it.intensity * it.eta - acc * it.intensity * tnorm_eval(t, 1.0, it.eta)
    return clip_unit(acc)


def aggregate_support(items: Sequence[WeightedEvidence], t: TNorm = PRODUCT) -> float:
    """Aggregated degree of support from partially-matched supportive factors.

    Two items yield s1*e1 + s2*e2 - s1*s2*(e1 * e2 under the t-norm);
    with the product t-norm this is the probabilistic sum of the
    effective supports s_i*e_i, independent of order.
    """
    return _aggregate_effective(items, t)


def aggregate_adversity(items: Sequence[WeightedEvidence], t: TNorm = PRODUCT) -> float:
    """Aggregated degree of adversity; same combination rule as support."""
    return _aggregate_effective(items, t)


def joint_mixed(
    bel: float,
    support: tuple[float, float],
    adversity: tuple[float, float],
) -> float:
    """One supportive and one adverse factor together: support first, then discount.

    Applying the support before the adverse discount keeps both effects
    in play even at belief 0, and is the smaller (more conservative) of
    the two possible compositions.
    """
    bel = check_unit(bel, "bel")
    s, eta = support
    a, zeta = adversity
    raised = update_supportive(bel, s, eta)
    return update_adverse(raised, a, zeta)


def aggregate_sufficient(bel: float, items: Sequence[WeightedEvidence]) -> float:
    """Belief guaranteed by the strongest partially-matched sufficient factor."""
    bel = check_unit(bel, "bel")
    best = bel
    for it in items:
        best = max(best, (1.0 - it.eta) * bel + it.eta * it.intensity)
    return clip_unit(best)


def aggregate_necessary(bel: float, items: Sequence[WeightedEvidence]) -> float:
    """Belief filtered by the most limiting partially-absent necessary factor."""
    bel = check_unit(bel, "bel")
    worst = bel
    for it in items:
        worst = min(worst, it.eta * bel + (1.0 - it.eta) * (1.0 - it.intensity))
    return clip_unit(worst)


def aggregate_contrary(bel: float, items: Sequence[WeightedEvidence]) -> float:
    """Belief capped by the most limiting partially-present contrary factor."""
    bel = check_unit(bel, "bel")
    worst = bel
    for it in items:
        worst = min(worst, (1.0 - it.eta) * bel + it.eta * (1.0 - it.intensity))
    return clip_unit(worst)


def _stage_inputs(
    kb: KnowledgeBase, etas: dict[str, float]
) -> dict[RoleKind, list[WeightedEvidence]]:
    """Partition observed factors by role class, preserving declared order.

    A multi-role factor contributes its single eta to every class it
    plays; factors without evidence appear in no class.
    """
    by_class: dict[RoleKind, list[WeightedEvidence]] = {kind: [] for kind in STAGE_ORDER}
    for factor in kb.factors:
        eta = etas.get(factor.id)
        if eta is None:
            continue
        for role in factor.roles:
            by_class[role.kind].append(WeightedEvidence(factor.id, role.intensity, eta))
    return by_class


def evaluate_pipeline(
    kb: KnowledgeBase,
    evidence: Sequence[EvidenceItem],
    opts: EvaluationOptions | None = None,
) -> tuple[float, EvaluationTrace]:
    """Evaluate a knowledge base against evidence, stage by stage.

    Returns the final degree of belief together with the full trace. A
    stage with no evidence is an identity map but is still recorded, so
    the trace always has exactly five stages in pipeline order.

    Raises :class:`KbInvalidError` for an invalid knowledge base,
    :class:`UnknownFactorError` / :class:`DuplicateEvidenceError` for
    unresolved evidence, and propagates strength-computation errors.
    """
    if opts is None:
        opts = EvaluationOptions()
    violations = validate_kb(kb)
    if violations:
        raise KbInvalidError(violations)

    factors = {f.id: f for f in kb.factors}
    seen: set[str] = set()
    etas: dict[str, float] = {}
    for item in evidence:
        factor = factors.get(item.factor_id)
        if factor is None:
            raise UnknownFactorError(item.factor_id)
        if item.factor_id in seen:
            raise DuplicateEvidenceError(item.factor_id)
        seen.add(item.factor_id)
        eta = effective_strength(item, factor, opts.out_of_range_policy)
        if eta is not None:
            etas[item.factor_id] = eta

    by_class = _stage_inputs(kb, etas)
    bel = kb.prior
    stages: list[StageRecord] = []
    for kind in STAGE_ORDER:
        items = tuple(by_class[kind])
        before = bel
        if kind is RoleKind.SUPPORTIVE:
            bel = update_supportive(bel, aggregate_support(items, opts.tnorm), 1.0)
        elif kind is RoleKind.ADVERSE:
            bel = update_adverse(bel, aggregate_adversity(items, opts.tnorm), 1.0)
        elif kind is RoleKind.SUFFICIENT:
            bel = aggregate_sufficient(bel, items)
        elif kind is RoleKind.CONTRARY:
            bel = aggregate_contrary(bel, items)
        else:
            bel = aggregate_necessary(bel, items)
        stages.append(StageRecord(kind.value, items, before, bel))

    return bel, EvaluationTrace(tuple(stages))


@dataclass(frozen=True)
class SweepRow:
    """One what-if step: the swept strength and the resulting beliefs."""

    eta: float
    belief: float
    stage_supportive: float
    stage_adverse: float
    stage_sufficient: float
    stage_contrary: float
    stage_necessary: float

    @classmethod
    def from_trace(cls, eta: float, trace: EvaluationTrace) -> "SweepRow":
        after = {s.stage: s.belief_after for s in trace.stages}
        return cls(
            eta=eta,
            belief=trace.final_belief,
            stage_supportive=after["supportive"],
            stage_adverse=after["adverse"],
            stage_sufficient=after["sufficient"],
            stage_contrary=after["contrary"],
            stage_necessary=after["necessary"],
        )


def sweep_factor(
    kb: KnowledgeBase,
    evidence: Sequence[EvidenceItem],
    factor_id: str,
    steps: int,
    opts: EvaluationOptions | None = None,
) -> list[SweepRow]:
    """Vary one factor's strength over an even grid, holding everything else fixed.

    The target factor's observation is replaced by a direct strength at
    each of ``steps`` evenly spaced points from 0 to 1 inclusive; its
    sharpness still applies downstream. Any existing evidence for the
    target is ignored for the sweep.
    """
    if not isinstance(steps, int) or isinstance(steps, bool) or steps < 2:
        raise ValueError(f"steps must be an integer >= 2, got {steps!r}")
    if kb.factor(factor_id) is None:
        raise UnknownFactorError(factor_id)
    held = [item for item in evidence if item.factor_id != factor_id]
    rows: list[SweepRow] = []
    for k in range(steps):
        eta = k / (steps - 1)
        probe = held + [EvidenceItem.strength(factor_id, eta)]
        _, trace = evaluate_pipeline(kb, probe, opts)
        rows.append(SweepRow.from_trace(eta, trace))
    return rows
