"""Domain types for role-typed decision factors and their evidence.

A knowledge base captures one decision maker's view of a bivalent
decision: a hypothesis, a prior degree of belief, and a set of factors.
Each factor plays one or more roles (supportive, adverse, sufficient,
necessary, contrary), each with an intensity in [0, 1], over a value
scale with two margins. Evidence arrives per factor as an observed
value, a direct strength, or Unknown, and is reduced to an evidential
strength eta in [0, 1] before any belief arithmetic happens.

Degrees of belief are plain floats confined to [0, 1]; every operation
in this package keeps them there. Absence of evidence (Unknown) is
deliberately distinct from evidence of absence (eta = 0): an unobserved
factor is skipped by every pipeline stage, while eta = 0 means the
factor was confirmed at its low margin and, for a necessary factor,
filters the belief down.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .errors import OutOfRangeValueError, ScaleError
from .tnorms import PRODUCT, TNorm


def check_unit(value: float, name: str) -> float:
    """Require a finite number in [0, 1]; returns it as float."""
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{name} must be a number, got {value!r}")
    x = float(value)
    if not math.isfinite(x) or not 0.0 <= x <= 1.0:
        raise ValueError(f"{name} must be in [0, 1], got {value}")
    return x


def clip_unit(x: float) -> float:
    """Clamp float drift back into [0, 1] after arithmetic on unit values."""
    if x < 0.0:
        return 0.0
    if x > 1.0:
        return 1.0
    return x


class RoleKind(str, Enum):
    """The five causal behavior classes a factor can play toward the hypothesis."""

    SUPPORTIVE = "supportive"
    ADVERSE = "adverse"
    SUFFICIENT = "sufficient"
    NECESSARY = "necessary"
    CONTRARY = "contrary"


# Role pairs that pull the belief in opposite directions at the same
# margin; a single factor may not play both sides of any pair.
# Necessary combines freely with everything (including contrary, whose
# superposition caps the belief at both margins and is intentionally
# non-monotone in eta).
CONFLICTING_ROLE_PAIRS = frozenset(
    (a, b)
    for a in (RoleKind.SUPPORTIVE, RoleKind.SUFFICIENT)
    for b in (RoleKind.ADVERSE, RoleKind.CONTRARY)
)


@dataclass(frozen=True)
class RoleSpec:
    """One role with its intensity (SUPP, ADV, SUFF, NEC, or CONTR)."""

    kind: RoleKind
    intensity: float

    def __post_init__(self):
        if not isinstance(self.kind, RoleKind):
            object.__setattr__(self, "kind", RoleKind(self.kind))
        object.__setattr__(self, "intensity", check_unit(self.intensity, "intensity"))


class ScaleKind(str, Enum):
    INTERVAL = "interval"
    NOMINAL = "nominal"
    ORDINAL = "ordinal"


@dataclass(frozen=True)
class ValueScale:
    """A factor's value scale; interval scales carry the margins [v_low, v_high].

    The margins are the points where the role's "absent" and "present"
    behavior applies; partial matching interpolates between them, which
    is only meaningful on an interval scale.
    """

    kind: ScaleKind
    v_low: float | None = None
    v_high: float | None = None
    units: str = ""

    def __post_init__(self):
        if not isinstance(self.kind, ScaleKind):
            object.__setattr__(self, "kind", ScaleKind(self.kind))
        if self.kind is ScaleKind.INTERVAL:
            for name, v in (("v_low", self.v_low), ("v_high", self.v_high)):
                if isinstance(v, bool) or not isinstance(v, (int, float)):
                    raise ValueError(f"interval scale requires numeric {name}")
                if not math.isfinite(float(v)):
                    raise ValueError(f"{name} must be finite, got {v}")
            object.__setattr__(self, "v_low", float(self.v_low))
            object.__setattr__(self, "v_high", float(self.v_high))
        else:
            if self.v_low is not None or self.v_high is not None:
                raise ValueError(f"margins only apply to interval scales, not {self.kind.value}")
            if self.units:
                raise ValueError("units only apply to interval scales")

    @classmethod
    def interval(cls, v_low: float, v_high: float, units: str = "") -> "ValueScale":
        return cls(ScaleKind.INTERVAL, v_low, v_high, units)

    @classmethod
    def nominal(cls) -> "ValueScale":
        return cls(ScaleKind.NOMINAL)

    @classmethod
    def ordinal(cls) -> "ValueScale":
        return cls(ScaleKind.ORDINAL)


@dataclass(frozen=True)
class FactorSpec:
    """A named decision factor: scale, roles, and the rigid-judgement exponent.

    ``sharpness`` raises the evidential strength to the n-th power before
    any role update; n = 1 is pure linear interpolation, large n
    approaches an all-or-none (rigid) judgement.
    """

    id: str
    label: str
    scale: ValueScale
    roles: tuple[RoleSpec, ...]
    sharpness: int = 1

    def __post_init__(self):
        object.__setattr__(self, "roles", tuple(self.roles))

    def role(self, kind: RoleKind) -> RoleSpec | None:
        for r in self.roles:
            if r.kind is kind:
                return r
        return None


@dataclass(frozen=True)
class ValueObservation:
    """The factor was observed at value v on its own scale."""

    v: float

    def __post_init__(self):
        if isinstance(self.v, bool) or not isinstance(self.v, (int, float)):
            raise ValueError(f"observed value must be a number, got {self.v!r}")
        if not math.isfinite(float(self.v)):
            raise ValueError(f"observed value must be finite, got {self.v}")
        object.__setattr__(self, "v", float(self.v))


@dataclass(frozen=True)
class StrengthObservation:
    """The evidential strength eta was judged directly."""

    eta: float

    def __post_init__(self):
        object.__setattr__(self, "eta", check_unit(self.eta, "eta"))


@dataclass(frozen=True)
class UnknownObservation:
    """No evidence for this factor; the factor is skipped in every stage."""


UNKNOWN = UnknownObservation()

Observation = Union[ValueObservation, StrengthObservation, UnknownObservation]


@dataclass(frozen=True)
class EvidenceItem:
    """One observation tied to a factor id."""

    factor_id: str
    observation: Observation

    @classmethod
    def value(cls, factor_id: str, v: float) -> "EvidenceItem":
        return cls(factor_id, ValueObservation(v))

    @classmethod
    def strength(cls, factor_id: str, eta: float) -> "EvidenceItem":
        return cls(factor_id, StrengthObservation(eta))

    @classmethod
    def unknown(cls, factor_id: str) -> "EvidenceItem":
        return cls(factor_id, UNKNOWN)


@dataclass(frozen=True)
class KnowledgeBase:
    """The decision maker's cognitive structure for one hypothesis."""

    hypothesis: str
    prior: float = 0.0
    factors: tuple[FactorSpec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prior", check_unit(self.prior, "prior"))
        object.__setattr__(self, "factors", tuple(self.factors))

    def factor(self, factor_id: str) -> FactorSpec | None:
        for f in self.factors:
            if f.id == factor_id:
                return f
        return None


class OutOfRangePolicy(str, Enum):
    """What to do with observed values outside the margins."""

    ERROR = "error"
    CLAMP = "clamp"


@dataclass(frozen=True)
class EvaluationOptions:
    tnorm: TNorm = PRODUCT
    out_of_range_policy: OutOfRangePolicy = OutOfRangePolicy.ERROR


@dataclass(frozen=True)
class WeightedEvidence:
    """One factor's contribution to a role class: intensity plus strength."""

    factor_id: str
    intensity: float
    eta: float

    def __post_init__(self):
        object.__setattr__(self, "intensity", check_unit(self.intensity, "intensity"))
        object.__setattr__(self, "eta", check_unit(self.eta, "eta"))


@dataclass(frozen=True)
class StageRecord:
    """Belief before and after one role-class stage of the pipeline."""

    stage: str
    inputs: tuple[WeightedEvidence, ...]
    belief_before: float
    belief_after: float

    def __post_init__(self):
        object.__setattr__(self, "inputs", tuple(self.inputs))


@dataclass(frozen=True)
class EvaluationTrace:
    """Ordered per-stage record of one pipeline evaluation."""

    stages: tuple[StageRecord, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "stages", tuple(self.stages))

    @property
    def prior(self) -> float:
        return self.stages[0].belief_before

    @property
    def final_belief(self) -> float:
        return self.stages[-1].belief_after


@dataclass(frozen=True)
class Violation:
    """One violated knowledge-base invariant, as data rather than a failure."""

    factor_id: str | None
    reason: str

    def __str__(self) -> str:
        if self.factor_id is None:
            return self.reason
        return f"factor {self.factor_id!r}: {self.reason}"


def _is_unit(x) -> bool:
    return (
        isinstance(x, (int, float))
        and not isinstance(x, bool)
        and math.isfinite(float(x))
        and 0.0 <= float(x) <= 1.0
    )


def validate_kb(kb: KnowledgeBase) -> list[Violation]:
    """Check every structural invariant of a knowledge base.

    Returns one :class:`Violation` per problem; an empty list means the
    knowledge base is valid. Pure: the same knowledge base always yields
    the same list, in factor order.
    """
    out: list[Violation] = []
    if not _is_unit(kb.prior):
        out.append(Violation(None, f"prior must be in [0, 1], got {kb.prior}"))

    seen: set[str] = set()
    for f in kb.factors:
        if f.id in seen:
            out.append(Violation(f.id, "duplicate factor id"))
        seen.add(f.id)

    for f in kb.factors:
        if not f.id:
            out.append(Violation(f.id, "empty factor id"))
        if not f.roles:
            out.append(Violation(f.id, "factor plays no role"))
        kinds = [r.kind for r in f.roles]
        for kind in RoleKind:
            if kinds.count(kind) > 1:
                out.append(Violation(f.id, f"role kind {kind.value!r} appears more than once"))
        present = set(kinds)
        for a, b in sorted(CONFLICTING_ROLE_PAIRS, key=lambda p: (p[0].value, p[1].value)):
            if a in present and b in present:
                out.append(
                    Violation(f.id, f"conflicting roles: {a.value} with {b.value}")
                )
        for r in f.roles:
            if not _is_unit(r.intensity):
                out.append(
                    Violation(f.id, f"{r.kind.value} intensity must be in [0, 1], got {r.intensity}")
                )
        if isinstance(f.sharpness, bool) or not isinstance(f.sharpness, int):
            out.append(Violation(f.id, f"sharpness must be an integer, got {f.sharpness!r}"))
        elif f.sharpness < 1:
            out.append(Violation(f.id, f"sharpness must be >= 1, got {f.sharpness}"))
        if f.scale.kind is ScaleKind.INTERVAL and not (f.scale.v_low < f.scale.v_high):
            out.append(
                Violation(
                    f.id,
                    f"degenerate margins: v_low ({f.scale.v_low}) must be strictly "
                    f"below v_high ({f.scale.v_high})",
                )
            )
    return out


def effective_strength(
    item: EvidenceItem,
    factor: FactorSpec,
    policy: OutOfRangePolicy = OutOfRangePolicy.ERROR,
) -> float | None:
    """Reduce one observation to an evidential strength in [0, 1].

    A value observation is positioned linearly within the factor margins,
    so the low margin maps to 0 and the high margin to 1; a strength
    observation is taken as-is. Either way the result is raised to the
    factor's sharpness power. Returns None for Unknown.

    Raises :class:`ScaleError` for value observations on non-interval
    factors, and :class:`OutOfRangeValueError` for values outside the
    margins under the Error policy (the Clamp policy snaps them to the
    nearer margin).
    """
    if item.factor_id != factor.id:
        raise ValueError(
            f"evidence for {item.factor_id!r} applied to factor {factor.id!r}"
        )
    obs = item.observation
    if isinstance(obs, UnknownObservation):
        return None

    n = factor.sharpness
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"sharpness must be an integer >= 1, got {n!r}")

    if isinstance(obs, StrengthObservation):
        eta = obs.eta
    elif isinstance(obs, ValueObservation):
        if factor.scale.kind is not ScaleKind.INTERVAL:
            raise ScaleError(
                f"factor {factor.id!r} has a {factor.scale.kind.value} scale; "
                "partial matching by value requires an interval scale"
            )
        v_low, v_high = factor.scale.v_low, factor.scale.v_high
        v = obs.v
        if not v_low <= v <= v_high:
            if policy is OutOfRangePolicy.ERROR:
                raise OutOfRangeValueError(factor.id, v, v_low, v_high)
            v = min(max(v, v_low), v_high)
        eta = (v - v_low) / (v_high - v_low)
    else:
        raise TypeError(f"not an observation: {obs!r}")

    return eta if n == 1 else eta**n
