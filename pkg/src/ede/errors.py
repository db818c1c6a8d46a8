"""Exception hierarchy for the engine.

Two broad families matter to callers: :class:`DocumentError` and
:class:`KbInvalidError` are *input* problems (malformed or inconsistent
documents, CLI exit code 2), while :class:`EvaluationError` and its
subclasses are *computation* problems raised once the inputs were
structurally sound (CLI exit code 3, HTTP 422).
"""

from __future__ import annotations


class EngineError(Exception):
    """Base class for every error raised by this package."""


class DocumentError(EngineError):
    """A document failed to parse: bad syntax, bad schema, or a bad field.

    ``path`` points at the offending location, e.g.
    ``factors[0].roles[1].intensity``.
    """

    def __init__(self, message: str, path: str | None = None):
        super().__init__(message if path is None else f"{path}: {message}")
        self.path = path
        self.reason = message


class KbInvalidError(EngineError):
    """A knowledge base violates structural invariants.

    Carries the full violation list from ``validate_kb`` so callers can
    report every problem at once.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid knowledge base: {lines}")


class EvaluationError(EngineError):
    """A computation could not be carried out on otherwise valid inputs."""


class UnknownFactorError(EvaluationError):
    """Evidence references a factor id that is not in the knowledge base."""

    def __init__(self, factor_id: str):
        super().__init__(f"unknown factor: {factor_id!r}")
        self.factor_id = factor_id


class DuplicateEvidenceError(EvaluationError):
    """More than one evidence item targets the same factor."""

    def __init__(self, factor_id: str):
        super().__init__(f"duplicate evidence for factor: {factor_id!r}")
        self.factor_id = factor_id


class OutOfRangeValueError(EvaluationError):
    """An observed value falls outside the factor margins under the Error policy."""

    def __init__(self, factor_id: str, value: float, v_low: float, v_high: float):
        super().__init__(
            f"value {value} for factor {factor_id!r} outside margins "
            f"[{v_low}, {v_high}]"
        )
        self.factor_id = factor_id
        self.value = value


class ScaleError(EvaluationError):
    """A value observation was given for a factor without an interval scale.

    Partial matching needs a position within the margins, which only an
    interval scale provides.
    """


class DegeneratePriorError(EvaluationError):
    """Elicitation is undefined at this prior (1 for support, 0 for adversity)."""


class OrderingError(EvaluationError):
    """Prior/posterior pair is ordered the wrong way for the requested role.

    A posterior below the prior elicits adversity, not support, and vice
    versa; the caller must pick the matching role kind.
    """


class TotalConflictError(EvaluationError):
    """Normalized combination of two totally conflicting mass assignments."""


class UndefinedCertaintyError(EvaluationError):
    """EMYCIN certainty factor is undefined at MB = MD = 1."""


class UnsupportedComparisonError(EvaluationError):
    """Calculus comparison only covers supportive and adverse roles."""

    def __init__(self, factor_ids):
        self.factor_ids = list(factor_ids)
        ids = ", ".join(repr(f) for f in self.factor_ids)
        super().__init__(
            "comparison requires a supportive/adverse-only knowledge base; "
            f"offending factors: {ids}"
        )
