"""Evidential decision engine.

Factors play typed roles toward a bivalent hypothesis; evidence
partially matches factors and is aggregated in a fixed staged order to
produce a final degree of belief, with Dempster-Shafer and certainty
factor calculi available as comparison oracles.
"""

from .aggregation import (
    STAGE_NAMES,
    STAGE_ORDER,
    SweepRow,
    aggregate_adversity,
    aggregate_contrary,
    aggregate_necessary,
    aggregate_sufficient,
    aggregate_support,
    combine_support,
    evaluate_pipeline,
    joint_mixed,
    sweep_factor,
)
from .calculi import (
    Bpa,
    CalculusResult,
    EquivalenceReport,
    cf_emycin,
    cf_mycin,
    compare_calculi,
    ds_combine,
    oracle_adverse,
    oracle_supportive,
)
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
    StrengthObservation,
    UNKNOWN,
    UnknownObservation,
    ValueObservation,
    ValueScale,
    Violation,
    WeightedEvidence,
    effective_strength,
    validate_kb,
)
from .errors import (
    DegeneratePriorError,
    DocumentError,
    DuplicateEvidenceError,
    EngineError,
    EvaluationError,
    KbInvalidError,
    OrderingError,
    OutOfRangeValueError,
    ScaleError,
    TotalConflictError,
    UndefinedCertaintyError,
    UnknownFactorError,
    UnsupportedComparisonError,
)
from .kbio import (
    KbDocument,
    parse_evidence,
    parse_kb,
    parse_kb_document,
    parse_sweep,
    parse_trace,
    write_evidence,
    write_kb_document,
    write_sweep,
    write_trace,
)
from .roles import (
    elicit_adv,
    elicit_contr,
    elicit_nec,
    elicit_supp,
    update_adverse,
    update_contrary,
    update_necessary,
    update_sufficient,
    update_supportive,
)
from .tnorms import (
    Hamacher,
    LUKASIEWICZ,
    Lukasiewicz,
    MINIMUM,
    Minimum,
    PRODUCT,
    Product,
    TNorm,
    tnorm_eval,
    tnorm_from_name,
)

__version__ = "0.1.0"
