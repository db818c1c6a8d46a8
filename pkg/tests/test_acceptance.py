"""Acceptance suite: one test per release criterion, with timing.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS/FAIL
line per criterion. Every tolerance and sample count is pinned here;
random draws are seeded so failures reproduce.
"""

import functools
import json
import subprocess
import sys
import time
from importlib.resources import files
from pathlib import Path

import numpy as np

from ede import (
    Bpa,
    EvidenceItem,
    FactorSpec,
    Hamacher,
    KnowledgeBase,
    LUKASIEWICZ,
    MINIMUM,
    PRODUCT,
    RoleKind,
    RoleSpec,
    ValueScale,
    WeightedEvidence,
    aggregate_necessary,
    ds_combine,
    evaluate_pipeline,
    joint_mixed,
    oracle_adverse,
    oracle_supportive,
    tnorm_eval,
    update_adverse,
    update_contrary,
    update_necessary,
    update_sufficient,
    update_supportive,
)

SEED = 20260809
GOLDEN = Path(__file__).parent / "golden"
DATA = files("ede") / "data"


def criterion(number, label, budget_seconds=None):
    """Time the criterion body and print one PASS/FAIL line."""

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            start = time.perf_counter()
            try:
                fn(*args, **kwargs)
            except BaseException:
                elapsed = time.perf_counter() - start
                print(f"\nACCEPTANCE {number:02d} FAIL {label} ({elapsed:.2f}s)")
                raise
            elapsed = time.perf_counter() - start
            print(f"\nACCEPTANCE {number:02d} PASS {label} ({elapsed:.2f}s)")
            if budget_seconds is not None:
                assert elapsed < budget_seconds, (
                    f"criterion {number} exceeded its {budget_seconds}s budget: {elapsed:.2f}s"
                )

        return wrapper

    return deco


@criterion(1, "endpoint consistency of the five role updates", budget_seconds=1.0)
def test_endpoint_consistency():
    rng = np.random.default_rng(SEED)
    presence = {
        update_supportive: lambda bel, x: bel + x * (1 - bel),
        update_adverse: lambda bel, x: bel * (1 - x),
        update_sufficient: lambda bel, x: max(bel, x),
        update_necessary: lambda bel, x: bel,
        update_contrary: lambda bel, x: min(bel, 1 - x),
    }
    absence = {
        update_supportive: lambda bel, x: bel,
        update_adverse: lambda bel, x: bel,
        update_sufficient: lambda bel, x: bel,
        update_necessary: lambda bel, x: min(bel, 1 - x),
        update_contrary: lambda bel, x: bel,
    }
    for update in presence:
        bels = rng.uniform(0, 1, 10_000)
        xs = rng.uniform(0, 1, 10_000)
        for bel, x in zip(bels, xs):
            assert abs(update(bel, x, 1.0) - presence[update](bel, x)) <= 1e-12
            assert abs(update(bel, x, 0.0) - absence[update](bel, x)) <= 1e-12


@criterion(2, "t-norm axioms, Hamacher/product identity, pointwise ordering", budget_seconds=2.0)
def test_tnorm_axiom_suite():
    rng = np.random.default_rng(SEED + 1)
    variants = [PRODUCT, MINIMUM, LUKASIEWICZ, Hamacher(0.0), Hamacher(0.25), Hamacher(0.5), Hamacher(1.0)]
    for t in variants:
        triples = rng.uniform(0, 1, (10_000, 3))
        for a, b, c in triples:
            ab = tnorm_eval(t, a, b)
            assert abs(ab - tnorm_eval(t, b, a)) <= 1e-12
            assert abs(tnorm_eval(t, ab, c) - tnorm_eval(t, a, tnorm_eval(t, b, c))) <= 1e-12
            lo, hi = (a, b) if a <= b else (b, a)
            assert tnorm_eval(t, lo, c) <= tnorm_eval(t, hi, c) + 1e-12
            assert abs(tnorm_eval(t, 1.0, a) - a) <= 1e-12
    pairs = rng.uniform(0, 1, (10_000, 2))
    for a, b in pairs:
        assert tnorm_eval(Hamacher(1.0), a, b) == tnorm_eval(PRODUCT, a, b)
        luk = tnorm_eval(LUKASIEWICZ, a, b)
        prod = tnorm_eval(PRODUCT, a, b)
        assert luk <= prod + 1e-12 <= tnorm_eval(MINIMUM, a, b) + 2e-12


def _random_kb_and_evidence(rng, min_factors=1, max_factors=5):
    """A valid KB plus evidence, drawn uniformly over the legal shapes."""
    supportive_side = (RoleKind.SUPPORTIVE, RoleKind.SUFFICIENT, RoleKind.NECESSARY)
    adverse_side = (RoleKind.ADVERSE, RoleKind.CONTRARY, RoleKind.NECESSARY)
    n = int(rng.integers(min_factors, max_factors + 1))
    factors = []
    for i in range(n):
        side = supportive_side if rng.random() < 0.5 else adverse_side
        count = int(rng.integers(1, len(side) + 1))
        kinds = list(rng.choice(len(side), size=count, replace=False))
        roles = tuple(RoleSpec(side[k], float(rng.random())) for k in kinds)
        if rng.random() < 0.5:
            v_low = float(rng.uniform(-100, 100))
            scale = ValueScale.interval(v_low, v_low + float(rng.uniform(0.1, 100)))
        else:
            scale = ValueScale.nominal()
        factors.append(FactorSpec(f"f{i}", "", scale, roles, int(rng.integers(1, 4))))
    kb = KnowledgeBase("h", float(rng.random()), tuple(factors))
    evidence = []
    for factor in kb.factors:
        draw = rng.random()
        if draw < 0.2:
            continue
        if draw < 0.35:
            evidence.append(EvidenceItem.unknown(factor.id))
        elif draw < 0.6 and factor.scale.v_low is not None:
            v = float(rng.uniform(factor.scale.v_low, factor.scale.v_high))
            evidence.append(EvidenceItem.value(factor.id, v))
        else:
            evidence.append(EvidenceItem.strength(factor.id, float(rng.random())))
    return kb, evidence


@criterion(3, "pipeline permutation invariance under the product t-norm", budget_seconds=5.0)
def test_permutation_invariance():
    rng = np.random.default_rng(SEED + 2)
    for _ in range(1_000):
        kb, evidence = _random_kb_and_evidence(rng, min_factors=2, max_factors=6)
        baseline, _ = evaluate_pipeline(kb, evidence)
        order = rng.permutation(len(kb.factors))
        permuted = KnowledgeBase(kb.hypothesis, kb.prior, tuple(kb.factors[i] for i in order))
        ev_order = rng.permutation(len(evidence))
        permuted_ev = [evidence[i] for i in ev_order]
        result, _ = evaluate_pipeline(permuted, permuted_ev)
        assert abs(result - baseline) <= 1e-9


@criterion(4, "support-then-discount is the conservative composition", budget_seconds=1.0)
def test_conservativeness():
    rng = np.random.default_rng(SEED + 3)
    triples = rng.uniform(0, 1, (10_000, 3))
    for bel, s, a in triples:
        method1 = joint_mixed(bel, (s, 1.0), (a, 1.0))
        discounted = bel * (1.0 - a)
        method2 = discounted + s * (1.0 - discounted)
        assert method1 <= method2 + 1e-12
        if bel * s * a > 0 and bel < 1:
            assert method1 < method2


@criterion(5, "Dempster-rule correspondence for supportive and adverse combination", budget_seconds=2.0)
def test_dempster_oracle_equivalence():
    rng = np.random.default_rng(SEED + 4)
    for bel, x1, x2 in rng.uniform(0, 1, (10_000, 3)):
        assert oracle_supportive(bel, x1, x2).difference <= 1e-12
    for bel, x1, x2 in rng.uniform(0, 1, (10_000, 3)):
        assert oracle_adverse(bel, x1, x2).difference <= 1e-12


@criterion(6, "necessary-factor aggregation special cases", budget_seconds=1.0)
def test_necessary_aggregation_special_cases():
    rng = np.random.default_rng(SEED + 5)
    for _ in range(1_000):
        bel, n1, n2, zeta = rng.uniform(0, 1, 4)
        both_absent = aggregate_necessary(
            bel, [WeightedEvidence("a", n1, 0.0), WeightedEvidence("b", n2, 0.0)]
        )
        assert abs(both_absent - min(bel, 1.0 - max(n1, n2))) <= 1e-12
        one_confirmed = aggregate_necessary(
            bel, [WeightedEvidence("a", n1, 1.0), WeightedEvidence("b", n2, zeta)]
        )
        assert abs(one_confirmed - update_necessary(bel, n2, zeta)) <= 1e-12


@criterion(7, "joint support/adversity is not composable without the prior")
def test_non_composability_witness():
    def implied_support(bel):
        return (joint_mixed(bel, (0.5, 1.0), (0.4, 1.0)) - bel) / (1.0 - bel)

    assert abs(implied_support(0.1) - implied_support(0.6)) > 1e-3


@criterion(8, "boundedness over randomized knowledge bases", budget_seconds=30.0)
def test_boundedness_fuzz():
    rng = np.random.default_rng(SEED + 6)
    for _ in range(100_000):
        kb, evidence = _random_kb_and_evidence(rng, min_factors=1, max_factors=4)
        belief, trace = evaluate_pipeline(kb, evidence)
        assert 0.0 <= belief <= 1.0
        for stage in trace.stages:
            assert 0.0 <= stage.belief_after <= 1.0


def _run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "ede", *args], capture_output=True, text=True
    )


@criterion(9, "golden worked example via library and CLI, bit-identical")
def test_golden_worked_example():
    kb_path = str(DATA / "worked_example.kb.json")
    ev_path = str(DATA / "worked_example.ev.json")

    from ede import parse_evidence, parse_kb

    kb = parse_kb(Path(kb_path).read_text())
    evidence = parse_evidence(Path(ev_path).read_text(), kb)
    belief, trace = evaluate_pipeline(kb, evidence)
    assert abs(belief - 0.36) <= 1e-12
    waypoints = [trace.stages[0].belief_before] + [s.belief_after for s in trace.stages]
    expected = [0.2, 0.6, 0.36, 0.36, 0.36, 0.36]
    assert all(abs(a - b) <= 1e-12 for a, b in zip(waypoints, expected))

    first = _run_cli("evaluate", kb_path, ev_path, "--trace")
    second = _run_cli("evaluate", kb_path, ev_path, "--trace")
    assert first.returncode == 0
    assert first.stdout.endswith("0.360000000\n")
    assert first.stdout == second.stdout == (GOLDEN / "worked_example_trace.txt").read_text()


@criterion(10, "golden sensitivity sweeps through the CLI")
def test_golden_sweeps():
    supportive = _run_cli(
        "sweep", str(DATA / "sweep_supportive.kb.json"), str(DATA / "empty.ev.json"),
        "--factor", "reference_strength", "--steps", "3",
    )
    necessary = _run_cli(
        "sweep", str(DATA / "sweep_necessary.kb.json"), str(DATA / "empty.ev.json"),
        "--factor", "identity_verified", "--steps", "3",
    )
    assert supportive.returncode == 0 and necessary.returncode == 0
    assert supportive.stdout == (GOLDEN / "sweep_supportive.csv").read_text()
    assert necessary.stdout == (GOLDEN / "sweep_necessary.csv").read_text()
    beliefs = [line.split(",")[1] for line in supportive.stdout.splitlines()[1:]]
    assert beliefs == ["0.500000000", "0.600000000", "0.700000000"]
    beliefs = [line.split(",")[1] for line in necessary.stdout.splitlines()[1:]]
    assert beliefs == ["0.100000000", "0.400000000", "0.700000000"]
