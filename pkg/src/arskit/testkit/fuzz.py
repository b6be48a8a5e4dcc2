"""Random search for violations of the claim set, with greedy shrinking."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from ..catalog import Fixture, fixture, run_evidence
from ..properties import global_profile
from ..relations import FiniteArs
from .claims import Claim, Kind, Scope, claim_set, refutes, violation
from .rng import instance_stream

DEFAULT_DENSITIES = (0.1, 0.2, 0.35, 0.5)


@dataclass(frozen=True)
class GenConfig:
    seed: int
    count: int
    max_size: int
    densities: tuple[float, ...] = DEFAULT_DENSITIES

    def __post_init__(self):
        if self.count < 1 or self.max_size < 1:
            raise ValueError("count and max_size must be at least 1")
        if not self.densities or not all(0 < p <= 1 for p in self.densities):
            raise ValueError("densities must be non-empty and lie in (0, 1]")


@dataclass
class FuzzReport:
    instances: int = 0
    violations: Counter = field(default_factory=Counter)
    counterexamples: dict[str, FiniteArs] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: FuzzReport) -> FuzzReport:
        out = FuzzReport(self.instances + other.instances, self.violations + other.violations)
        for label in set(self.counterexamples) | set(other.counterexamples):
            options = [r.counterexamples[label] for r in (self, other) if label in r.counterexamples]
            out.counterexamples[label] = min(options, key=instance_order)
        return out


def instance_order(ars: FiniteArs):
    """Smaller first: element count, then edge count, then the edge list."""
    return (ars.size, len(ars.steps), ars.steps, ars.names)


def violates(claim: Claim, ars: FiniteArs) -> bool:
    return violation(claim, global_profile(ars)) is not None


def delete_element(ars: FiniteArs, i: int) -> FiniteArs:
    keep = [j for j in range(ars.size) if j != i]
    new = {old: k for k, old in enumerate(keep)}
    steps = tuple((new[a], new[b]) for a, b in ars.steps if a != i and b != i)
    return FiniteArs(tuple(ars.names[j] for j in keep), steps)


def delete_step(ars: FiniteArs, step: tuple[int, int]) -> FiniteArs:
    return FiniteArs(ars.names, tuple(s for s in ars.steps if s != step))


def shrink(claim: Claim, ars: FiniteArs) -> FiniteArs:
    """One greedy pass deleting elements, then one deleting steps."""
    i = 0
    while i < ars.size and ars.size > 1:
        smaller = delete_element(ars, i)
        if violates(claim, smaller):
            ars = smaller
        else:
            i += 1
    for step in list(ars.steps):
        smaller = delete_step(ars, step)
        if violates(claim, smaller):
            ars = smaller
    return ars


def fuzz_implications(cfg: GenConfig, claims=None) -> FuzzReport:
    claims = [c for c in (claims or claim_set()) if c.kind is not Kind.NON_IMPLICATION]
    report = FuzzReport()
    first: dict[str, FiniteArs] = {}
    for ars in instance_stream(cfg.seed, cfg.count, cfg.max_size, cfg.densities):
        report.instances += 1
        profile = global_profile(ars)
        for claim in claims:
            if violation(claim, profile) is not None:
                report.violations[claim.label] += 1
                first.setdefault(claim.label, ars)
    for claim in claims:
        if claim.label in first:
            report.counterexamples[claim.label] = shrink(claim, first[claim.label])
    return report


def confirm_non_implication(claim: Claim, witness: Fixture | None = None) -> bool:
    """Whether the named fixture exhibits the premise without the conclusion.

    Infinite fixtures count only when all their bounded evidence checks out;
    pointwise claims are then read at ``f0``.
    """
    if claim.kind is not Kind.NON_IMPLICATION:
        raise ValueError(f"{claim.label} is not a non-implication")
    f = witness or fixture(claim.witness)
    if f.is_finite:
        return refutes(claim, global_profile(f.system))
    if not all(e.ok for e in run_evidence(f)):
        return False
    element = "f0" if claim.scope is Scope.POINTWISE else None
    premise = [f.expected(p, element) for p in claim.premise]
    conclusion = [f.expected(p, element) for p in claim.conclusion]
    if None in premise or None in conclusion:
        return False
    return all(premise) and not all(conclusion)


def confirm_non_implications(claims=None) -> dict[str, bool]:
    claims = claims or claim_set()
    return {c.label: confirm_non_implication(c) for c in claims if c.kind is Kind.NON_IMPLICATION}
