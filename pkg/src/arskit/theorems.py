"""Witness-producing versions of the classical confluence theorems.

Each procedure follows the recursion of a constructive proof and returns a
concrete :class:`~arskit.properties.Join` (or cofinal sequence, or normal
form).  Preconditions are checked eagerly and violations are reported with
the offending element.  Recursions are guarded by ``fuel`` because their
termination is a semantic argument (strong normalization or strong
minimalization of the apex), not a structural one.
"""

from __future__ import annotations

import enum
from collections.abc import Hashable
from dataclasses import dataclass, field

from .errors import FuelExhausted, MalformedLasso, PreconditionFailed
from .properties import (
    ELEMENT_PROPERTIES,
    CofinalityWitness,
    GlobalProfile,
    Join,
    Peak,
    global_profile,
    join_pair,
    nearest_normal_form,
)
from .relations import EnumerableArs, FiniteArs, Lasso, PathWitness, path_between


class JoinMethod(enum.Enum):
    NEWMAN = "newman"
    GENERALIZED_NEWMAN = "generalizedNewman"
    WN_UN = "wnUn"
    COFINALITY = "cofinality"
    EXHAUSTIVE = "exhaustive"


def make_peak(ars: FiniteArs, apex: int, left: int, right: int) -> Peak | None:
    """The peak ``left *<- apex ->* right`` built from shortest reductions."""
    lpath = path_between(ars, apex, left)
    rpath = path_between(ars, apex, right)
    if lpath is None or rpath is None:
        return None
    return Peak(apex, lpath, rpath)


def _check_peak(ars: FiniteArs, peak: Peak) -> None:
    if not peak.is_valid(ars):
        raise ValueError("peak paths must start at the apex and follow steps")


def _cyclic_reduct(ars: FiniteArs, a: int) -> int | None:
    view = ars.scc
    for y in ars.reachable(a):
        if view.cyclic[view.component_of[y]]:
            return y
    return None


def _wcr_failure(ars: FiniteArs, elements) -> tuple[int, int, int] | None:
    reach = ars.reach
    for x in elements:
        succ = ars.successors[x]
        for i, b in enumerate(succ):
            for c in succ[i + 1:]:
                if not (reach[b] & reach[c]).any():
                    return x, b, c
    return None


def _raise_wcr(ars: FiniteArs, failure: tuple[int, int, int]) -> None:
    x, b, c = failure
    names = ars.names
    raise PreconditionFailed(
        "WCR",
        f"WCR fails at {names[x]}: peak {names[b]} <- {names[x]} -> {names[c]} has no join",
        element=x,
        evidence=(b, c),
    )


def _trivial_join(peak: Peak) -> Join | None:
    if peak.left.length == 0:
        return Join(peak.right.end, peak.right, PathWitness((peak.right.end,)))
    if peak.right.length == 0:
        return Join(peak.left.end, PathWitness((peak.left.end,)), peak.left)
    return None


def _tail(path: PathWitness) -> PathWitness:
    return PathWitness(path.nodes[1:])


def _newman_step(ars: FiniteArs, peak: Peak, fuel: int, base_case) -> Join:
    trivial = _trivial_join(peak)
    if trivial is not None:
        return trivial
    base = base_case(peak)
    if base is not None:
        return base
    if fuel <= 0:
        raise FuelExhausted(f"join recursion ran out of fuel at {ars.names[peak.apex]}", peak.apex)
    # apex -> b1 ->* b  and  apex -> c1 ->* c
    left_rest = _tail(peak.left)
    right_rest = _tail(peak.right)
    b1, c1 = left_rest.start, right_rest.start
    local = join_pair(ars, b1, c1)
    if local is None:
        _raise_wcr(ars, (peak.apex, b1, c1))
    # close  b *<- b1 ->* d
    upper = _newman_step(ars, Peak(b1, left_rest, local.from_left), fuel - 1, base_case)
    # close  c *<- c1 ->* d ->* e
    lower = _newman_step(
        ars, Peak(c1, right_rest, local.from_right.then(upper.from_right)), fuel - 1, base_case
    )
    return Join(lower.target, upper.from_left.then(lower.from_right), lower.from_left)


def newman_join(ars: FiniteArs, peak: Peak, fuel: int) -> Join:
    """Close a peak by the recursion of the second Terese proof of Newman's lemma.

    Requires SN at the apex and WCR at every reduct of the apex.  The
    recursion depth is bounded by the longest reduction from the apex, so
    ``fuel >= len(reach(apex))`` always suffices.
    """
    _check_peak(ars, peak)
    loop = _cyclic_reduct(ars, peak.apex)
    if loop is not None:
        raise PreconditionFailed(
            "SN",
            f"{ars.names[peak.apex]} is not SN: it reaches {ars.names[loop]}, which lies on a cycle",
            element=peak.apex,
            evidence=loop,
        )
    failure = _wcr_failure(ars, ars.reachable(peak.apex))
    if failure is not None:
        _raise_wcr(ars, failure)
    return _newman_step(ars, peak, fuel, lambda p: None)


def generalized_newman_join(ars: FiniteArs, peak: Peak, fuel: int) -> Join:
    """Newman's recursion with strong minimalization in place of SN.

    Requires WCR everywhere and SM at the apex.  At a minimal-form apex every
    reduct reduces back to the apex, which closes the peak there.
    """
    _check_peak(ars, peak)
    failure = _wcr_failure(ars, range(ars.size))
    if failure is not None:
        _raise_wcr(ars, failure)
    profile = global_profile(ars)
    if not profile.elements[peak.apex].sm:
        raise PreconditionFailed(
            "SM", f"{ars.names[peak.apex]} is not strongly minimalizing", element=peak.apex
        )
    mf = [p.mf for p in profile.elements]

    def base_case(p: Peak) -> Join | None:
        if not mf[p.apex]:
            return None
        return Join(
            p.apex,
            path_between(ars, p.left.end, p.apex),
            path_between(ars, p.right.end, p.apex),
        )

    return _newman_step(ars, peak, fuel, base_case)


def wn_un_join(ars: FiniteArs, peak: Peak) -> Join:
    """Normalize both sides; unique normal forms make them meet."""
    _check_peak(ars, peak)
    profile = global_profile(ars)
    for p in profile.elements:
        if not p.wn:
            raise PreconditionFailed(
                "WN", f"WN fails at {ars.names[p.element]}: no normal form is reachable",
                element=p.element,
            )
    for p in profile.elements:
        if not p.un_red:
            raise PreconditionFailed(
                "UNred", f"{ars.names[p.element]} reaches two distinct normal forms",
                element=p.element,
            )
    left = nearest_normal_form(ars, peak.left.end)
    right = nearest_normal_form(ars, peak.right.end)
    # both normal forms are reducts of the apex, so UNred there identifies them
    assert left.end == right.end
    return Join(left.end, left, right)


def cofinality_join(ars: FiniteArs, witness: CofinalityWitness, peak: Peak) -> Join:
    """Meet at the later of the two sequence positions covering the peak's ends."""
    _check_peak(ars, peak)
    try:
        witness.sequence.validate(ars, reflexive=True)
    except MalformedLasso as exc:
        raise PreconditionFailed("CP", f"cofinal sequence is malformed: {exc}") from None
    if witness.base != peak.apex:
        raise PreconditionFailed(
            "CP",
            f"witness starts at {ars.names[witness.base]}, peak apex is {ars.names[peak.apex]}",
            element=peak.apex,
        )
    seq = witness.sequence
    entries = []
    for end in (peak.left.end, peak.right.end):
        entry = witness.coverage.get(end)
        if entry is None:
            raise PreconditionFailed("CP", f"no coverage for {ars.names[end]}", element=end)
        i, path = entry
        if path.start != end or path.end != seq.at(i) or not path.is_valid(ars):
            raise PreconditionFailed("CP", f"invalid coverage for {ars.names[end]}", element=end)
        entries.append((i, path))
    k = max(i for i, _ in entries)

    def walk(path: PathWitness, i: int) -> PathWitness:
        nodes = list(path.nodes)
        for t in range(i + 1, k + 1):
            x = seq.at(t)
            if x != nodes[-1]:
                nodes.append(x)
        return PathWitness(tuple(nodes))

    (i, lpath), (j, rpath) = entries
    return Join(seq.at(k), walk(lpath, i), walk(rpath, j))


def cr_to_cofinality(ars: FiniteArs, a: int) -> CofinalityWitness:
    """Build a cofinal sequence from ``a`` by joining its reducts one at a time."""
    ars.check_index(a)
    nodes = [a]
    coverage = {}
    for x in ars.reachable(a):
        current = nodes[-1]
        join = join_pair(ars, current, x)
        if join is None:
            names = ars.names
            raise PreconditionFailed(
                "CR",
                f"CR fails at {names[a]}: {names[x]} and {names[current]} have no common reduct",
                element=a,
                evidence=(x, current),
            )
        nodes.extend(join.from_left.nodes[1:])
        coverage[x] = (len(nodes) - 1, join.from_right)
    sequence = Lasso(tuple(nodes[:-1]), (nodes[-1],))
    return CofinalityWitness(sequence, coverage)


def normalize_sn(system: EnumerableArs | FiniteArs, key: Hashable, fuel: int) -> tuple[Hashable, list]:
    """Follow the first enumerated successor until a normal form is reached.

    Returns the normal form and the reduction path.  Running out of fuel
    means the key is not SN or the fuel was too small; the caller decides.
    """
    if isinstance(system, FiniteArs):
        system = EnumerableArs.from_finite(system)
    path = [key]
    for _ in range(fuel):
        succ = system.successors(path[-1])
        if not succ:
            return path[-1], path
        path.append(succ[0])
    if not system.successors(path[-1]):
        return path[-1], path
    raise FuelExhausted(f"no normal form within {fuel} steps", path[-1], fuel)


@dataclass(frozen=True)
class ConversionDecision:
    convertible: bool
    left: PathWitness
    right: PathWitness


def _require_complete(ars: FiniteArs, profile: GlobalProfile) -> None:
    for label, attr in (("SN", "sn"), ("CR", "cr")):
        for p in profile.elements:
            if not getattr(p, attr):
                raise PreconditionFailed(
                    label,
                    f"system is not complete: {label} fails at {ars.names[p.element]}",
                    element=p.element,
                )


def decide_conversion(ars: FiniteArs, a: int, b: int) -> ConversionDecision:
    """Decide ``a <->* b`` in a complete system by comparing normal forms."""
    ars.check_index(a)
    ars.check_index(b)
    _require_complete(ars, global_profile(ars))
    left = nearest_normal_form(ars, a)
    right = nearest_normal_form(ars, b)
    return ConversionDecision(left.end == right.end, left, right)


def bound_from_wn_un(ars: FiniteArs, lasso: Lasso) -> int:
    """The unique normal form of the lasso's first element bounds the lasso."""
    try:
        lasso.validate(ars)
    except MalformedLasso as exc:
        raise PreconditionFailed("lasso", str(exc)) from None
    profile = global_profile(ars)
    for label, attr in (("WN", "wn"), ("UNred", "un_red")):
        for p in profile.elements:
            if not getattr(p, attr):
                raise PreconditionFailed(
                    label, f"{label} fails at {ars.names[p.element]}", element=p.element
                )
    return nearest_normal_form(ars, lasso.first).end


def join_with(method: JoinMethod | str, ars: FiniteArs, peak: Peak, fuel: int = 10_000) -> Join | None:
    """Dispatch to one join procedure; ``exhaustive`` may return ``None``."""
    method = JoinMethod(method)
    if method is JoinMethod.NEWMAN:
        return newman_join(ars, peak, fuel)
    if method is JoinMethod.GENERALIZED_NEWMAN:
        return generalized_newman_join(ars, peak, fuel)
    if method is JoinMethod.WN_UN:
        return wn_un_join(ars, peak)
    if method is JoinMethod.COFINALITY:
        return cofinality_join(ars, cr_to_cofinality(ars, peak.apex), peak)
    return join_pair(ars, peak.left.end, peak.right.end)


# --- per-instance theorem checks -------------------------------------------


@dataclass(frozen=True)
class ClaimVerdict:
    label: str
    holds: bool
    counterexample: int | None = None


@dataclass(frozen=True)
class TheoremReport:
    verdicts: tuple[ClaimVerdict, ...] = field(default_factory=tuple)

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def failures(self) -> list[ClaimVerdict]:
        return [v for v in self.verdicts if not v.holds]


def theorem_suite(ars: FiniteArs, profile: GlobalProfile | None = None) -> TheoremReport:
    """Evaluate the classical theorems as material implications on ``ars``.

    A failing global claim records an element where its conclusion fails (if
    the conclusion is an element property); a failing pointwise claim records
    an element where the premise holds and the conclusion does not.  These are
    theorems, so every verdict should hold.
    """
    g = profile or global_profile(ars)
    els = g.elements
    verdicts = []

    def global_claim(label: str, premise: list[str], conclusion: str):
        if all(g[p] for p in premise) and not g[conclusion]:
            ce = None
            if conclusion in ELEMENT_PROPERTIES:
                ce = next(p.element for p in els if not p[conclusion])
            verdicts.append(ClaimVerdict(label, False, ce))
        else:
            verdicts.append(ClaimVerdict(label, True))

    def pointwise_claim(label: str, violated):
        ce = next((p.element for p in els if violated(p)), None)
        verdicts.append(ClaimVerdict(label, ce is None, ce))

    global_claim("CR -> NP=", ["CR"], "NPconv")
    global_claim("NP= -> UN=", ["NPconv"], "UNconv")
    global_claim("WN & UN= -> CR", ["WN", "UNconv"], "CR")
    global_claim("WN & UN-> -> CR", ["WN", "UNred"], "CR")
    global_claim("subcommutative -> CR", ["SubCommutative"], "CR")
    global_claim("WN & UN= -> BP", ["WN", "UNconv"], "BP")
    global_claim("WN & UN-> -> BP", ["WN", "UNred"], "BP")
    global_claim("WN & UN= & RP -> SN", ["WN", "UNconv", "RP"], "SN")
    global_claim("WN & WCR & RP- -> SN", ["WN", "WCR", "RPminus"], "SN")
    global_claim("CP -> CR", ["CP"], "CR")
    global_claim("Newman: SN & WCR -> CR", ["SN", "WCR"], "CR")
    global_claim("isWN & isSM -> isSN", ["WN", "SM"], "SN")
    pointwise_claim("CP <-> CR", lambda p: p.cp != p.cr)
    pointwise_claim("WCR & SM -> CR", lambda p: g["WCR"] and p.sm and not p.cr)
    pointwise_claim("isWN & SM -> SN", lambda p: g["WN"] and p.sm and not p.sn)
    pointwise_claim("WN & NP & SM -> SN", lambda p: p.wn and p.np_red and p.sm and not p.sn)
    return TheoremReport(tuple(verdicts))
