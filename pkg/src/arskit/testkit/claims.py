"""The implication and non-implication claims checked by the fuzz harness.

A selector is a property label (``"SN"``, ``"UNred"``, ...).  In a pointwise
claim a selector prefixed with ``G.`` refers to the global property, e.g.
``("G.WCR", "SM") -> ("CR",)`` reads "if WCR holds everywhere and SM holds at
x then CR holds at x".
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from ..properties import GlobalProfile


class Kind(enum.Enum):
    IMPLICATION = "implication"
    EQUIVALENCE = "equivalence"
    NON_IMPLICATION = "nonImplication"


class Scope(enum.Enum):
    POINTWISE = "pointwise"
    GLOBAL = "global"


@dataclass(frozen=True)
class Claim:
    label: str
    kind: Kind
    premise: tuple[str, ...]
    conclusion: tuple[str, ...]
    scope: Scope
    witness: str | None = None

    def __post_init__(self):
        if (self.kind is Kind.NON_IMPLICATION) != (self.witness is not None):
            raise ValueError(f"{self.label}: only non-implications name a witness fixture")


def _value(profile: GlobalProfile, selector: str, element: int | None) -> bool:
    if selector.startswith("G."):
        return profile[selector[2:]]
    if element is None:
        return profile[selector]
    return profile.elements[element][selector]


def _conj(profile: GlobalProfile, selectors, element: int | None) -> bool:
    return all(_value(profile, s, element) for s in selectors)


def violation(claim: Claim, profile: GlobalProfile) -> int | None | bool:
    """Where an implication or equivalence fails on this instance.

    Returns the offending element for pointwise claims, ``True`` for a failed
    global claim, and ``None`` when the claim holds.
    """
    if claim.kind is Kind.NON_IMPLICATION:
        raise ValueError("non-implications are checked against their fixture")
    points = range(len(profile.elements)) if claim.scope is Scope.POINTWISE else [None]
    for x in points:
        p = _conj(profile, claim.premise, x)
        c = _conj(profile, claim.conclusion, x)
        bad = (p and not c) if claim.kind is Kind.IMPLICATION else (p != c)
        if bad:
            return True if x is None else x
    return None


def refutes(claim: Claim, profile: GlobalProfile) -> bool:
    """Whether ``profile`` witnesses a non-implication: premise without conclusion."""
    points = range(len(profile.elements)) if claim.scope is Scope.POINTWISE else [None]
    return any(
        _conj(profile, claim.premise, x) and not _conj(profile, claim.conclusion, x)
        for x in points
    )


def _imp(label, premise, conclusion, scope=Scope.POINTWISE):
    return Claim(label, Kind.IMPLICATION, tuple(premise), tuple(conclusion), scope)


def _eqv(label, premise, conclusion, scope=Scope.POINTWISE):
    return Claim(label, Kind.EQUIVALENCE, tuple(premise), tuple(conclusion), scope)


def _non(label, premise, conclusion, witness, scope=Scope.POINTWISE):
    return Claim(label, Kind.NON_IMPLICATION, tuple(premise), tuple(conclusion), scope, witness)


G = Scope.GLOBAL

_IMPLICATIONS = [
    # termination hierarchy
    _imp("NF => MF", ["NF"], ["MF"]),
    _imp("NF => SN", ["NF"], ["SN"]),
    _imp("dec & FB: SN => WN", ["SN"], ["WN"]),
    _imp("SN => SM", ["SN"], ["SM"]),
    _imp("MF => SM", ["MF"], ["SM"]),
    _imp("WN => WM", ["WN"], ["WM"]),
    _imp("SM => WM", ["SM"], ["WM"]),
    _imp("finite: WM everywhere", [], ["WM"]),
    _eqv("MF & WN <=> NF", ["MF", "WN"], ["NF"]),
    _eqv("MF & SN <=> NF", ["MF", "SN"], ["NF"]),
    _eqv("finite decidable: SM <=> SMseq", ["SM"], ["SMseq"]),
    # confluence hierarchy
    _imp("CR => MP", ["CR"], ["MP"]),
    _imp("MP => NP->", ["MP"], ["NPred"]),
    _imp("NP-> => UN->", ["NPred"], ["UNred"]),
    _eqv("finite: CP <=> CR", ["CP"], ["CR"]),
    # relations between the two
    _imp("NP-> & WN => CR", ["NPred", "WN"], ["CR"]),
    _imp("MP & WM => CR", ["MP", "WM"], ["CR"]),
    _imp("NP-> & SN => CR", ["NPred", "SN"], ["CR"]),
    _imp("WN & NP & SM => SN", ["WN", "NPred", "SM"], ["SN"]),
    _imp("isWN & SM => SN", ["G.WN", "SM"], ["SN"]),
    _imp("generalized Newman: WCR & SM => CR", ["G.WCR", "SM"], ["CR"]),
    _imp("Newman (local): WCR & SN => CR", ["G.WCR", "SN"], ["CR"]),
    # global statements
    _eqv("NP= <=> NP->", ["NPconv"], ["NPred"], G),
    _imp("UN= => UN->", ["UNconv"], ["UNred"], G),
    _imp("CR => NP=", ["CR"], ["NPconv"], G),
    _imp("NP= => UN=", ["NPconv"], ["UNconv"], G),
    _imp("WN & UN= => CR", ["WN", "UNconv"], ["CR"], G),
    _imp("WN & UN-> => CR", ["WN", "UNred"], ["CR"], G),
    _imp("subcommutative => CR", ["SubCommutative"], ["CR"], G),
    _imp("Newman: SN & WCR => CR", ["SN", "WCR"], ["CR"], G),
    _imp("WN & UN= => BP", ["WN", "UNconv"], ["BP"], G),
    _imp("WN & UN-> => BP", ["WN", "UNred"], ["BP"], G),
    _imp("WN & UN= & RP => SN", ["WN", "UNconv", "RP"], ["SN"], G),
    _imp("WN & WCR & RP- => SN", ["WN", "WCR", "RPminus"], ["SN"], G),
    _imp("CP => CR", ["CP"], ["CR"], G),
    _imp("isWN & isSM => isSN", ["WN", "SM"], ["SN"], G),
    _imp("Inc => RP", ["Inc"], ["RP"], G),
    _eqv("RP- <=> RP", ["RPminus"], ["RP"], G),
    _eqv("SMseq <=> RP & BP", ["SMseq"], ["RP", "BP"], G),
    _imp("finite: BP holds", [], ["BP"], G),
]

# table cells: (row property, column properties, refuted conclusion, fixture)
_LOCAL_CELLS = [
    ("UNred", ["WM"], "CR", "CE-4"),
    ("UNred", ["WM"], "SN", "CE-11"),
    ("UNred", ["WN"], "CR", "CE-4"),
    ("UNred", ["WN"], "SN", "CE-6"),
    ("UNred", ["SM"], "SN", "CE-8"),
    ("UNred", ["SM", "WN"], "SN", "CE-4"),
    ("NPred", ["WM"], "CR", "CE-3"),
    ("NPred", ["WM"], "SN", "CE-8"),
    ("NPred", ["WN"], "SN", "CE-6"),
    ("NPred", ["SM"], "SN", "CE-8"),
    ("MP", ["WM"], "SN", "CE-8"),
    ("MP", ["WN"], "SN", "CE-6"),
    ("MP", ["SM"], "SN", "CE-8"),
    ("CR", ["WM"], "SN", "CE-8"),
    ("CR", ["WN"], "SN", "CE-6"),
    ("CR", ["SM"], "SN", "CE-8"),
]

_GLOBAL_CELLS = [
    ("UNred", ["WM"], "CR", "CE-2"),
    ("UNred", ["WM"], "SN", "CE-8"),
    ("UNred", ["WN"], "SN", "CE-6"),
    ("UNred", ["SM"], "SN", "CE-8"),
    ("NPred", ["WM"], "CR", "CE-3"),
    ("NPred", ["WM"], "SN", "CE-8"),
    ("NPred", ["WN"], "SN", "CE-6"),
    ("NPred", ["SM"], "SN", "CE-8"),
    ("MP", ["WM"], "SN", "CE-8"),
    ("MP", ["WN"], "SN", "CE-6"),
    ("MP", ["SM"], "SN", "CE-8"),
    ("CR", ["WM"], "SN", "CE-8"),
    # CE-7 is not confluent at f0, so CE-6 is the witness here (see catalog notes)
    ("CR", ["WN"], "SN", "CE-6"),
    ("CR", ["SM"], "SN", "CE-8"),
]


def _cell_claims():
    out = []
    for cells, scope in ((_LOCAL_CELLS, Scope.POINTWISE), (_GLOBAL_CELLS, G)):
        tag = "local" if scope is Scope.POINTWISE else "global"
        for row, cols, concl, fixture in cells:
            premise = [row, *cols]
            label = f"{tag}: {' & '.join(premise)} =/=> {concl}"
            out.append(_non(label, premise, [concl], fixture, scope))
    return out


_NON_IMPLICATIONS = [
    _non("UN-> =/=> UN=", ["UNred"], ["UNconv"], "CE-5", G),
    _non("WCR & WN & UN-> =/=> CR", ["WCR", "WN", "UNred"], ["CR"], "CE-4"),
    *_cell_claims(),
]


def claim_set() -> tuple[Claim, ...]:
    return tuple(_IMPLICATIONS + _NON_IMPLICATIONS)
