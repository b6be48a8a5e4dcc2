"""Notions of well-foundedness on a finite relation.

Orientation: here a relation ``rel`` is read as ``R``, and ``R y x`` (the pair
``(y, x)`` in ``rel.steps``) says that ``y`` is an ``R``-predecessor of ``x``.
For a rewrite system, pass ``converse(ars)``: then ``R y x`` means the
reduction step ``x -> y``, and accessibility is strong normalization.

The double-negation ("weak") variants of each notion are not computed
separately.  A running program decides membership of every finite predicate,
so every predicate is ``not not``-closed and each weak notion coincides with
its strong counterpart; the constructive distinctions between them are
proof-theoretic and cannot be observed by evaluation.  The same applies to
the bridge hypotheses ``accDNE``, ``corDNE`` and ``MP≡``, which are reported
as true by construction.  Likewise deriving excluded middle from minimality
has no runtime content and is not attempted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import CapacityExceeded
from .relations import FiniteArs, Lasso

DEFAULT_LIMIT = 12


class WfNotion(enum.Enum):
    ACC = "acc"
    IND = "ind"
    COR = "cor"
    MIN = "min"
    MIN_DNE = "minDNE"
    SEQ_LASSO = "seqLasso"


#: Predicates are frozensets of element indices.
Predicate = frozenset


def accessible_set(rel: FiniteArs) -> Predicate:
    """Least fixpoint: add ``x`` once all its predecessors are in."""
    acc = set()
    changed = True
    while changed:
        changed = False
        for x in range(rel.size):
            if x not in acc and all(y in acc for y in rel.predecessors[x]):
                acc.add(x)
                changed = True
    return frozenset(acc)


def is_inductive(rel: FiniteArs, p: Predicate) -> bool:
    return all(
        x in p
        for x in range(rel.size)
        if all(y in p for y in rel.predecessors[x])
    )


def is_coreductive(rel: FiniteArs, p: Predicate) -> bool:
    return all(
        any(y not in p for y in rel.predecessors[x])
        for x in range(rel.size)
        if x not in p
    )


def minimal_elements(rel: FiniteArs, p: Predicate) -> Predicate:
    return frozenset(x for x in p if not any(y in p for y in rel.predecessors[x]))


def all_predicates(rel: FiniteArs, limit: int = DEFAULT_LIMIT):
    """Every subset of the universe, in increasing bitmask order."""
    if rel.size > limit:
        raise CapacityExceeded(
            f"{rel.size} elements exceed the predicate enumeration limit of {limit}"
        )
    for mask in range(1 << rel.size):
        yield frozenset(i for i in range(rel.size) if mask >> i & 1)


def decreasing_lasso(rel: FiniteArs) -> Lasso | None:
    """An ``R``-decreasing lasso (``R s(k+1) s(k)`` for all k), if any exists.

    Inside a cyclic strongly connected component every element has a
    predecessor in the same component, so following those from the first
    cyclic element must repeat; the repeated segment is the cycle.
    """
    view = rel.scc
    cyclic = [c for c, flag in enumerate(view.cyclic) if flag]
    if not cyclic:
        return None
    comp = cyclic[0]
    path = [view.components[comp][0]]
    seen = {path[0]: 0}
    while True:
        nxt = next(y for y in rel.predecessors[path[-1]] if view.component_of[y] == comp)
        if nxt in seen:
            i = seen[nxt]
            return Lasso(tuple(path[:i]), tuple(path[i:]))
        seen[nxt] = len(path)
        path.append(nxt)


def is_decreasing(rel: FiniteArs, lasso: Lasso) -> bool:
    return bool(lasso.cycle) and all(rel.has_step(b, a) for a, b in lasso.transitions())


@dataclass(frozen=True)
class WfVerdict:
    holds: bool
    counterexample: Predicate | Lasso | None = None


def wf_check(rel: FiniteArs, notion: WfNotion | str, limit: int = DEFAULT_LIMIT) -> WfVerdict:
    notion = WfNotion(notion)
    if notion is WfNotion.ACC:
        acc = accessible_set(rel)
        missing = frozenset(range(rel.size)) - acc
        return WfVerdict(not missing, missing or None)
    if notion is WfNotion.SEQ_LASSO:
        lasso = decreasing_lasso(rel)
        return WfVerdict(lasso is None, lasso)
    full = frozenset(range(rel.size))
    for p in all_predicates(rel, limit):
        if notion is WfNotion.IND:
            bad = p != full and is_inductive(rel, p)
        elif notion is WfNotion.COR:
            bad = p != full and is_coreductive(rel, p)
        else:
            # MIN and MIN_DNE coincide: every predicate here is not-not-closed
            bad = bool(p) and not minimal_elements(rel, p)
        if bad:
            return WfVerdict(False, p)
    return WfVerdict(True)


def counterexample_is_valid(rel: FiniteArs, notion: WfNotion | str, ce) -> bool:
    notion = WfNotion(notion)
    full = frozenset(range(rel.size))
    if notion is WfNotion.ACC:
        return bool(ce) and not (ce & accessible_set(rel))
    if notion is WfNotion.SEQ_LASSO:
        return is_decreasing(rel, ce)
    if notion is WfNotion.IND:
        return ce != full and is_inductive(rel, ce)
    if notion is WfNotion.COR:
        return ce != full and is_coreductive(rel, ce)
    return bool(ce) and not minimal_elements(rel, ce)


@dataclass(frozen=True)
class BridgeReport:
    """The classical side conditions labelling the well-foundedness diagram."""

    rdec: bool
    fb: bool
    mp_seq: bool
    cor_dne: bool
    acc_dne: bool
    acc_cor: bool
    #: for each inaccessible element, an inaccessible predecessor
    acc_cor_witness: dict[int, int]

    def as_dict(self) -> dict[str, bool]:
        return {
            "Rdec": self.rdec,
            "FB": self.fb,
            "MPseq": self.mp_seq,
            "corDNE": self.cor_dne,
            "accDNE": self.acc_dne,
            "accCor": self.acc_cor,
        }


def bridge_report(rel: FiniteArs) -> BridgeReport:
    acc = accessible_set(rel)
    witness = {}
    for x in range(rel.size):
        if x not in acc:
            pred = next((y for y in rel.predecessors[x] if y not in acc), None)
            if pred is not None:
                witness[x] = pred
    acc_cor = len(witness) == rel.size - len(acc)
    return BridgeReport(True, True, True, True, True, acc_cor, witness)


#: Edges of the well-foundedness diagram: (source, target, side conditions).
#: Weak notions are named with a ``~~`` suffix and evaluate like their
#: strong counterparts.
DIAGRAM_EDGES: tuple[tuple[str, str, tuple[str, ...]], ...] = (
    ("min", "minDNE", ()),
    ("min", "seq", ()),
    ("min", "acc", ()),
    ("minDNE", "acc", ("accDNE",)),
    ("minDNE", "seq", ("MPseq",)),
    ("acc", "seq", ("Rdec",)),
    ("cor", "acc", ("accCor",)),
    ("min", "min~~", ()),
    ("minDNE", "minDNE~~", ()),
    ("acc", "acc~~", ()),
    ("seq", "seq~~", ()),
    ("cor", "cor~~", ()),
    ("min~~", "minDNE~~", ()),
    ("acc~~", "seq~~", ()),
    ("acc~~", "minDNE~~", ()),
    ("minDNE~~", "min~~", ()),
    ("minDNE~~", "seq~~", ()),
    ("seq~~", "cor~~", ()),
    ("minDNE~~", "acc~~", ("FB|accDNE",)),
    ("cor~~", "seq~~", ("MPseq",)),
    ("cor~~", "cor", ("corDNE",)),
    ("acc~~", "acc", ("accDNE",)),
    ("cor~~", "acc~~", ("accCor",)),
)

_NODE_NOTION = {
    "acc": WfNotion.ACC,
    "ind": WfNotion.IND,
    "cor": WfNotion.COR,
    "min": WfNotion.MIN,
    "minDNE": WfNotion.MIN_DNE,
    "seq": WfNotion.SEQ_LASSO,
}


@dataclass(frozen=True)
class WfReport:
    verdicts: dict[WfNotion, WfVerdict]
    bridge: BridgeReport

    @property
    def agreement(self) -> bool:
        return len({v.holds for v in self.verdicts.values()}) == 1

    @property
    def well_founded(self) -> bool:
        return all(v.holds for v in self.verdicts.values())

    def node_value(self, node: str) -> bool:
        return self.verdicts[_NODE_NOTION[node.removesuffix("~~")]].holds

    def edge_violations(self) -> list[tuple[str, str]]:
        """Diagram edges whose material implication fails on this instance."""
        bridge = self.bridge.as_dict()

        def condition(label: str) -> bool:
            return any(bridge[part] for part in label.split("|"))

        bad = []
        for src, dst, conds in DIAGRAM_EDGES:
            if self.node_value(src) and all(condition(c) for c in conds) and not self.node_value(dst):
                bad.append((src, dst))
        return bad


def wf_equivalence_report(rel: FiniteArs, limit: int = DEFAULT_LIMIT) -> WfReport:
    verdicts = {notion: wf_check(rel, notion, limit) for notion in WfNotion}
    return WfReport(verdicts, bridge_report(rel))
