"""Deciders for the normalization, confluence and minimality properties.

Every decider works on the dense closure matrices of a :class:`FiniteArs`
and on its strongly connected components:

* a minimal form (MF) is an element whose component is a sink of the
  condensation;
* SN fails exactly when a cyclic component is reachable;
* SMseq fails exactly when a cycle is reachable through non-MF elements only;
* RP holds exactly when every cyclic component is a sink;
* CP is decided by searching paths of the condensation.

``testkit.oracle`` decides the same properties by brute-force enumeration
and is used to cross-check these characterizations.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .errors import CapacityExceeded, MalformedLasso
from .relations import Closure, FiniteArs, Lasso, PathWitness, closure, path_between

#: Canonical property labels mapped to :class:`ElementProfile` attributes.
ELEMENT_PROPERTIES = {
    "NF": "nf",
    "WN": "wn",
    "SN": "sn",
    "MF": "mf",
    "WM": "wm",
    "SM": "sm",
    "SMseq": "sm_seq",
    "WCR": "wcr",
    "CR": "cr",
    "SubCommutative": "subcommutative",
    "NPconv": "np_conv",
    "NPred": "np_red",
    "UNconv": "un_conv",
    "UNred": "un_red",
    "MP": "mp",
    "CP": "cp",
}

#: Properties that only exist globally.
GLOBAL_ONLY = ("BP", "RP", "RPminus", "Inc", "FB", "Dec")

#: Largest number of reachable condensation components the CP search accepts.
CP_COMPONENT_LIMIT = 14


@dataclass(frozen=True)
class Peak:
    apex: int
    left: PathWitness
    right: PathWitness

    def is_valid(self, ars: FiniteArs) -> bool:
        return (
            self.left.start == self.apex
            and self.right.start == self.apex
            and self.left.is_valid(ars)
            and self.right.is_valid(ars)
        )


@dataclass(frozen=True)
class Join:
    target: int
    from_left: PathWitness
    from_right: PathWitness

    def is_valid(self, ars: FiniteArs) -> bool:
        return (
            self.from_left.end == self.target
            and self.from_right.end == self.target
            and self.from_left.is_valid(ars)
            and self.from_right.is_valid(ars)
        )

    def closes(self, peak: Peak) -> bool:
        return self.from_left.start == peak.left.end and self.from_right.start == peak.right.end


@dataclass(frozen=True)
class CofinalityWitness:
    """An ``R^r``-increasing lasso from ``base`` together with a reduction of
    every reduct of ``base`` into it.

    ``coverage`` maps each reduct ``y`` to ``(i, path)`` where ``path``
    reduces ``y`` to ``sequence.at(i)``.
    """

    sequence: Lasso
    coverage: dict[int, tuple[int, PathWitness]]

    @property
    def base(self) -> int:
        return self.sequence.first

    def is_valid(self, ars: FiniteArs) -> bool:
        if not self.sequence.is_valid(ars, reflexive=True):
            return False
        for y in ars.reachable(self.base):
            entry = self.coverage.get(y)
            if entry is None:
                return False
            i, path = entry
            if path.start != y or path.end != self.sequence.at(i) or not path.is_valid(ars):
                return False
        return True


@dataclass(frozen=True)
class ElementProfile:
    element: int
    nf: bool
    wn: bool
    sn: bool
    mf: bool
    wm: bool
    sm: bool
    sm_seq: bool
    wcr: bool
    cr: bool
    subcommutative: bool
    np_conv: bool
    np_red: bool
    un_conv: bool
    un_red: bool
    mp: bool
    cp: bool
    wn_witness: PathWitness | None = None
    cp_witness: CofinalityWitness | None = None

    def __getitem__(self, label: str) -> bool:
        return getattr(self, ELEMENT_PROPERTIES[label])

    def as_dict(self) -> dict[str, bool]:
        return {label: getattr(self, attr) for label, attr in ELEMENT_PROPERTIES.items()}


@dataclass(frozen=True)
class GlobalProfile:
    """Universal closures of the element properties plus the global-only ones."""

    universal: dict[str, bool]
    bp: bool
    rp: bool
    rp_minus: bool
    inc: bool
    fb: bool
    dec: bool
    inc_witness: tuple[int, ...] | None
    elements: tuple[ElementProfile, ...]

    def __getitem__(self, label: str) -> bool:
        if label in self.universal:
            return self.universal[label]
        return {
            "BP": self.bp,
            "RP": self.rp,
            "RPminus": self.rp_minus,
            "Inc": self.inc,
            "FB": self.fb,
            "Dec": self.dec,
        }[label]

    def as_dict(self) -> dict[str, bool]:
        out = dict(self.universal)
        for label in GLOBAL_ONLY:
            out[label] = self[label]
        return out


class _Analysis:
    """Matrices shared by all element deciders of one system."""

    def __init__(self, ars: FiniteArs):
        self.ars = ars
        n = ars.size
        adj = ars.adjacency
        reach = ars.reach
        self.adj = adj
        self.reach = reach
        ri = reach.astype(np.int64)
        ai = adj.astype(np.int64)
        self.plus = (ai @ ri) > 0
        self.cyclic = np.diag(self.plus).copy()
        self.nf = ~adj.any(axis=1)
        self.mf = ~(reach & ~reach.T).any(axis=1)
        self.joinable = (ri @ ri.T) > 0
        refl = (adj | np.eye(n, dtype=bool)).astype(np.int64)
        self.one_step_joinable = (refl @ refl.T) > 0
        self._conv = None
        self.sm = self._strongly_minimalizing()
        self.sm_seq = self._sequentially_minimalizing()

    @property
    def conv(self) -> np.ndarray:
        if self._conv is None:
            self._conv = closure(self.ars, Closure.CONVERSION).related
        return self._conv

    def _strongly_minimalizing(self) -> np.ndarray:
        sm = self.mf.copy()
        succ = self.ars.successors
        changed = True
        while changed:
            changed = False
            for x in range(self.ars.size):
                if not sm[x] and all(sm[y] for y in succ[x]):
                    sm[x] = True
                    changed = True
        return sm

    def _sequentially_minimalizing(self) -> np.ndarray:
        keep = ~self.mf
        sub = self.adj & keep[:, None] & keep[None, :]
        n = self.ars.size
        r = sub | np.eye(n, dtype=bool)
        for k in range(n):
            r |= np.outer(r[:, k], r[k, :])
        on_cycle = np.diag((sub.astype(np.int64) @ r.astype(np.int64)) > 0)
        escapes = (r & on_cycle[None, :]).any(axis=1)
        return self.mf | ~escapes

    def profile(self, a: int, witnesses: bool = True) -> ElementProfile:
        ars = self.ars
        reach_a = self.reach[a]
        succ = list(ars.successors[a])
        reducts = np.flatnonzero(reach_a)
        nf_reach = reach_a & self.nf
        mf_reach = reach_a & self.mf

        wn = bool(nf_reach.any())
        sn = not bool((reach_a & self.cyclic).any())
        wcr = bool(self.joinable[np.ix_(succ, succ)].all()) if succ else True
        sub = bool(self.one_step_joinable[np.ix_(succ, succ)].all()) if succ else True
        cr = bool(self.joinable[np.ix_(reducts, reducts)].all())
        nfs = np.flatnonzero(nf_reach)
        mfs = np.flatnonzero(mf_reach)
        np_red = bool(self.reach[np.ix_(reducts, nfs)].all()) if nfs.size else True
        mp = bool(self.reach[np.ix_(reducts, mfs)].all()) if mfs.size else True
        conv_nf = self.conv[a] & self.nf
        np_conv = bool(np.all(reach_a[conv_nf]))
        un_conv = (not self.nf[a]) or int(conv_nf.sum()) == 1
        un_red = int(nf_reach.sum()) <= 1
        cp_path = cofinal_component_path(ars, a)

        wn_witness = cp_witness = None
        if witnesses:
            if wn:
                wn_witness = nearest_normal_form(ars, a)
            if cp_path is not None:
                cp_witness = _cofinality_witness(ars, a, cp_path)
        return ElementProfile(
            element=a,
            nf=bool(self.nf[a]),
            wn=wn,
            sn=sn,
            mf=bool(self.mf[a]),
            wm=bool(mf_reach.any()),
            sm=bool(self.sm[a]),
            sm_seq=bool(self.sm_seq[a]),
            wcr=wcr,
            cr=cr,
            subcommutative=sub,
            np_conv=np_conv,
            np_red=np_red,
            un_conv=bool(un_conv),
            un_red=un_red,
            mp=mp,
            cp=cp_path is not None,
            wn_witness=wn_witness,
            cp_witness=cp_witness,
        )


def nearest_normal_form(ars: FiniteArs, a: int) -> PathWitness | None:
    """Shortest reduction from ``a`` to a normal form (lowest index on ties)."""
    reach_a = ars.reach[a]
    targets = [int(b) for b in np.flatnonzero(reach_a) if not ars.successors[b]]
    best = None
    for b in targets:
        path = path_between(ars, a, b)
        if best is None or path.length < best.length:
            best = path
    return best


def cofinal_component_path(ars: FiniteArs, a: int) -> list[int] | None:
    """First condensation path from the component of ``a`` that every
    reachable component can reduce into, or ``None`` if there is none.

    Simple paths are enumerated depth-first, successors in increasing
    component order.
    """
    view = ars.scc
    start = view.component_of[a]
    reach_a = ars.reach[a]
    comps = sorted({view.component_of[int(y)] for y in np.flatnonzero(reach_a)})
    if len(comps) > CP_COMPONENT_LIMIT:
        raise CapacityExceeded(
            f"{len(comps)} reachable components exceed the CP search limit of {CP_COMPONENT_LIMIT}"
        )
    rep = {c: view.components[c][0] for c in comps}
    # comp_reach[c][d]: component c reaches component d
    comp_reach = {c: {d for d in comps if ars.reach[rep[c], rep[d]]} for c in comps}

    def cofinal(path: list[int]) -> bool:
        on_path = set(path)
        return all(comp_reach[c] & on_path for c in comps)

    path = [start]

    def search() -> bool:
        if cofinal(path):
            return True
        for d in view.successors(path[-1]):
            path.append(d)
            if search():
                return True
            path.pop()
        return False

    return list(path) if search() else None


def _coverage(ars: FiniteArs, sequence: Lasso, base: int) -> dict[int, tuple[int, PathWitness]]:
    positions = list(sequence.elements())
    coverage = {}
    for y in ars.reachable(base):
        if y in positions:
            i = positions.index(y)
        else:
            i = next(i for i, s in enumerate(positions) if ars.reach[y, s])
        coverage[y] = (i, path_between(ars, y, positions[i]))
    return coverage


def _cofinality_witness(ars: FiniteArs, a: int, comp_path: list[int]) -> CofinalityWitness:
    # every path component reaches the last one, so a reduction into the
    # last component followed by stalling there is already cofinal
    target = ars.scc.components[comp_path[-1]][0]
    nodes = path_between(ars, a, target).nodes
    sequence = Lasso(nodes[:-1], (nodes[-1],))
    return CofinalityWitness(sequence, _coverage(ars, sequence, a))


def element_profile(ars: FiniteArs, a: int, witnesses: bool = True) -> ElementProfile:
    ars.check_index(a)
    return _Analysis(ars).profile(a, witnesses)


def element_profiles(ars: FiniteArs, witnesses: bool = False) -> tuple[ElementProfile, ...]:
    analysis = _Analysis(ars)
    return tuple(analysis.profile(a, witnesses) for a in range(ars.size))


def topological_numbering(ars: FiniteArs) -> tuple[int, ...] | None:
    """A size function ``|-|`` with ``|a| < |b|`` for every step, if acyclic."""
    indegree = [len(p) for p in ars.predecessors]
    ready = [x for x in range(ars.size) if indegree[x] == 0]
    heapq.heapify(ready)
    number = [-1] * ars.size
    count = 0
    while ready:
        x = heapq.heappop(ready)
        number[x] = count
        count += 1
        for y in ars.successors[x]:
            indegree[y] -= 1
            if indegree[y] == 0:
                heapq.heappush(ready, y)
    if count < ars.size:
        return None
    return tuple(number)


def recurrence_property(ars: FiniteArs) -> bool:
    """Every cyclic component is a sink of the condensation."""
    view = ars.scc
    return all(view.is_sink(c) for c, cyc in enumerate(view.cyclic) if cyc)


def weak_recurrence_property(ars: FiniteArs) -> bool:
    """From every cyclic component, everything reachable reaches back into it."""
    view = ars.scc
    for c, cyc in enumerate(view.cyclic):
        if not cyc:
            continue
        members = list(view.components[c])
        for b in ars.reachable(members[0]):
            if not ars.reach[b, members].any():
                return False
    return True


def extract_bound(ars: FiniteArs, lasso: Lasso) -> int:
    """An element every position of ``lasso`` reduces to.

    The cycle lies inside one strongly connected component, the stem reduces
    into it, so the least-index member of that component is a bound.  This is
    why BP holds on every finite system.
    """
    lasso.validate(ars)
    return ars.scc.components[ars.scc.component_of[lasso.cycle[0]]][0]


def check_bound(ars: FiniteArs, lasso: Lasso, b: int) -> bool:
    lasso.validate(ars)
    ars.check_index(b)
    return all(ars.reach[x, b] for x in lasso.elements())


def global_profile(ars: FiniteArs, witnesses: bool = False) -> GlobalProfile:
    elements = element_profiles(ars, witnesses)
    universal = {
        label: all(getattr(p, attr) for p in elements)
        for label, attr in ELEMENT_PROPERTIES.items()
    }
    numbering = topological_numbering(ars)
    return GlobalProfile(
        universal=universal,
        bp=_boundedness(ars),
        rp=recurrence_property(ars),
        rp_minus=weak_recurrence_property(ars),
        inc=numbering is not None,
        fb=True,
        dec=True,
        inc_witness=numbering,
        elements=elements,
    )


def _boundedness(ars: FiniteArs) -> bool:
    # each cyclic component carries the canonical lasso around it; its
    # extracted bound must check out, otherwise BP would be refuted
    view = ars.scc
    for c, cyc in enumerate(view.cyclic):
        if not cyc:
            continue
        x = view.components[c][0]
        back = None
        for y in ars.successors[x]:
            if view.component_of[y] == c:
                back = path_between(ars, y, x)
                break
        lasso = Lasso((), (x,) + back.nodes[:-1])
        try:
            if not check_bound(ars, lasso, extract_bound(ars, lasso)):
                return False
        except MalformedLasso:
            return False
    return True


def join_pair(ars: FiniteArs, b: int, c: int) -> Join | None:
    """Common reduct of ``b`` and ``c`` with the least index, with both reductions."""
    ars.check_index(b)
    ars.check_index(c)
    common = np.flatnonzero(ars.reach[b] & ars.reach[c])
    if common.size == 0:
        return None
    d = int(common[0])
    return Join(d, path_between(ars, b, d), path_between(ars, c, d))




