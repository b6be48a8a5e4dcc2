"""Brute-force deciders used to cross-check the characterization-based ones.

Nothing here uses strongly connected components or closure matrices: every
property is decided from its definition by breadth-first reachability and
by enumerating simple paths and lassos (a simple path followed by a step
back onto the path).  Exponential, hence the size cap.
"""

from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterator

from ..errors import CapacityExceeded
from ..properties import ELEMENT_PROPERTIES, GLOBAL_ONLY
from ..relations import FiniteArs, Lasso

ORACLE_LIMIT = 10


def reach_set(ars: FiniteArs, a: int) -> set[int]:
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for y in ars.successors[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def conversion_class(ars: FiniteArs, a: int) -> set[int]:
    seen = {a}
    queue = deque([a])
    while queue:
        x = queue.popleft()
        for y in ars.successors[x] + ars.predecessors[x]:
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def simple_paths(ars: FiniteArs, a: int) -> Iterator[list[int]]:
    """Every simple path starting at ``a`` (including the empty one)."""
    path = [a]

    def go():
        yield list(path)
        for y in ars.successors[path[-1]]:
            if y not in path:
                path.append(y)
                yield from go()
                path.pop()

    yield from go()


def lassos_from(ars: FiniteArs, a: int) -> Iterator[Lasso]:
    """Every lasso whose stem and cycle together form a simple path from ``a``."""
    for path in simple_paths(ars, a):
        for y in ars.successors[path[-1]]:
            if y in path:
                j = path.index(y)
                yield Lasso(tuple(path[:j]), tuple(path[j:]))


def all_lassos(ars: FiniteArs) -> Iterator[Lasso]:
    for a in range(ars.size):
        yield from lassos_from(ars, a)


class _Oracle:
    def __init__(self, ars: FiniteArs):
        self.ars = ars
        self.reach = [reach_set(ars, a) for a in range(ars.size)]
        self.nf = [not ars.successors[a] for a in range(ars.size)]
        self.mf = [all(a in self.reach[b] for b in self.reach[a]) for a in range(ars.size)]

    def joinable(self, b: int, c: int) -> bool:
        return bool(self.reach[b] & self.reach[c])

    def element(self, label: str, a: int) -> bool:
        ars, reach, nf, mf = self.ars, self.reach, self.nf, self.mf
        r = reach[a]
        succ = ars.successors[a]
        if label == "NF":
            return nf[a]
        if label == "WN":
            return any(nf[b] for b in r)
        if label == "SN":
            return next(lassos_from(ars, a), None) is None
        if label == "MF":
            return mf[a]
        if label == "WM":
            return any(mf[b] for b in r)
        if label == "SM":
            return self._sm(a, ())
        if label == "SMseq":
            return not any(
                not any(mf[x] for x in lasso.elements()) for lasso in lassos_from(ars, a)
            )
        if label == "WCR":
            return all(self.joinable(b, c) for b in succ for c in succ)
        if label == "CR":
            return all(self.joinable(b, c) for b in r for c in r)
        if label == "SubCommutative":
            def one(x):
                return {x} | set(ars.successors[x])
            return all(one(b) & one(c) for b in succ for c in succ)
        if label == "NPred":
            return all(b in reach[c] for b in r if nf[b] for c in r)
        if label == "NPconv":
            return all(b in r for b in conversion_class(ars, a) if nf[b])
        if label == "UNred":
            return sum(1 for b in r if nf[b]) <= 1
        if label == "UNconv":
            return not nf[a] or all(b == a for b in conversion_class(ars, a) if nf[b])
        if label == "MP":
            return all(b in reach[c] for b in r if mf[b] for c in r)
        if label == "CP":
            return any(
                all(any(s in reach[y] for s in path) for y in r)
                for path in simple_paths(ars, a)
            )
        raise KeyError(label)

    def _sm(self, a: int, stack: tuple[int, ...]) -> bool:
        # least fixpoint of "MF, or every one-step reduct is SM": a revisit
        # along non-MF elements is an infinite non-MF descent
        if self.mf[a]:
            return True
        if a in stack:
            return False
        return all(self._sm(b, stack + (a,)) for b in self.ars.successors[a])

    def global_only(self, label: str) -> bool:
        ars, reach, mf = self.ars, self.reach, self.mf
        if label in ("FB", "Dec"):
            return True
        if label == "Inc":
            return any(
                all(rank[a] < rank[b] for a, b in ars.steps)
                for rank in itertools.permutations(range(ars.size))
            )
        lassos = list(all_lassos(ars))
        if label == "BP":
            return all(self.bounds(lasso) for lasso in lassos)
        if label == "RP":
            return all(any(mf[x] for x in lasso.elements()) for lasso in lassos)
        if label == "RPminus":
            return all(
                any(x in reach[b] for x in lasso.elements())
                for lasso in lassos
                for b in self.bounds(lasso)
            )
        raise KeyError(label)

    def bounds(self, lasso: Lasso) -> list[int]:
        elements = lasso.elements()
        return [b for b in range(self.ars.size) if all(b in self.reach[x] for x in elements)]


def brute_force_oracle(ars: FiniteArs, prop: str, a: int | None = None) -> bool:
    """Decide ``prop`` at element ``a``, or globally when ``a`` is ``None``."""
    if ars.size > ORACLE_LIMIT:
        raise CapacityExceeded(f"oracle is limited to {ORACLE_LIMIT} elements, got {ars.size}")
    oracle = _Oracle(ars)
    if prop in GLOBAL_ONLY:
        return oracle.global_only(prop)
    if prop not in ELEMENT_PROPERTIES:
        raise KeyError(prop)
    if a is None:
        return all(oracle.element(prop, x) for x in range(ars.size))
    ars.check_index(a)
    return oracle.element(prop, a)


def oracle_profile(ars: FiniteArs) -> tuple[list[dict[str, bool]], dict[str, bool]]:
    """Every element property at every element, plus every global property."""
    if ars.size > ORACLE_LIMIT:
        raise CapacityExceeded(f"oracle is limited to {ORACLE_LIMIT} elements, got {ars.size}")
    oracle = _Oracle(ars)
    elements = [
        {label: oracle.element(label, a) for label in ELEMENT_PROPERTIES}
        for a in range(ars.size)
    ]
    glob = {label: all(e[label] for e in elements) for label in ELEMENT_PROPERTIES}
    for label in GLOBAL_ONLY:
        glob[label] = oracle.global_only(label)
    return elements, glob
