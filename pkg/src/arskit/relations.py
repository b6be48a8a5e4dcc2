"""Finite rewrite relations, closure operators and reduction witnesses.

Elements of a :class:`FiniteArs` are addressed by their integer index; the
display name of element ``i`` is ``ars.names[i]``.  Successors are always
iterated in increasing index order, which makes every witness returned by
this package deterministic.

Infinite reduction sequences are represented by a :class:`Lasso` (a finite
stem followed by a cycle repeated forever).  On a finite system this loses
nothing for the sequence-quantified properties: an infinite walk on finitely
many elements revisits some element, so any offending sequence can be
replaced by an eventually periodic one.
"""

from __future__ import annotations

import enum
from collections import deque
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DuplicateName, IndexOutOfRange, MalformedLasso, UnknownName


@dataclass(frozen=True)
class FiniteArs:
    """An explicit element universe with a single step relation."""

    names: tuple[str, ...]
    steps: tuple[tuple[int, int], ...]

    def __post_init__(self):
        names = tuple(self.names)
        if len(set(names)) != len(names):
            seen = set()
            dup = next(n for n in names if n in seen or seen.add(n))
            raise DuplicateName(f"element name {dup!r} occurs twice")
        steps = tuple(sorted({(int(a), int(b)) for a, b in self.steps}))
        for a, b in steps:
            if not (0 <= a < len(names) and 0 <= b < len(names)):
                raise IndexOutOfRange(f"step ({a}, {b}) outside universe of size {len(names)}")
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "steps", steps)

    @property
    def size(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.names]
        for a, b in self.steps:
            out[a].append(b)
        return tuple(tuple(s) for s in out)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in self.names]
        for a, b in self.steps:
            out[b].append(a)
        return tuple(tuple(sorted(p)) for p in out)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownName(f"no element named {name!r}") from None

    def check_index(self, i: int) -> int:
        if not 0 <= i < self.size:
            raise IndexOutOfRange(f"element index {i} outside universe of size {self.size}")
        return i

    def has_step(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a, b])

    @cached_property
    def adjacency(self) -> np.ndarray:
        m = np.zeros((self.size, self.size), dtype=bool)
        for a, b in self.steps:
            m[a, b] = True
        m.setflags(write=False)
        return m

    @cached_property
    def reach(self) -> np.ndarray:
        """Dense reflexive-transitive closure ``R^*`` (read-only)."""
        m = closure(self, Closure.REFL_TRANSITIVE).related
        m.setflags(write=False)
        return m

    @cached_property
    def scc(self) -> SccView:
        return scc_view(self)

    def reachable(self, a: int) -> list[int]:
        return [int(b) for b in np.flatnonzero(self.reach[a])]

    def render(self, i: int) -> str:
        return self.names[i]


def build_ars(names: Sequence[str], steps: Iterable[tuple[str, str]]) -> FiniteArs:
    """Build a system from element names and name pairs.

    Duplicate steps are dropped; self-loops are kept.
    """
    names = tuple(names)
    if not names:
        raise ValueError("an ARS needs at least one element")
    if len(set(names)) != len(names):
        FiniteArs(names, ())  # raises DuplicateName with the offending name
    index = {n: i for i, n in enumerate(names)}
    pairs = []
    for a, b in steps:
        for n in (a, b):
            if n not in index:
                raise UnknownName(f"step ({a!r}, {b!r}) mentions unknown element {n!r}")
        pairs.append((index[a], index[b]))
    return FiniteArs(names, tuple(pairs))


def converse(ars: FiniteArs) -> FiniteArs:
    return FiniteArs(ars.names, tuple((b, a) for a, b in ars.steps))


class Closure(enum.Enum):
    REFLEXIVE = "reflexive"
    SYMMETRIC = "symmetric"
    TRANSITIVE = "transitive"
    REFL_TRANSITIVE = "reflTransitive"
    CONVERSION = "conversion"


@dataclass(frozen=True, eq=False)
class RelMatrix:
    """A materialized relation; ``related[a, b]`` holds iff ``a`` relates to ``b``."""

    related: np.ndarray

    @property
    def size(self) -> int:
        return self.related.shape[0]

    def __call__(self, a: int, b: int) -> bool:
        return bool(self.related[a, b])

    def __eq__(self, other):
        if not isinstance(other, RelMatrix):
            return NotImplemented
        return np.array_equal(self.related, other.related)

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self.related)]

    def as_ars(self, names: Sequence[str]) -> FiniteArs:
        return FiniteArs(tuple(names), tuple(self.pairs()))

    def is_reflexive(self) -> bool:
        return bool(np.all(np.diag(self.related)))

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.related, self.related.T))

    def is_transitive(self) -> bool:
        m = self.related.astype(np.int64)
        return bool(np.all(self.related | ~((m @ m) > 0)))


def _transitive(m: np.ndarray) -> np.ndarray:
    m = m.copy()
    for k in range(m.shape[0]):
        m |= np.outer(m[:, k], m[k, :])
    return m


def closure(ars: FiniteArs, mode: Closure | str) -> RelMatrix:
    """Materialize a closure of the step relation (Floyd-Warshall)."""
    mode = Closure(mode)
    m = ars.adjacency.copy()
    eye = np.eye(ars.size, dtype=bool)
    if mode is Closure.REFLEXIVE:
        m |= eye
    elif mode is Closure.SYMMETRIC:
        m |= m.T
    elif mode is Closure.TRANSITIVE:
        m = _transitive(m)
    elif mode is Closure.REFL_TRANSITIVE:
        m = _transitive(m | eye)
    else:
        m = _transitive(m | m.T | eye)
    return RelMatrix(m)


@dataclass(frozen=True)
class SccView:
    """Strongly connected components of ``R^*`` and their condensation.

    Components are numbered by their smallest member index.
    """

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    condensation_edges: frozenset[tuple[int, int]]
    cyclic: tuple[bool, ...]

    def is_sink(self, c: int) -> bool:
        return not any(src == c for src, _ in self.condensation_edges)

    def successors(self, c: int) -> list[int]:
        return sorted(dst for src, dst in self.condensation_edges if src == c)


def scc_view(ars: FiniteArs) -> SccView:
    reach = ars.reach
    mutual = reach & reach.T
    component_of = [-1] * ars.size
    components: list[tuple[int, ...]] = []
    for x in range(ars.size):
        if component_of[x] < 0:
            members = tuple(int(y) for y in np.flatnonzero(mutual[x]))
            for y in members:
                component_of[y] = len(components)
            components.append(members)
    edges = {
        (component_of[a], component_of[b])
        for a, b in ars.steps
        if component_of[a] != component_of[b]
    }
    cyclic = tuple(
        len(members) > 1 or ars.has_step(members[0], members[0]) for members in components
    )
    return SccView(tuple(component_of), tuple(components), frozenset(edges), cyclic)


@dataclass(frozen=True)
class PathWitness:
    """A finite reduction ``nodes[0] -> nodes[1] -> ... -> nodes[-1]``."""

    nodes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "nodes", tuple(int(n) for n in self.nodes))
        if not self.nodes:
            raise ValueError("a path has at least one node")

    @property
    def start(self) -> int:
        return self.nodes[0]

    @property
    def end(self) -> int:
        return self.nodes[-1]

    @property
    def length(self) -> int:
        return len(self.nodes) - 1

    def then(self, other: PathWitness) -> PathWitness:
        if other.start != self.end:
            raise ValueError(f"cannot append a path from {other.start} to one ending at {self.end}")
        return PathWitness(self.nodes + other.nodes[1:])

    def is_valid(self, ars: FiniteArs) -> bool:
        if not all(0 <= n < ars.size for n in self.nodes):
            return False
        return all(ars.has_step(a, b) for a, b in zip(self.nodes, self.nodes[1:]))

    def render(self, ars: FiniteArs) -> str:
        return " -> ".join(ars.names[n] for n in self.nodes)


def path_between(ars: FiniteArs, source: int, target: int) -> PathWitness | None:
    """Shortest reduction from ``source`` to ``target``, or ``None``.

    Breadth-first with successors in increasing index order, so ties are
    broken towards lower indices.
    """
    ars.check_index(source)
    ars.check_index(target)
    parent = {source: source}
    queue = deque([source])
    while queue:
        x = queue.popleft()
        if x == target:
            nodes = [x]
            while nodes[-1] != source:
                nodes.append(parent[nodes[-1]])
            return PathWitness(tuple(reversed(nodes)))
        for y in ars.successors[x]:
            if y not in parent:
                parent[y] = x
                queue.append(y)
    return None


@dataclass(frozen=True)
class Lasso:
    """The infinite sequence ``stem . cycle . cycle . ...``."""

    stem: tuple[int, ...]
    cycle: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "stem", tuple(int(x) for x in self.stem))
        object.__setattr__(self, "cycle", tuple(int(x) for x in self.cycle))

    def at(self, k: int) -> int:
        if k < 0:
            raise IndexError("lasso positions are nonnegative")
        if not self.cycle:
            raise MalformedLasso("lasso has an empty cycle")
        if k < len(self.stem):
            return self.stem[k]
        return self.cycle[(k - len(self.stem)) % len(self.cycle)]

    @property
    def first(self) -> int:
        return self.at(0)

    def elements(self) -> tuple[int, ...]:
        return self.stem + self.cycle

    def transitions(self) -> list[tuple[int, int]]:
        seq = self.stem + self.cycle
        return list(zip(seq, seq[1:])) + [(self.cycle[-1], self.cycle[0])]

    def validate(self, ars: FiniteArs, reflexive: bool = False) -> None:
        """Raise :class:`MalformedLasso` unless every transition is a step.

        With ``reflexive=True`` a transition may also repeat an element
        (steps of ``R^r``).
        """
        if not self.cycle:
            raise MalformedLasso("lasso has an empty cycle")
        for x in self.elements():
            if not 0 <= x < ars.size:
                raise MalformedLasso(f"lasso mentions index {x} outside the universe")
        for a, b in self.transitions():
            if not (ars.has_step(a, b) or (reflexive and a == b)):
                raise MalformedLasso(f"{ars.names[a]} -> {ars.names[b]} is not a step")

    def is_valid(self, ars: FiniteArs, reflexive: bool = False) -> bool:
        try:
            self.validate(ars, reflexive)
        except MalformedLasso:
            return False
        return True


def lasso_denotation(lasso: Lasso, k: int) -> int:
    return lasso.at(k)


@dataclass(frozen=True)
class EnumerableArs:
    """A possibly infinite system given by its one-step reducts.

    ``step`` must be deterministic and return exactly the one-step reducts of
    a key, which makes the relation both decidable and finitely branching.
    """

    step: Callable[[Hashable], Sequence[Hashable]]
    show: Callable[[Hashable], str] = str

    def successors(self, key) -> tuple:
        return tuple(self.step(key))

    @classmethod
    def from_finite(cls, ars: FiniteArs) -> EnumerableArs:
        return cls(lambda i: ars.successors[i], lambda i: ars.names[i])


def find_chain(system: EnumerableArs, start, length: int) -> list | None:
    """A reduction of exactly ``length`` steps from ``start``, by depth-first search."""
    path = [start]

    def extend(depth: int) -> bool:
        if depth == length:
            return True
        for nxt in system.successors(path[-1]):
            path.append(nxt)
            if extend(depth + 1):
                return True
            path.pop()
        return False

    # iterative version of ``extend`` would only matter for chains longer
    # than the recursion limit; catalog demands stop at 100
    return list(path) if extend(0) else None


def bounded_reducts(system: EnumerableArs, start, depth: int) -> dict:
    """Map every key reachable within ``depth`` steps to a shortest path to it."""
    paths = {start: [start]}
    frontier = [start]
    for _ in range(depth):
        nxt_frontier = []
        for key in frontier:
            for nxt in system.successors(key):
                if nxt not in paths:
                    paths[nxt] = paths[key] + [nxt]
                    nxt_frontier.append(nxt)
        frontier = nxt_frontier
    return paths


def bounded_join(system: EnumerableArs, left, right, depth: int):
    """Search for a common reduct of ``left`` and ``right`` within ``depth`` steps each.

    Returns ``(target, path_from_left, path_from_right)`` with the target
    minimizing the combined path length, or ``None``.
    """
    from_left = bounded_reducts(system, left, depth)
    from_right = bounded_reducts(system, right, depth)
    best = None
    for key, lpath in from_left.items():
        rpath = from_right.get(key)
        if rpath is not None:
            cost = len(lpath) + len(rpath)
            if best is None or cost < best[0]:
                best = (cost, key, lpath, rpath)
    if best is None:
        return None
    return best[1], best[2], best[3]
