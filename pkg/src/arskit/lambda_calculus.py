"""Untyped lambda calculus with de Bruijn indices as an enumerable rewrite system.

``Var(0)`` refers to the nearest enclosing binder.  Terms are immutable and
compared structurally, so alpha-equivalent terms are equal.

Concrete syntax accepted by :func:`parse_term`::

    term  ::= '\\' NAME+ '.' term | app
    app   ::= atom+                      (left associative)
    atom  ::= NAME | '(' term ')'

``λ`` may be used instead of the backslash.  Free names must be listed in
``context``; the last name of the context is the innermost, i.e. a context
``["x", "y"]`` behaves like the binders ``\\x. \\y.`` around the term.
"""

from __future__ import annotations

import enum
import re
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from .errors import NegativeIndex, ParseError, UnboundName
from .relations import EnumerableArs


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class App:
    function: Term
    argument: Term


@dataclass(frozen=True)
class Abs:
    body: Term


Term = Var | App | Abs

I = Abs(Var(0))
K = Abs(Abs(Var(1)))
OMEGA_HALF = Abs(App(Var(0), Var(0)))
OMEGA = App(OMEGA_HALF, OMEGA_HALF)


def size(t: Term) -> int:
    if isinstance(t, Var):
        return 1
    if isinstance(t, Abs):
        return 1 + size(t.body)
    return 1 + size(t.function) + size(t.argument)


def is_scoped(t: Term, depth: int = 0) -> bool:
    """Every variable refers to one of ``depth`` enclosing binders."""
    if isinstance(t, Var):
        return 0 <= t.index < depth
    if isinstance(t, Abs):
        return is_scoped(t.body, depth + 1)
    return is_scoped(t.function, depth) and is_scoped(t.argument, depth)


def shift(t: Term, amount: int, cutoff: int = 0) -> Term:
    """Add ``amount`` to every free index ``>= cutoff``."""
    if isinstance(t, Var):
        if t.index < cutoff:
            return t
        if t.index + amount < 0:
            raise NegativeIndex(f"shifting Var({t.index}) by {amount} goes below zero")
        return Var(t.index + amount)
    if isinstance(t, Abs):
        return Abs(shift(t.body, amount, cutoff + 1))
    return App(shift(t.function, amount, cutoff), shift(t.argument, amount, cutoff))


def substitute(t: Term, j: int, s: Term) -> Term:
    """Replace ``Var(j)`` by ``s`` in ``t``, shifting ``s`` under binders."""
    if isinstance(t, Var):
        return s if t.index == j else t
    if isinstance(t, Abs):
        return Abs(substitute(t.body, j + 1, shift(s, 1, 0)))
    return App(substitute(t.function, j, s), substitute(t.argument, j, s))


def contract(redex: App) -> Term:
    """``(\\. body) arg  ->  body[0 := arg]``."""
    body = redex.function.body
    return shift(substitute(body, 0, shift(redex.argument, 1, 0)), -1, 0)


def _reducts(t: Term) -> Iterator[Term]:
    # redex positions in leftmost-outermost order
    if isinstance(t, App):
        if isinstance(t.function, Abs):
            yield contract(t)
        for f in _reducts(t.function):
            yield App(f, t.argument)
        for a in _reducts(t.argument):
            yield App(t.function, a)
    elif isinstance(t, Abs):
        for b in _reducts(t.body):
            yield Abs(b)


def redex_reducts(t: Term) -> list[Term]:
    """One reduct per redex position, duplicates kept (for diagnostics)."""
    return list(_reducts(t))


def beta_step_enum(t: Term) -> list[Term]:
    """All one-step beta reducts, leftmost-outermost first, without duplicates."""
    out = []
    for r in _reducts(t):
        if r not in out:
            out.append(r)
    return out


def is_beta_nf(t: Term) -> bool:
    if isinstance(t, Var):
        return True
    if isinstance(t, Abs):
        return is_beta_nf(t.body)
    if isinstance(t.function, Abs):
        return False
    return is_beta_nf(t.function) and is_beta_nf(t.argument)


def leftmost_outermost_step(t: Term) -> Term | None:
    return next(_reducts(t), None)


class Strategy(enum.Enum):
    LEFTMOST_OUTERMOST = "lo"
    FIRST_ENUMERATED = "first"


@dataclass(frozen=True)
class NormalForm:
    term: Term
    path: tuple[Term, ...]

    @property
    def steps(self) -> int:
        return len(self.path) - 1


@dataclass(frozen=True)
class OutOfFuel:
    last: Term
    steps: int


NormalizeResult = NormalForm | OutOfFuel


def normalize(t: Term, strategy: Strategy | str = Strategy.LEFTMOST_OUTERMOST, fuel: int = 1000) -> NormalizeResult:
    """Apply ``strategy`` at most ``fuel`` times."""
    strategy = Strategy(strategy)
    path = [t]
    while True:
        current = path[-1]
        if strategy is Strategy.LEFTMOST_OUTERMOST:
            nxt = leftmost_outermost_step(current)
        else:
            reducts = beta_step_enum(current)
            nxt = reducts[0] if reducts else None
        if nxt is None:
            return NormalForm(current, tuple(path))
        if len(path) > fuel:
            return OutOfFuel(current, fuel)
        path.append(nxt)


def is_valid_normal_form(result: NormalForm) -> bool:
    if not is_beta_nf(result.term) or result.path[-1] != result.term:
        return False
    return all(b in beta_step_enum(a) for a, b in zip(result.path, result.path[1:]))


def as_enumerable_ars() -> EnumerableArs:
    return EnumerableArs(beta_step_enum, pretty)


def closed_terms(max_size: int, depth: int = 0) -> Iterator[Term]:
    """Every term of size ``<= max_size`` scoped under ``depth`` binders."""
    for n in range(1, max_size + 1):
        yield from _terms_of_size(n, depth)


def _terms_of_size(n: int, depth: int) -> Iterator[Term]:
    if n == 1:
        for i in range(depth):
            yield Var(i)
        return
    for body in _terms_of_size(n - 1, depth + 1):
        yield Abs(body)
    for k in range(1, n - 1):
        for f in _terms_of_size(k, depth):
            for a in _terms_of_size(n - 1 - k, depth):
                yield App(f, a)


def conversion_graph(seeds, depth: int) -> dict[Term, set[Term]]:
    """Undirected beta-step graph on everything reachable from ``seeds`` in ``depth`` steps.

    Expansions are only seen where they lie inside this universe, so the
    graph under-approximates conversion; that is the bounded part of a
    bounded conversion search.
    """
    graph: dict[Term, set[Term]] = {}
    frontier = [t for t in seeds]
    for t in frontier:
        graph.setdefault(t, set())
    for _ in range(depth):
        nxt = []
        for t in frontier:
            for r in beta_step_enum(t):
                if r not in graph:
                    graph[r] = set()
                    nxt.append(r)
                graph[t].add(r)
                graph[r].add(t)
        frontier = nxt
    return graph


def conversion_class_within(graph: dict[Term, set[Term]], t: Term, depth: int) -> set[Term]:
    """Terms joined to ``t`` by a zigzag of at most ``depth`` steps in ``graph``."""
    seen = {t}
    frontier = [t]
    for _ in range(depth):
        frontier = [y for x in frontier for y in graph.get(x, ()) if y not in seen]
        seen.update(frontier)
    return seen


# --- concrete syntax -------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<lam>\\|λ)|(?P<dot>\.)|(?P<lp>\()|(?P<rp>\))|(?P<name>[A-Za-z_][A-Za-z0-9_']*))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if m is None:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, context: Sequence[str] | None):
        self.tokens = _tokenize(text)
        self.i = 0
        self.context = context

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.i]

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.peek()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise ParseError(f"expected {kind}, found {what}", tok[2])
        self.i += 1
        return tok

    def term(self, scope: list[str]) -> Term:
        if self.peek()[0] == "lam":
            self.i += 1
            names = [self.expect("name")[1]]
            while self.peek()[0] == "name":
                names.append(self.expect("name")[1])
            self.expect("dot")
            body = self.term(scope + names)
            for _ in names:
                body = Abs(body)
            return body
        return self.application(scope)

    def application(self, scope: list[str]) -> Term:
        t = self.atom(scope)
        while self.peek()[0] in ("name", "lp", "lam"):
            if self.peek()[0] == "lam":
                arg = self.term(scope)
            else:
                arg = self.atom(scope)
            t = App(t, arg)
        return t

    def atom(self, scope: list[str]) -> Term:
        kind, value, pos = self.peek()
        if kind == "lp":
            self.i += 1
            t = self.term(scope)
            self.expect("rp")
            return t
        if kind == "name":
            self.i += 1
            return self.resolve(value, pos, scope)
        what = "end of input" if kind == "eof" else repr(value)
        raise ParseError(f"expected a term, found {what}", pos)

    def resolve(self, name: str, pos: int, scope: list[str]) -> Var:
        if name in scope:
            return Var(len(scope) - 1 - max(i for i, n in enumerate(scope) if n == name))
        if self.context is None:
            raise UnboundName(f"unbound name {name!r} at position {pos}")
        ctx = list(self.context)
        if name not in ctx:
            raise UnboundName(f"name {name!r} at position {pos} is not in the context")
        return Var(len(scope) + len(ctx) - 1 - max(i for i, n in enumerate(ctx) if n == name))


def parse_term(text: str, context: Sequence[str] | None = None) -> Term:
    parser = _Parser(text, context)
    t = parser.term([])
    parser.expect("eof")
    return t


_BINDER_NAMES = "xyzuvwabcdefghpqrst"


def _fresh(depth: int, taken: set[str]) -> str:
    base = _BINDER_NAMES[depth % len(_BINDER_NAMES)]
    name, k = base, 1
    while name in taken:
        name = f"{base}{k}"
        k += 1
    return name


def pretty(t: Term, context: Sequence[str] = ()) -> str:
    """Render ``t`` with generated binder names; inverse of :func:`parse_term`."""
    ctx = list(context)

    def go(t: Term, scope: list[str]) -> str:
        if isinstance(t, Abs):
            name = _fresh(len(scope), set(scope) | set(ctx))
            return f"\\{name}. {go(t.body, scope + [name])}"
        return app(t, scope)

    def app(t: Term, scope: list[str]) -> str:
        if isinstance(t, App):
            f = app(t.function, scope) if isinstance(t.function, App) else atom(t.function, scope)
            return f"{f} {atom(t.argument, scope)}"
        return atom(t, scope)

    def atom(t: Term, scope: list[str]) -> str:
        if isinstance(t, Var):
            if t.index < len(scope):
                return scope[len(scope) - 1 - t.index]
            k = t.index - len(scope)
            if k < len(ctx):
                return ctx[len(ctx) - 1 - k]
            return f"#{t.index}"
        return f"({go(t, scope)})"

    return go(t, [])
