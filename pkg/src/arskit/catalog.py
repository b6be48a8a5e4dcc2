"""The standard counterexamples as executable fixtures.

Finite fixtures carry a total expected profile: one bit per element property
per element, plus every global property.  A few bits are marked ``CITED``;
these are the facts the counterexamples exist to demonstrate.  The rest were
produced once by the brute-force oracle and frozen (``ORACLE``).

CE-6 and CE-7 are infinite.  Keys are integers:

* CE-6: ``n -> 0`` and ``f_i -> i + 1``; ``f_i`` steps to ``n`` and ``f_{i+1}``.
* CE-7: ``n_i -> 2i + 1`` and ``f_i -> 2i + 2``; ``f_i`` steps to ``n_i`` and
  ``f_{i+1}``.

The successor order is part of the fixture: the normal form comes first, so
``normalize_sn`` from ``f_0`` takes the exit immediately.  Their expectations
are bounded evidence (:class:`EvidenceSpec`) plus the property bits that
evidence supports at ``f_0``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from ._goldens import GOLDEN_PROFILES
from .properties import ELEMENT_PROPERTIES, GLOBAL_ONLY, global_profile
from .relations import EnumerableArs, FiniteArs, bounded_join, bounded_reducts, build_ars, find_chain
from .theorems import normalize_sn

EVIDENCE_BOUND = 100


class Provenance(enum.Enum):
    CITED = "cited"
    ORACLE = "oracle"
    BOUNDED = "bounded"


@dataclass(frozen=True)
class Expectation:
    element: str | None  # None for a global bit
    prop: str
    value: bool
    provenance: Provenance


@dataclass(frozen=True)
class EvidenceSpec:
    """Bounded demands on an infinite fixture.

    chain: ``(key, K)``: a reduction of every length ``k <= K`` from ``key``.
    normalizes: ``(key, nf)`` pairs: ``normalize_sn`` from ``key`` ends in ``nf``.
    peaks: ``(keys, depth)``: every single-step peak at these keys joins
    within ``depth`` steps per side.
    normal_forms: ``(key, depth, expected)``: the normal forms reachable from
    ``key`` within ``depth`` steps are exactly ``expected``.
    shared_exit: ``(key, nf, depth)``: every key reachable within ``depth``
    steps of ``key`` reaches ``nf`` within ``depth`` steps.
    """

    chain: tuple | None = None
    normalizes: tuple = ()
    peaks: tuple | None = None
    normal_forms: tuple | None = None
    shared_exit: tuple | None = None


@dataclass(frozen=True)
class Fixture:
    name: str
    system: FiniteArs | EnumerableArs
    expectations: tuple[Expectation, ...]
    evidence: EvidenceSpec | None = None
    note: str = ""

    @property
    def is_finite(self) -> bool:
        return isinstance(self.system, FiniteArs)

    def expected(self, prop: str, element: str | None = None) -> bool | None:
        for e in self.expectations:
            if e.element == element and e.prop == prop:
                return e.value
        return None


# element and global bits the counterexamples are quoted for
CITED_BITS = {
    "CE-2": {None: {"UNred": True, "WM": True, "CR": False}},
    "CE-3": {None: {"NPred": True, "WM": True, "CR": False}},
    "CE-4": {"a": {"SM": True, "WN": True, "SN": False, "WCR": True, "UNred": True, "CR": False}},
    "CE-5": {None: {"UNred": True, "UNconv": False}, "n": {"NF": True, "UNred": True, "UNconv": False}},
}

_CE1 = [("b", "a"), ("b", "c"), ("c", "b"), ("c", "d")]

FINITE_SYSTEMS: dict[str, FiniteArs] = {
    "CE-1": build_ars("abcd", _CE1),
    "CE-2": build_ars("abcd", _CE1 + [("d", "d")]),
    "CE-3": build_ars("abcd", _CE1 + [("d", "d"), ("a", "a")]),
    "CE-4": build_ars("abcde", [("a", "b"), ("a", "e"), ("b", "e"), ("b", "c"), ("c", "d"), ("d", "c")]),
    "CE-5": build_ars(
        ["a", "b", "c", "d", "m", "n"],
        [("c", "n"), ("c", "a"), ("a", "b"), ("b", "a"), ("d", "b"), ("d", "m")],
    ),
    "CE-8": build_ars("ab", [("a", "b"), ("b", "a")]),
    "CE-11": build_ars("abc", [("a", "c"), ("a", "b"), ("b", "a")]),
}


def _terese_trs() -> FiniteArs:
    # p(a) <-> p(b), f(p(a),p(a)) -> k, f(p(b),p(b)) -> k, closed under contexts
    flip = {"p(a)": "p(b)", "p(b)": "p(a)"}
    args = ["p(a)", "p(b)"]
    steps = [("p(a)", "p(b)"), ("p(b)", "p(a)")]
    pairs = [(x, y) for x in args for y in args]
    for x, y in pairs:
        here = f"f({x},{y})"
        steps.append((here, f"f({flip[x]},{y})"))
        steps.append((here, f"f({x},{flip[y]})"))
        if x == y:
            steps.append((here, "k"))
    names = ["a", "b", *args, "k", *(f"f({x},{y})" for x, y in pairs)]
    return build_ars(names, steps)


FINITE_SYSTEMS["terese-trs"] = _terese_trs()


def _ce6_step(key: int) -> list[int]:
    return [] if key == 0 else [0, key + 1]


def _ce6_show(key: int) -> str:
    return "n" if key == 0 else f"f{key - 1}"


def _ce7_step(key: int) -> list[int]:
    return [] if key % 2 else [key - 1, key + 2]


def _ce7_show(key: int) -> str:
    return f"n{(key - 1) // 2}" if key % 2 else f"f{key // 2 - 1}"


CE6 = EnumerableArs(_ce6_step, _ce6_show)
CE7 = EnumerableArs(_ce7_step, _ce7_show)

_B = Provenance.BOUNDED
_K = EVIDENCE_BOUND


def _bits(element, values):
    return tuple(Expectation(element, p, v, _B) for p, v in values.items())


_CE6_BITS = {"WN": True, "SN": False, "WCR": True, "CR": True, "UNred": True, "NPred": True, "MP": True, "WM": True}
_CE7_BITS = {"WN": True, "SN": False, "UNred": False, "CR": False}

_ENUMERABLE = [
    Fixture(
        "CE-6",
        CE6,
        _bits("f0", _CE6_BITS) + _bits(None, _CE6_BITS),
        EvidenceSpec(
            chain=(1, _K),
            normalizes=((1, 0),),
            peaks=(tuple(range(1, _K + 2)), 2),
            normal_forms=(1, _K, (0,)),
            shared_exit=(1, 0, _K),
        ),
        "every f_i has the exit f_i -> n, so all reducts share the normal form n",
    ),
    Fixture(
        "CE-7",
        CE7,
        _bits("f0", _CE7_BITS) + _bits(None, _CE7_BITS),
        EvidenceSpec(
            chain=(2, _K),
            normalizes=((2, 1),),
            normal_forms=(2, _K, tuple(2 * i + 1 for i in range(_K))),
        ),
        "the peak n0 <- f0 -> f1 ->* n1 has two distinct normal forms, so CR fails "
        "at f0 and CE-7 cannot witness CR & WN =/=> SN; CE-6 does",
    ),
]


def _finite_fixture(name: str, ars: FiniteArs) -> Fixture:
    golden = GOLDEN_PROFILES[name]
    cited = CITED_BITS.get(name, {})
    out = []
    for element, true_props in golden.items():
        labels = GLOBAL_ONLY + tuple(ELEMENT_PROPERTIES) if element is None else tuple(ELEMENT_PROPERTIES)
        for prop in labels:
            value = prop in true_props
            pin = cited.get(element, {})
            if prop in pin:
                if pin[prop] != value:
                    raise AssertionError(f"{name}: frozen {prop} at {element} contradicts cited bit")
                out.append(Expectation(element, prop, value, Provenance.CITED))
            else:
                out.append(Expectation(element, prop, value, Provenance.ORACLE))
    return Fixture(name, ars, tuple(out))


def fixtures() -> tuple[Fixture, ...]:
    finite = [_finite_fixture(name, ars) for name, ars in FINITE_SYSTEMS.items()]
    return tuple(finite + _ENUMERABLE)


def fixture(name: str) -> Fixture:
    for f in fixtures():
        if f.name == name:
            return f
    raise KeyError(name)


# --- verification ------------------------------------------------------------


@dataclass(frozen=True)
class Mismatch:
    fixture: str
    element: str | None
    prop: str
    expected: bool
    computed: bool

    def __str__(self):
        where = self.element or "global"
        return f"{self.fixture} {where} {self.prop}: expected {self.expected}, computed {self.computed}"


@dataclass(frozen=True)
class EvidenceResult:
    fixture: str
    demand: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class CatalogReport:
    mismatches: tuple[Mismatch, ...]
    evidence: tuple[EvidenceResult, ...]
    notes: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.mismatches and all(e.ok for e in self.evidence)

    def lines(self) -> list[str]:
        out = [str(m) for m in self.mismatches]
        out += [
            f"{e.fixture} {e.demand}: {'ok' if e.ok else 'FAILED'}" + (f" ({e.detail})" if e.detail else "")
            for e in self.evidence
        ]
        out += [f"note: {n}" for n in self.notes]
        return out


def check_fixture(f: Fixture) -> list[Mismatch]:
    ars = f.system
    profile = global_profile(ars)
    out = []
    for e in f.expectations:
        if e.element is None:
            computed = profile[e.prop]
        else:
            computed = profile.elements[ars.index(e.element)][e.prop]
        if computed != e.value:
            out.append(Mismatch(f.name, e.element, e.prop, e.value, computed))
    return out


def run_evidence(f: Fixture) -> list[EvidenceResult]:
    system, spec, show = f.system, f.evidence, f.system.show
    results = []

    def record(demand, ok, detail=""):
        results.append(EvidenceResult(f.name, demand, ok, detail))

    if spec.chain:
        key, bound = spec.chain
        # a chain of length K from a deterministic search implies all shorter ones
        chain = find_chain(system, key, bound)
        ok = chain is not None and all(b in system.successors(a) for a, b in zip(chain, chain[1:]))
        record(f"chain of length <= {bound} from {show(key)}", ok,
               f"{show(chain[0])} -> ... -> {show(chain[-1])}" if ok else "")
    for key, nf in spec.normalizes:
        reached, path = normalize_sn(system, key, _K)
        record(f"{show(key)} normalizes to {show(nf)}", reached == nf,
               " -> ".join(show(k) for k in path))
    if spec.peaks:
        keys, depth = spec.peaks
        bad = [
            (k, b, c)
            for k in keys
            for b in system.successors(k)
            for c in system.successors(k)
            if b < c and bounded_join(system, b, c, depth) is None
        ]
        record(f"single-step peaks at {len(keys)} keys join within {depth}", not bad,
               f"unjoined {bad[0]}" if bad else "")
    if spec.normal_forms:
        key, depth, expected = spec.normal_forms
        found = tuple(sorted(k for k in bounded_reducts(system, key, depth) if not system.successors(k)))
        record(f"normal forms within {depth} steps of {show(key)}", found == tuple(expected),
               f"{len(found)} found")
    if spec.shared_exit:
        key, nf, depth = spec.shared_exit
        reducts = bounded_reducts(system, key, depth)
        stuck = [k for k in reducts if nf not in bounded_reducts(system, k, depth)]
        record(f"every reduct of {show(key)} within {depth} steps reaches {show(nf)}", not stuck,
               f"{show(stuck[0])} does not" if stuck else "")
    return results


def verify_catalog() -> CatalogReport:
    mismatches, evidence, notes = [], [], []
    for f in fixtures():
        if f.is_finite:
            mismatches += check_fixture(f)
        else:
            evidence += run_evidence(f)
            notes.append(f"{f.name}: {f.note}")
    return CatalogReport(tuple(mismatches), tuple(evidence), tuple(notes))
