import numpy as np
import pytest
from hypothesis import given

from arskit import Closure, FiniteArs, Lasso, PathWitness, build_ars, closure, converse, path_between
from arskit.errors import DuplicateName, IndexOutOfRange, MalformedLasso, UnknownName
from arskit.relations import (
    EnumerableArs,
    bounded_join,
    bounded_reducts,
    find_chain,
    lasso_denotation,
)

from conftest import CE, chain, small_ars


def test_build_two_cycle():
    ars = build_ars(["a", "b"], [("a", "b"), ("b", "a")])
    assert ars.size == 2
    assert len(ars.steps) == 2


def test_build_single_element():
    ars = build_ars(["a"], [])
    assert (ars.size, ars.steps) == (1, ())


def test_build_errors():
    with pytest.raises(DuplicateName):
        build_ars(["a", "a"], [])
    with pytest.raises(UnknownName):
        build_ars(["a"], [("a", "z")])
    with pytest.raises(IndexOutOfRange):
        CE["CE-8"].check_index(2)


def test_duplicate_steps_collapse():
    ars = build_ars("ab", [("a", "b"), ("a", "b"), ("b", "b")])
    assert ars.steps == ((0, 1), (1, 1))


def test_reflexive_transitive_closure():
    m = closure(CE["CE-8"], Closure.REFL_TRANSITIVE)
    assert m.related.all()
    single = closure(build_ars(["a"], []), "reflTransitive")
    assert single.pairs() == [(0, 0)]
    c = closure(chain("a", "b", "c"), "reflTransitive")
    assert c(0, 2) and not c(2, 0)


@given(small_ars())
def test_closure_idempotent(ars):
    for mode in Closure:
        once = closure(ars, mode)
        assert closure(once.as_ars(ars.names), mode) == once


@given(small_ars())
def test_closure_laws(ars):
    star = closure(ars, "reflTransitive")
    assert star.is_reflexive() and star.is_transitive()
    conv = closure(ars, "conversion")
    assert conv.is_reflexive() and conv.is_symmetric() and conv.is_transitive()
    assert np.array_equal(star.related, ars.reach)


def test_converse_examples():
    ab = build_ars("ab", [("a", "b")])
    assert converse(ab).steps == ((1, 0),)
    empty = build_ars("a", [])
    assert converse(empty) == empty
    assert converse(CE["CE-8"]) == CE["CE-8"]


@given(small_ars())
def test_converse_involution(ars):
    assert converse(converse(ars)) == ars


def test_scc_examples():
    view = CE["CE-8"].scc
    assert view.components == ((0, 1),) and view.cyclic == (True,)
    assert not view.condensation_edges
    view = chain("a", "b", "c").scc
    assert len(view.components) == 3 and not any(view.cyclic)
    ce4 = CE["CE-4"]
    view = ce4.scc
    c, d = ce4.index("c"), ce4.index("d")
    assert view.component_of[c] == view.component_of[d]
    assert view.cyclic[view.component_of[c]]
    assert sum(len(m) == 1 for m in view.components) == 3


@given(small_ars())
def test_scc_matches_mutual_reachability(ars):
    view = ars.scc
    r = ars.reach
    for x in range(ars.size):
        for y in range(ars.size):
            same = view.component_of[x] == view.component_of[y]
            assert same == bool(r[x, y] and r[y, x])
    # condensation is acyclic: edges go forward in some topological order
    order = []
    indeg = {c: 0 for c in range(len(view.components))}
    for _, t in view.condensation_edges:
        indeg[t] += 1
    ready = [c for c, k in indeg.items() if k == 0]
    while ready:
        c = ready.pop()
        order.append(c)
        for s, t in view.condensation_edges:
            if s == c:
                indeg[t] -= 1
                if indeg[t] == 0:
                    ready.append(t)
    assert len(order) == len(view.components)


def test_path_between_examples():
    ce8 = CE["CE-8"]
    assert path_between(ce8, 0, 1).nodes == (0, 1)
    assert path_between(ce8, 1, 1).nodes == (1,)
    ce4 = CE["CE-4"]
    assert path_between(ce4, ce4.index("c"), ce4.index("e")) is None


@given(small_ars())
def test_path_between_agrees_with_reach(ars):
    for a in range(ars.size):
        for b in range(ars.size):
            p = path_between(ars, a, b)
            assert (p is not None) == bool(ars.reach[a, b])
            if p is not None:
                assert p.is_valid(ars) and (p.start, p.end) == (a, b)


def test_path_render_and_concat():
    ars = chain("a", "b", "c")
    p = PathWitness((0, 1)).then(PathWitness((1, 2)))
    assert p.render(ars) == "a -> b -> c"
    assert PathWitness((2,)).render(ars) == "c"


def test_lasso_denotation():
    a, b, x, y = 0, 1, 5, 6
    assert lasso_denotation(Lasso((), (a, b)), 3) == b
    assert lasso_denotation(Lasso((x,), (y,)), 0) == x
    assert lasso_denotation(Lasso((x,), (y,)), 7) == y


def test_lasso_validation():
    ce8 = CE["CE-8"]
    assert Lasso((), (0, 1)).is_valid(ce8)
    with pytest.raises(MalformedLasso):
        Lasso((), (0,)).validate(ce8)
    # a reflexive lasso may stall
    assert Lasso((0,), (1,)).is_valid(ce8, reflexive=True)
    with pytest.raises(MalformedLasso):
        Lasso((0,), ()).validate(ce8)


def test_enumerable_helpers():
    nat = EnumerableArs(lambda k: [k + 1])
    assert find_chain(nat, 0, 5) == [0, 1, 2, 3, 4, 5]
    assert set(bounded_reducts(nat, 0, 3)) == {0, 1, 2, 3}
    target, left, right = bounded_join(nat, 0, 2, 3)
    assert target == 2 and left == [0, 1, 2] and right == [2]
    wrapped = EnumerableArs.from_finite(CE["CE-8"])
    assert wrapped.successors(0) == (1,)
