import pytest
from hypothesis import given, settings

from arskit import (
    FiniteArs,
    build_ars,
    cofinality_join,
    cr_to_cofinality,
    decide_conversion,
    generalized_newman_join,
    global_profile,
    join_pair,
    make_peak,
    newman_join,
    normalize_sn,
    theorem_suite,
    wn_un_join,
)
from arskit.catalog import CE6
from arskit.errors import FuelExhausted, PreconditionFailed
from arskit.properties import CofinalityWitness, Peak
from arskit.relations import Lasso, PathWitness
from arskit.theorems import JoinMethod, bound_from_wn_un, join_with

from conftest import CE, DIAMOND, chain, small_ars


def peak(ars, apex, left, right):
    return make_peak(ars, ars.index(apex), ars.index(left), ars.index(right))


def test_newman_diamond():
    j = newman_join(DIAMOND, peak(DIAMOND, "a", "b", "c"), 10)
    assert DIAMOND.names[j.target] == "d"
    assert j.closes(peak(DIAMOND, "a", "b", "c")) and j.is_valid(DIAMOND)


def test_newman_needs_sn():
    with pytest.raises(PreconditionFailed) as err:
        newman_join(CE["CE-8"], peak(CE["CE-8"], "a", "a", "b"), 10)
    assert err.value.condition == "SN"


def test_newman_names_wcr_failure():
    ars = build_ars("abcd", [("a", "b"), ("a", "c"), ("b", "d")])
    with pytest.raises(PreconditionFailed) as err:
        newman_join(ars, peak(ars, "a", "b", "c"), 10)
    assert err.value.condition == "WCR" and err.value.element == 0


def test_generalized_newman_on_cycle():
    ce8 = CE["CE-8"]
    j = generalized_newman_join(ce8, peak(ce8, "a", "b", "a"), 10)
    assert ce8.names[j.target] == "b"
    assert j.from_left.nodes == (1,) and j.from_right.nodes == (0, 1)


def test_generalized_newman_matches_newman_when_sn():
    p = peak(DIAMOND, "a", "b", "c")
    assert generalized_newman_join(DIAMOND, p, 10) == newman_join(DIAMOND, p, 10)


def test_generalized_newman_reports_wcr_at_b():
    ce4 = CE["CE-4"]
    with pytest.raises(PreconditionFailed) as err:
        generalized_newman_join(ce4, peak(ce4, "a", "b", "e"), 10)
    assert err.value.condition == "WCR" and ce4.names[err.value.element] == "b"


def test_wn_un_join():
    ce11 = CE["CE-11"]
    j = wn_un_join(ce11, peak(ce11, "a", "c", "b"))
    assert ce11.names[j.target] == "c"
    assert j.from_right.render(ce11) == "b -> a -> c"
    ce5 = CE["CE-5"]
    with pytest.raises(PreconditionFailed) as err:
        wn_un_join(ce5, peak(ce5, "c", "a", "n"))
    assert err.value.condition == "WN" and ce5.names[err.value.element] == "a"
    single = build_ars("x", [])
    assert wn_un_join(single, make_peak(single, 0, 0, 0)).target == 0


def test_cofinality_join():
    ce8 = CE["CE-8"]
    w = cr_to_cofinality(ce8, 0)
    assert w.is_valid(ce8) and set(w.coverage) == {0, 1}
    spin = CofinalityWitness(Lasso((), (0, 1)), {0: (0, PathWitness((0,))), 1: (1, PathWitness((1,)))})
    assert spin.is_valid(ce8)
    j = cofinality_join(ce8, spin, peak(ce8, "a", "a", "b"))
    assert j.target == 1 and j.is_valid(ce8)
    w = cr_to_cofinality(DIAMOND, 0)
    j = cofinality_join(DIAMOND, w, peak(DIAMOND, "a", "b", "c"))
    assert DIAMOND.names[j.target] == "d"
    empty = CofinalityWitness(Lasso((), (0, 1)), {})
    with pytest.raises(PreconditionFailed):
        cofinality_join(ce8, empty, peak(ce8, "a", "a", "b"))


def test_cr_to_cofinality_failures_and_nf():
    ce4 = CE["CE-4"]
    with pytest.raises(PreconditionFailed) as err:
        cr_to_cofinality(ce4, 0)
    assert tuple(ce4.names[i] for i in err.value.evidence) == ("e", "c")
    nf = build_ars("x", [])
    w = cr_to_cofinality(nf, 0)
    assert w.sequence.elements() == (0,) and w.coverage[0][0] == 0


def test_normalize_sn():
    assert normalize_sn(CE6, 1, 10) == (0, [1, 0])
    assert normalize_sn(chain("a", "b", "c"), 0, 5) == (2, [0, 1, 2])
    with pytest.raises(FuelExhausted):
        normalize_sn(CE["CE-8"], 0, 100)


def test_decide_conversion():
    d = decide_conversion(chain("a", "b", "c"), 0, 2)
    assert d.convertible and d.left.end == d.right.end == 2
    assert not decide_conversion(build_ars("xy", []), 0, 1).convertible
    with pytest.raises(PreconditionFailed):
        decide_conversion(CE["CE-5"], 0, 1)


def test_bound_from_wn_un():
    ars = build_ars(["a", "b", "n"], [("a", "b"), ("b", "a"), ("a", "n")])
    assert bound_from_wn_un(ars, Lasso((), (0, 1))) == 2
    with pytest.raises(PreconditionFailed):
        bound_from_wn_un(CE["CE-8"], Lasso((), (0, 1)))
    loop = build_ars(["x", "m"], [("x", "x"), ("x", "m")])
    assert bound_from_wn_un(loop, Lasso((), (0,))) == 1


@pytest.mark.parametrize("name", ["CE-8", "CE-4"])
def test_theorem_suite_on_counterexamples(name):
    assert theorem_suite(CE[name]).holds


def test_theorem_suite_diamond():
    report = theorem_suite(DIAMOND)
    assert report.holds and not report.failures()


def all_peaks(ars: FiniteArs):
    for a in range(ars.size):
        for b in ars.reachable(a):
            for c in ars.reachable(a):
                yield make_peak(ars, a, b, c)


@settings(max_examples=150)
@given(small_ars(max_size=5))
def test_joins_validate_and_agree_with_oracle(ars):
    g = global_profile(ars)
    for p in all_peaks(ars):
        oracle = join_pair(ars, p.left.end, p.right.end)
        if g["SN"] and g["WCR"]:
            j = newman_join(ars, p, ars.size + 1)
            assert j.is_valid(ars) and j.closes(p)
        if g["WCR"] and g.elements[p.apex].sm:
            j = generalized_newman_join(ars, p, ars.size + 1)
            assert j.is_valid(ars) and j.closes(p)
        if g["WN"] and g["UNred"]:
            assert wn_un_join(ars, p).closes(p)
        if g.elements[p.apex].cr:
            w = cr_to_cofinality(ars, p.apex)
            assert w.is_valid(ars)
            j = cofinality_join(ars, w, p)
            assert j.is_valid(ars) and j.closes(p)
        else:
            assert join_with(JoinMethod.EXHAUSTIVE, ars, p) == oracle
        if oracle is not None:
            assert oracle.is_valid(ars) and oracle.closes(p)


@settings(max_examples=150)
@given(small_ars())
def test_theorem_suite_always_holds(ars):
    assert theorem_suite(ars).holds


@settings(max_examples=150)
@given(small_ars())
def test_normalize_reaches_nf_when_sn(ars):
    g = global_profile(ars)
    for p in g.elements:
        if p.sn:
            nf, path = normalize_sn(ars, p.element, ars.size + 1)
            assert not ars.successors[nf]
            assert PathWitness(tuple(path)).is_valid(ars)


def test_peak_validation():
    bogus = Peak(0, PathWitness((1,)), PathWitness((0,)))
    with pytest.raises(ValueError):
        newman_join(DIAMOND, bogus, 10)
