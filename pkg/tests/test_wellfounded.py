import pytest
from hypothesis import given, settings

from arskit import FiniteArs, build_ars, converse, global_profile
from arskit.errors import CapacityExceeded
from arskit.wellfounded import (
    DIAGRAM_EDGES,
    WfNotion,
    accessible_set,
    all_predicates,
    bridge_report,
    counterexample_is_valid,
    is_coreductive,
    is_decreasing,
    is_inductive,
    minimal_elements,
    wf_check,
    wf_equivalence_report,
)

from conftest import CE, small_ars

LOOP = build_ars("a", [("a", "a")])
EMPTY = build_ars("x", [])
# pairs (y, x) read "y is below x"
ORDER = build_ars("012", [("0", "1"), ("0", "2"), ("1", "2")])


def acyclic(rel: FiniteArs) -> bool:
    return not any(rel.scc.cyclic)


def test_accessible_set():
    assert accessible_set(EMPTY) == {0}
    assert accessible_set(LOOP) == set()
    assert accessible_set(ORDER) == {0, 1, 2}


def test_inductive():
    assert is_inductive(ORDER, frozenset({0, 1, 2}))
    ab = build_ars("ab", [("a", "b")])
    assert not is_inductive(ab, frozenset({0}))


def test_coreductive():
    assert is_coreductive(ORDER, frozenset({0, 1, 2}))
    assert is_coreductive(LOOP, frozenset())
    assert not is_coreductive(EMPTY, frozenset())


def test_minimal_elements():
    assert minimal_elements(ORDER, frozenset({1, 2})) == {1}
    assert minimal_elements(LOOP, frozenset({0})) == set()
    assert minimal_elements(CE["CE-4"], frozenset()) == set()


def test_wf_check_examples():
    v = wf_check(LOOP, WfNotion.MIN)
    assert not v.holds and v.counterexample == {0}
    assert all(wf_check(ORDER, n).holds for n in WfNotion)
    ce8 = converse(CE["CE-8"])
    assert not wf_check(ce8, "acc").holds
    v = wf_check(ce8, "seqLasso")
    assert not v.holds and set(v.counterexample.cycle) == {0, 1}
    assert is_decreasing(ce8, v.counterexample)


def test_predicate_limit():
    big = build_ars([f"x{i}" for i in range(13)], [])
    with pytest.raises(CapacityExceeded):
        wf_check(big, WfNotion.IND)
    assert wf_check(big, WfNotion.IND, limit=13).holds


def test_bridge():
    assert bridge_report(EMPTY).acc_cor
    b = bridge_report(converse(CE["CE-3"]))
    assert b.acc_cor
    for x, y in b.acc_cor_witness.items():
        assert y in converse(CE["CE-3"]).predecessors[x]
    assert set(b.as_dict()) == {"Rdec", "FB", "MPseq", "corDNE", "accDNE", "accCor"}


def test_report_examples():
    r = wf_equivalence_report(converse(CE["CE-8"]))
    assert r.agreement and not any(v.holds for v in r.verdicts.values())
    for n in range(1, 6):
        r = wf_equivalence_report(build_ars([f"x{i}" for i in range(n)], []))
        assert r.well_founded


def test_diagram_has_every_node_type():
    nodes = {s for s, _, _ in DIAGRAM_EDGES} | {t for _, t, _ in DIAGRAM_EDGES}
    assert {"acc", "cor", "min", "minDNE", "seq"} <= nodes
    assert len(DIAGRAM_EDGES) == 23


def test_all_three_node_digraphs():
    pairs = [(i, j) for i in range(3) for j in range(3)]
    count = 0
    for mask in range(1 << 9):
        steps = tuple(p for k, p in enumerate(pairs) if mask >> k & 1)
        rel = FiniteArs(("x0", "x1", "x2"), steps)
        r = wf_equivalence_report(rel)
        assert r.agreement and r.well_founded == acyclic(rel)
        assert r.bridge.acc_cor and not r.edge_violations()
        count += 1
    assert count == 512


@settings(max_examples=100)
@given(small_ars())
def test_counterexamples_validate(rel):
    for notion, v in wf_equivalence_report(rel).verdicts.items():
        if not v.holds:
            assert counterexample_is_valid(rel, notion, v.counterexample)


@settings(max_examples=100)
@given(small_ars(max_size=5))
def test_accessible_is_least_inductive(rel):
    acc = accessible_set(rel)
    assert is_inductive(rel, acc)
    full = frozenset(range(rel.size))
    wf = wf_check(rel, "acc").holds
    for p in all_predicates(rel):
        if is_inductive(rel, p):
            assert acc <= p
            assert not wf or p == full
        if is_coreductive(rel, p) and wf:
            assert p == full
        m = minimal_elements(rel, p)
        assert m <= p and not any(y in p for x in m for y in rel.predecessors[x])


@settings(max_examples=150)
@given(small_ars())
def test_accessibility_of_converse_is_sn(ars):
    acc = accessible_set(converse(ars))
    for p in global_profile(ars).elements:
        assert (p.element in acc) == p.sn
