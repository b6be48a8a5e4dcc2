"""
Six readings of well-foundedness
================================

Accessibility, induction, coreduction, minimal elements (two ways) and the
absence of descending sequences are different definitions.  On a finite
relation evaluated by a program they always agree, and they agree with
acyclicity.
"""

from arskit import build_ars, converse, wf_equivalence_report

order = build_ars("012", [("0", "1"), ("0", "2"), ("1", "2")])
report = wf_equivalence_report(order)
print({n.value: v.holds for n, v in report.verdicts.items()})

#%%
# A rewrite system is terminating when its converse is well-founded.
loop = build_ars("ab", [("a", "b"), ("b", "a")])
report = wf_equivalence_report(converse(loop))
for notion, verdict in report.verdicts.items():
    print(notion.value, verdict.holds, verdict.counterexample)

#%%
# The implications between the notions hold on every instance; the side
# conditions they need are all true at runtime.
print("bridge", report.bridge.as_dict())
print("diagram edges violated:", report.edge_violations())
